"""Verification suites run over the bundled catalog.

Every suite contributes Check records to one GroupRecord per group; a group
taking part in several suites is summarized once.
"""

__all__ = [
    "Check",
    "GroupRecord",
    "SuiteRunner",
    "SUITE_ORDER",
    "group_summary",
]

import logging
import sys
from collections import OrderedDict

import numpy as np
import progressbar as pb

from grpinv.algebra.classification import case_number, classification_match
from grpinv.algebra.invariants import (
    b_invariant,
    invariant_report,
    laitinen_number,
    npp_orders,
    rank,
)
from grpinv.algebra.matmod import (
    determinant_lemma,
    direct_sum,
    io_kernel_basis,
    io_kernel_modules,
    linear_characters,
    linear_module,
    orientation_check,
    pq_pair_modules,
    random_module,
    random_orthogonal,
    tensor_product,
    trivial_module,
    two_group_reduction,
)
from grpinv.algebra.predicates import (
    gap_status,
    is_cp,
    is_ep,
    is_oliver,
    noncyclic_sylow_count,
)
from grpinv.algebra.properties import (
    abelian_centralizer_check,
    coset_meeting_check,
    direct_factor_check,
    eight_condition,
    monotonicity_check,
    nonsolvable_check,
    odd_fitting_check,
    odd_order_check,
    quotient_inheritance_check,
    pq_quotient_check,
    sandwich_check,
    two_npp_classes_check,
    two_npp_orders_check,
    v_g_large_check,
    v_g_parity_check,
)
from grpinv.algebra.repmod import (
    VirtualCharacter,
    construct_pq_pair,
    cyclic_pq_quotients,
    is_l_free,
    membership,
    pq_exponents,
    v_g_character,
    v_g_fixed_dim,
)
from grpinv.core.common import (
    CASE,
    CHECK_REF,
    CHECK_STATUS,
    GAP,
    GAP_MODE,
    MEMBERSHIP,
    RANK,
    RESIDUAL,
    STRUCTURE,
    SUITE,
    CapExceeded,
    GroupComputationError,
)
from grpinv.core.config import get_config
from grpinv.perm.group import SubgroupRef
from grpinv.perm.subgroups import normal_subgroups, residual, structure
from grpinv.util import is_prime_power

SUITE_ORDER = [SUITE.RANKS, SUITE.CLASSIFICATION, SUITE.VGG, SUITE.PQPAIR, SUITE.ORIENTATION]

# rk IO(G, H) for H = G or H = G^sol
RANK_FIXTURES = {
    "S6": [("G^sol", 1)],
    "S7": [("G^sol", 3), ("G", 4)],
    "A8": [("G", 2)],
    "A9": [("G", 4)],
}
LO_FIXTURES = {"S6": (1, 1), "S7": (3, 3), "Aut(A6)": (0, 0)}
VGG_DIMENSIONS = {"S6": 718}
PQ_EXPONENTS = {(3, 5): (7, 11)}

# published claim b_{G/H} > 1, where the definition as stated gives 1
B_CLAIMS = {"A5xZ3": "G^sol"}

# simple groups of the classification with an element of order 8
EIGHT_CONDITION = ("PSL(2,17)", "PSL(3,3)", "M11", "M22")


class Check(object):
    def __init__(self, id, ref, status, got=None, expected=None):
        self.id = id
        self.ref = ref
        self.status = status
        self.got = got
        self.expected = expected

    def __repr__(self):
        return "<Check {} {}>".format(self.id, self.status)

    def to_dict(self):
        return {
            "id": self.id,
            "ref": self.ref.lower(),
            "status": self.status,
            "got": self.got,
            "expected": self.expected,
        }


class GroupRecord(object):
    def __init__(self, summary):
        self.summary = summary
        self.checks = []

    @property
    def name(self):
        return self.summary["group"]

    def to_dict(self):
        result = dict(self.summary)
        result["checks"] = [c.to_dict() for c in self.checks]
        return result


def _compare(id, ref, got, expected):
    status = CHECK_STATUS.PASS if got == expected else CHECK_STATUS.FAIL
    return Check(id, ref, status, got, expected)


def _property(id, ref, result):
    if not result.applicable:
        return Check(id, ref, CHECK_STATUS.SKIP)
    status = CHECK_STATUS.PASS if result.holds else CHECK_STATUS.FAIL
    return Check(id, ref, status, result.detail, True)


def _normal(G, which):
    if which == "G^sol":
        return residual(G, RESIDUAL.SOLVABLE)
    return normal_subgroups(G)[-1]


def group_summary(G, gap_mode=GAP_MODE.SUFFICIENT, gap_cap=None):
    """the group-level fields of a report entry"""
    report = invariant_report(G)
    oliver, witness = is_oliver(G)
    verdict = classification_match(G)
    summary = report.to_dict()
    summary.update(
        {
            "lo_exact": report.lo_exact,
            "oliver": oliver,
            "oliver_witness": dict(witness._asdict()) if witness else None,
            "cp": is_cp(G),
            "ep": is_ep(G),
            "gap": gap_status(G, gap_mode, gap_cap),
            "gap_mode": gap_mode,
            "classification_case": case_number(verdict.matched_case)
            if verdict.matched_case
            else None,
        }
    )
    return summary, report, verdict


class SuiteRunner(object):
    """Runs suites over catalog entries and collects one record per group."""

    def __init__(self, catalog, exact_gap=False, include_heavy=False, progress=True):
        self.__logger = logging.getLogger(__name__)
        self.catalog = catalog
        self.exact_gap = exact_gap
        self.include_heavy = include_heavy
        self.progress = progress
        self.records = OrderedDict()
        self._reports = {}
        self._verdicts = {}
        self._groups = {}
        config = get_config()
        self.gap_mode = GAP_MODE.EXACT if exact_gap else GAP_MODE.SUFFICIENT
        self.gap_cap = config.heavy_gap_cap if include_heavy else config.exact_gap_cap

    def run(self, suite):
        suites = SUITE_ORDER if suite == SUITE.ALL else [suite]
        for name in suites:
            entries = self.catalog.select(name.lower(), self.include_heavy)
            self.__logger.info("suite %s: %d groups", name.lower(), len(entries))
            bar = None
            if self.progress and len(entries) > 1:
                bar = pb.ProgressBar(max_value=len(entries), fd=sys.stderr)
                bar.start()
            for i, entry in enumerate(entries):
                self.__run_entry(name, entry)
                if bar is not None:
                    bar.update(i + 1)
            if bar is not None:
                bar.finish()
        return list(self.records.values())

    def __record(self, entry):
        if entry.name in self.records:
            return self.records[entry.name], self._groups.get(entry.name)
        try:
            G = self.catalog.build(entry.name)
            summary, report, verdict = group_summary(G, self.gap_mode, self.gap_cap)
        except CapExceeded as e:
            self.__logger.warning("%s skipped: %s", entry.name, e)
            record = GroupRecord({"group": entry.name, "order": entry.order})
            record.checks.append(Check("build", CHECK_REF.TRIVIAL, CHECK_STATUS.SKIP, str(e)))
            self.records[entry.name] = record
            return record, None
        except GroupComputationError as e:
            self.__logger.error("%s failed: %s", entry.name, e)
            record = GroupRecord({"group": entry.name, "order": entry.order})
            record.checks.append(Check("build", CHECK_REF.TRIVIAL, CHECK_STATUS.FAIL, str(e)))
            self.records[entry.name] = record
            return record, None
        record = GroupRecord(summary)
        self._reports[entry.name] = report
        self._verdicts[entry.name] = verdict
        self._groups[entry.name] = G
        self.records[entry.name] = record
        return record, G

    def __run_entry(self, suite, entry):
        record, G = self.__record(entry)
        if G is None:
            return
        method = getattr(self, "_" + suite.lower())
        try:
            checks = method(G, entry)
        except CapExceeded as e:
            self.__logger.warning("%s: suite %s skipped: %s", G.name, suite.lower(), e)
            checks = [Check(suite.lower(), CHECK_REF.DERIVED, CHECK_STATUS.SKIP, str(e))]
        except GroupComputationError as e:
            self.__logger.error("%s: suite %s failed: %s", G.name, suite.lower(), e)
            checks = [Check(suite.lower(), CHECK_REF.DERIVED, CHECK_STATUS.FAIL, str(e))]
        for check in checks:
            self.__logger.debug("%s: %s %s", G.name, check.id, check.status)
        record.checks.extend(checks)

    # -- suites ---------------------------------------------------------------

    def _ranks(self, G, entry):
        report = self._reports[entry.name]
        a = report.a_g
        checks = []
        if entry.a_g is not None:
            checks.append(_compare("a_g", CHECK_REF.PUBLISHED, a, entry.a_g))
        if entry.npp_orders is not None:
            checks.append(
                _compare("npp_orders", CHECK_REF.PUBLISHED, npp_orders(G), sorted(entry.npp_orders))
            )
        checks.append(_compare("rank_io", CHECK_REF.TRIVIAL, rank(G, RANK.IO), a))
        checks.append(_compare("rank_io_gg", CHECK_REF.PUBLISHED, report.rank_io_gg, max(a - 1, 0)))
        checks.append(
            _compare("b_g_g", CHECK_REF.DERIVED, b_invariant(G, _normal(G, "G")), min(a, 1))
        )
        checks.append(
            _compare(
                "fix_rank_oracle",
                CHECK_REF.DERIVED,
                [row.oracle for row in report.b_table],
                [row.b for row in report.b_table],
            )
        )
        for which, expected in RANK_FIXTURES.get(entry.name, []):
            H = _normal(G, which)
            checks.append(
                _compare(
                    "rank_io_gh[{}]".format(which),
                    CHECK_REF.PUBLISHED,
                    rank(G, RANK.IO_GH, H),
                    expected,
                )
            )
        if entry.name in LO_FIXTURES:
            checks.append(
                _compare(
                    "lo_bounds",
                    CHECK_REF.PUBLISHED,
                    [report.lo_lower, report.lo_upper],
                    list(LO_FIXTURES[entry.name]),
                )
            )
        if entry.name in B_CLAIMS:
            checks.append(self.__b_claim(G, entry))
        checks.extend(
            [
                _property("sandwich", CHECK_REF.PUBLISHED, sandwich_check(G)),
                _property("monotonicity", CHECK_REF.PUBLISHED, monotonicity_check(G)),
                _property("two_npp_classes", CHECK_REF.PUBLISHED, two_npp_classes_check(G)),
                _property("two_npp_orders", CHECK_REF.PUBLISHED, two_npp_orders_check(G)),
                _property("nonsolvable", CHECK_REF.PUBLISHED, nonsolvable_check(G)),
                _property("odd_order", CHECK_REF.PUBLISHED, odd_order_check(G)),
                _property("pq_quotient", CHECK_REF.PUBLISHED, pq_quotient_check(G)),
                _property("coset_meeting", CHECK_REF.PUBLISHED, coset_meeting_check(G)),
                _property(
                    "quotient_inheritance", CHECK_REF.PUBLISHED, quotient_inheritance_check(G)
                ),
                _property("direct_factor", CHECK_REF.PUBLISHED, direct_factor_check(G)),
                _property(
                    "abelian_centralizer", CHECK_REF.PUBLISHED, abelian_centralizer_check(G)
                ),
                _property("odd_fitting", CHECK_REF.PUBLISHED, odd_fitting_check(G)),
            ]
        )
        return checks

    def __b_claim(self, G, entry):
        H = _normal(G, B_CLAIMS[entry.name])
        b = b_invariant(G, H)
        if b > 1:
            return Check("b_claim", CHECK_REF.PUBLISHED, CHECK_STATUS.PASS, b, "> 1")
        self.__logger.warning(
            "%s: b_{G/H} = %d for |H| = %d, published as > 1", G.name, b, H.order
        )
        return Check("b_claim", CHECK_REF.PUBLISHED, CHECK_STATUS.WARN, b, "> 1")

    def _classification(self, G, entry):
        verdict = self._verdicts[entry.name]
        checks = [
            Check(
                "classification_consistent",
                CHECK_REF.PUBLISHED,
                CHECK_STATUS.PASS if verdict.consistent else CHECK_STATUS.FAIL,
                verdict.matched_case,
                verdict.is_oliver and verdict.a_g <= 1,
            )
        ]
        if entry.case is not None:
            checks.append(
                _compare("classification_case", CHECK_REF.PUBLISHED, verdict.matched_case, entry.case)
            )
        oliver = verdict.is_oliver
        if not structure(G, STRUCTURE.SOLVABLE):
            checks.append(_compare("oliver_nonsolvable", CHECK_REF.PUBLISHED, oliver, True))
        elif structure(G, STRUCTURE.CYCLIC):
            checks.append(_compare("oliver_cyclic", CHECK_REF.TRIVIAL, oliver, False))
        elif structure(G, STRUCTURE.NILPOTENT):
            checks.append(
                _compare(
                    "oliver_nilpotent",
                    CHECK_REF.PUBLISHED,
                    oliver,
                    noncyclic_sylow_count(G) >= 3,
                )
            )
        if is_cp(G):
            checks.append(_compare("cp_laitinen", CHECK_REF.TRIVIAL, laitinen_number(G), 0))
        if entry.case in (CASE.PSL2_SMALL, CASE.SIMPLE_LIST):
            checks.append(
                _compare(
                    "eight_condition",
                    CHECK_REF.PUBLISHED,
                    eight_condition(G),
                    entry.name in EIGHT_CONDITION,
                )
            )
        if entry.gap is not None:
            checks.append(self.__gap(G, entry))
        return checks

    def __gap(self, G, entry):
        if entry.heavy_gap and self.exact_gap and not self.include_heavy:
            return Check("gap", CHECK_REF.PUBLISHED, CHECK_STATUS.SKIP, None, entry.gap)
        got = self.records[entry.name].summary["gap"]
        if got == GAP.UNKNOWN:
            return Check("gap", CHECK_REF.PUBLISHED, CHECK_STATUS.SKIP, got, entry.gap)
        return _compare("gap", CHECK_REF.PUBLISHED, got, entry.gap)

    def _vgg(self, G, entry):
        checked, skipped, failures = v_g_parity_check(G)
        got = {"checked": checked, "skipped": skipped, "failures": len(failures)}
        if checked == 0:
            dichotomy = Check("vgg_dichotomy", CHECK_REF.PUBLISHED, CHECK_STATUS.SKIP, got)
        else:
            dichotomy = Check(
                "vgg_dichotomy",
                CHECK_REF.PUBLISHED,
                CHECK_STATUS.FAIL if failures else CHECK_STATUS.PASS,
                got,
                {"failures": 0},
            )
        trivial = SubgroupRef(G, generators=[], elements=[G.identity])
        dimension = v_g_character(G).net.degree
        checks = [
            dichotomy,
            _property("vgg_large", CHECK_REF.PUBLISHED, v_g_large_check(G)),
            _compare("vgg_dimension", CHECK_REF.DERIVED, dimension, v_g_fixed_dim(G, trivial)),
        ]
        if entry.name in VGG_DIMENSIONS:
            checks.append(
                _compare(
                    "vgg_dimension_value",
                    CHECK_REF.DERIVED,
                    dimension,
                    VGG_DIMENSIONS[entry.name],
                )
            )
        return checks

    def _pqpair(self, G, entry):
        quotients = cyclic_pq_quotients(G)
        if not quotients:
            return [Check("pq_quotient", CHECK_REF.DERIVED, CHECK_STATUS.SKIP, None)]
        tolerance = get_config().integrality_tol
        checks = []
        for N, p, q in quotients:
            suffix = "[|N|={}]".format(N.order)
            exponents = pq_exponents(p, q)
            if (p, q) in PQ_EXPONENTS:
                checks.append(
                    _compare(
                        "pq_exponents" + suffix,
                        CHECK_REF.PUBLISHED,
                        list(exponents),
                        list(PQ_EXPONENTS[(p, q)]),
                    )
                )
            rU, rV = construct_pq_pair(G, N)
            difference = VirtualCharacter(rU, rV)
            U, V = pq_pair_modules(G, N)
            matrices_agree = all(
                abs(complex(x) - complex(y)) <= tolerance
                for M, chi in ((U, rU), (V, rV))
                for x, y in zip(M.character().values, chi.character.values)
            )
            checks.extend(
                [
                    _compare(
                        "pq_pair_l_free" + suffix,
                        CHECK_REF.PUBLISHED,
                        is_l_free(rU) and is_l_free(rV),
                        True,
                    ),
                    _compare(
                        "pq_pair_io" + suffix,
                        CHECK_REF.PUBLISHED,
                        membership(difference, MEMBERSHIP.IO),
                        True,
                    ),
                    _compare(
                        "pq_pair_lo" + suffix,
                        CHECK_REF.PUBLISHED,
                        membership(difference, MEMBERSHIP.LO),
                        True,
                    ),
                    _compare(
                        "pq_pair_distinct" + suffix,
                        CHECK_REF.PUBLISHED,
                        rU.character.equals(rV.character, tolerance),
                        False,
                    ),
                    _compare("pq_pair_matrices" + suffix, CHECK_REF.DERIVED, matrices_agree, True),
                ]
            )
        checks.append(_property("pq_quotient", CHECK_REF.PUBLISHED, pq_quotient_check(G)))
        return checks

    def _orientation(self, G, entry):
        config = get_config()
        tolerance = config.integrality_tol
        rng = np.random.default_rng(config.random_seed)
        samples = config.orientation_samples
        pq = pq_pair_modules(G) if cyclic_pq_quotients(G) else None
        kernel = bool(io_kernel_basis(G))
        two_elements = [
            c.representative
            for c in G.conjugacy_classes()
            if c.element_order > 1 and is_prime_power(c.element_order) and c.element_order % 2 == 0
        ]
        twists = [linear_module(G, chi) for chi in linear_characters(G)]
        twists = [L for L in twists if L.fixed_rank(G.elements) == 0]
        counts = {
            "precondition": 0,
            "orientation": 0,
            "distinct": 0,
            "rejected": 0,
            "lemma": 0,
            "lemma_applied": 0,
            "reduction": 0,
            "reduction_applied": 0,
        }
        for i in range(samples):
            W = random_module(G, rng)
            U = W
            V = W.conjugate_by(random_orthogonal(W.dimension, rng))
            if kernel and i % 2 == 0:
                A, B = io_kernel_modules(G, rng)
                U, V = direct_sum(A, U), direct_sum(B, V)
            elif pq is not None:
                U = direct_sum(U, pq[0])
                V = direct_sum(V, pq[1])
            if not U.character().equals(V.character(), tolerance):
                counts["distinct"] += 1
            report = orientation_check(U, V)
            if not report.precondition:
                counts["precondition"] += 1
            elif not report.passed:
                counts["orientation"] += 1
            for t in two_elements:
                applicable, holds = determinant_lemma(U, V, t)
                if applicable:
                    counts["lemma_applied"] += 1
                    if not holds:
                        counts["lemma"] += 1
            if twists:
                # trivial summands against a nontrivial linear character
                L = twists[i % len(twists)]
                ones = direct_sum(*[trivial_module(G)] * L.dimension)
                if not orientation_check(direct_sum(ones, W), direct_sum(L, W)).precondition:
                    counts["rejected"] += 1
                R = W.nonfixed_part()
                applicable, agree = two_group_reduction(R, tensor_product(R, L))
                if applicable:
                    counts["reduction_applied"] += 1
                    if not agree:
                        counts["reduction"] += 1
        self.__logger.info("%s: %d module pairs, counts %s", G.name, samples, counts)

        def status(failures, applied=True):
            if not applied:
                return CHECK_STATUS.SKIP
            return CHECK_STATUS.FAIL if failures else CHECK_STATUS.PASS

        return [
            Check(
                "orientation",
                CHECK_REF.PUBLISHED,
                status(
                    counts["precondition"]
                    + counts["orientation"]
                    + (kernel and not counts["distinct"]),
                    samples > 0,
                ),
                {
                    "samples": samples,
                    "non_isomorphic": counts["distinct"],
                    "precondition_failures": counts["precondition"],
                    "failures": counts["orientation"],
                },
                {"failures": 0},
            ),
            Check(
                "orientation_rejects",
                CHECK_REF.DERIVED,
                status(samples - counts["rejected"], samples > 0 and bool(twists)),
                {"rejected": counts["rejected"]},
                {"rejected": samples},
            ),
            Check(
                "determinant_lemma",
                CHECK_REF.PUBLISHED,
                status(counts["lemma"], counts["lemma_applied"] > 0),
                {"applied": counts["lemma_applied"], "failures": counts["lemma"]},
                {"failures": 0},
            ),
            Check(
                "two_group_reduction",
                CHECK_REF.PUBLISHED,
                status(counts["reduction"], counts["reduction_applied"] > 0),
                {"applied": counts["reduction_applied"], "failures": counts["reduction"]},
                {"failures": 0},
            ),
        ]
