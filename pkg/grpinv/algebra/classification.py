"""Matching Oliver groups with Laitinen number at most one against the
thirteen cases of their classification.

The almost simple cases are recognized by catalog label and order. The
others are recognized from the Fitting subgroup F = F(G): its isomorphism
type (order, exponent, commutativity), the element order histogram of G/F,
and where needed F²(G) or the action of G on F checked element by element.
"""

__all__ = ["ClassificationVerdict", "classification_match", "case_number"]

import logging
from collections import OrderedDict

from grpinv.algebra.invariants import laitinen_number, normal_quotient
from grpinv.algebra.predicates import is_oliver
from grpinv.core.common import CASE, STRUCTURE
from grpinv.perm.permutation import compose, conjugate, inverse
from grpinv.perm.subgroups import coset_order, fitting, fitting2, structure
from grpinv.util import prime_power_base

logger = logging.getLogger(__name__)

LABELLED_CASES = OrderedDict(
    [
        (
            CASE.PSL2_SMALL,
            {
                "PSL(2,5)": 60,
                "PSL(2,7)": 168,
                "PSL(2,8)": 504,
                "PSL(2,9)": 360,
                "PSL(2,11)": 660,
                "PSL(2,13)": 1092,
                "PSL(2,17)": 2448,
            },
        ),
        (
            CASE.SIMPLE_LIST,
            {
                "PSL(3,3)": 5616,
                "PSL(3,4)": 20160,
                "Sz(8)": 29120,
                "Sz(32)": 32537600,
                "A7": 2520,
                "M11": 7920,
                "M22": 443520,
            },
        ),
        (
            CASE.PGL_LIST,
            {"PGL(2,5)": 120, "PGL(2,7)": 336, "PSigmaL(2,8)": 1512, "M10": 720},
        ),
        (CASE.PSL34_GRAPH_FIELD, {"PSL(3,4):u": 40320}),
    ]
)

# element order histograms standing in for isomorphism types of G/F
SL23 = {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}
BINARY_S4 = {1: 1, 2: 1, 3: 8, 4: 18, 6: 8, 8: 12}
PSU32 = {1: 1, 2: 9, 3: 8, 4: 54}
C3SQ_C8 = {1: 1, 2: 9, 3: 8, 4: 18, 8: 36}
A4 = {1: 1, 2: 3, 3: 8}
A4_A4 = {1: 1, 2: 15, 3: 80, 6: 48}
C4 = {1: 1, 2: 1, 4: 2}
GL32 = {1: 1, 2: 21, 3: 56, 4: 42, 7: 48}
A5 = {1: 1, 2: 15, 3: 20, 5: 24}
S5 = {1: 1, 2: 25, 3: 20, 4: 30, 5: 24, 6: 20}
A6 = {1: 1, 2: 45, 3: 80, 4: 90, 5: 144}
M10 = {1: 1, 2: 45, 3: 80, 4: 270, 5: 144, 8: 180}
SL28 = {1: 1, 2: 63, 3: 56, 7: 216, 9: 168}
SZ8 = {1: 1, 2: 455, 4: 3640, 5: 5824, 7: 12480, 13: 6720}
SZ32_ORDER = 32537600
C2SQ_C3 = {1: 1, 2: 3, 3: 2, 6: 6}


def case_number(case):
    """1 for the first case, 13 for the last"""
    return list(CASE).index(case) + 1


class ClassificationVerdict(object):
    def __init__(self, group, is_oliver, a_g, matched_case, checks):
        self.group = group
        self.is_oliver = is_oliver
        self.a_g = a_g
        self.matched_case = matched_case
        self.checks = checks

    def __repr__(self):
        return "<ClassificationVerdict {} case={}>".format(self.group, self.matched_case)

    @property
    def consistent(self):
        """a case matches exactly for Oliver groups with a_G <= 1"""
        if self.is_oliver and self.a_g <= 1:
            return self.matched_case is not None
        return self.matched_case is None

    def to_dict(self):
        return {
            "group": self.group,
            "oliver": self.is_oliver,
            "a_g": self.a_g,
            "case": case_number(self.matched_case) if self.matched_case else None,
            "case_name": self.matched_case,
            "consistent": self.consistent,
            "checks": [{"assertion": text, "pass": passed} for text, passed in self.checks],
        }


class _Structure(object):
    """lazily computed F(G), G/F and F²(G)"""

    def __init__(self, G):
        self.G = G
        self._quotient_histogram = None

    @property
    def F(self):
        return fitting(self.G)

    @property
    def quotient_histogram(self):
        if self._quotient_histogram is None:
            self._quotient_histogram = normal_quotient(self.G, self.F).order_histogram()
        return self._quotient_histogram

    def fitting_is_elementary(self, p, rank=None):
        F = self.F
        if F.order == 1 or prime_power_base(F.order) != p:
            return False
        if rank is not None and F.order != p ** rank:
            return False
        return structure(F, STRUCTURE.ELEMENTARY_ABELIAN, p)


def _labelled(G, case):
    names = (G.name,) + tuple(G.labels)
    known = LABELLED_CASES[case]
    for name in names:
        if name in known:
            yield "label {} with order {}".format(name, known[name]), G.order == known[name]
            yield "F(G) = 1", fitting(G).order == 1
            return
    yield "label in {}".format(sorted(known)), False


def _fitting_c2c2c3(G, s):
    yield "|G| = 72", G.order == 72
    F = s.F
    yield "F(G) ≅ C2²×C3 by fingerprint", (
        F.order == 12
        and structure(F, STRUCTURE.ABELIAN)
        and F.as_group().order_histogram() == C2SQ_C3
    )


def _inverted_by_involution(G, F):
    lower = F.class_set
    for c in G.conjugacy_classes():
        if coset_order(G, c.representative, lower) == 2:
            t = c.representative
            t_inv = inverse(t)
            return all(conjugate(f, t, t_inv) == inverse(f) for f in F.elements)
    return False


def _fitting_odd_abelian(G, s):
    F = s.F
    p = prime_power_base(F.order) if F.order > 1 else None
    yield "F(G) an abelian p-group, p odd", (
        p is not None and p % 2 == 1 and structure(F, STRUCTURE.ABELIAN)
    )
    yield "G/F(G) ≅ SL(2,3) or Ŝ4 by histogram", s.quotient_histogram in (SL23, BINARY_S4)
    yield "F(G) inverted by the unique involution of G/F(G)", _inverted_by_involution(G, F)


def _fitting_c3_cubed(G, s):
    yield "F(G) ≅ C3³", s.fitting_is_elementary(3, 3)
    yield "G/F(G) ≅ A4 by histogram", s.quotient_histogram == A4


def _fitting_c2_4_squared(G, s):
    yield "F(G) ≅ C2⁴", s.fitting_is_elementary(2, 4)
    F2 = fitting2(G)
    yield "F²(G) ≅ A4×A4 by histogram", F2.as_group().order_histogram() == A4_A4
    yield "G/F²(G) ≅ C4", normal_quotient(G, F2).order_histogram() == C4


def _fitting_c2_8_split(G, s):
    yield "F(G) ≅ C2⁸", s.fitting_is_elementary(2, 8)
    yield "G/F(G) ≅ PSU(3,2) or C3²⋊C8 by histogram", s.quotient_histogram in (
        PSU32,
        C3SQ_C8,
    )


def _fitting_c2_3_gl32(G, s):
    yield "F(G) ≅ C2³", s.fitting_is_elementary(2, 3)
    yield "G/F(G) ≅ GL(3,2) by histogram", s.quotient_histogram == GL32


def _fitting_c2_4_a6(G, s):
    yield "F(G) ≅ C2⁴", s.fitting_is_elementary(2, 4)
    yield "G/F(G) ≅ A6 by histogram", s.quotient_histogram == A6


def _fitting_c2_8_m10(G, s):
    yield "F(G) ≅ C2⁸", s.fitting_is_elementary(2, 8)
    yield "G/F(G) ≅ M10 by histogram", s.quotient_histogram == M10


def _fixed_point_free_odd(G, F):
    """C_F(x) = 1 for every x of odd order > 1"""
    identity = G.identity
    for c in G.conjugacy_classes():
        if c.element_order % 2 == 0 or c.element_order == 1:
            continue
        x = c.representative
        for f in F.elements:
            if f != identity and compose(f, x) == compose(x, f):
                return False
    return True


def _fitting_c2_elementary(G, s):
    yield "F(G) a nontrivial elementary abelian 2-group", s.fitting_is_elementary(2)
    histogram = s.quotient_histogram
    yield "G/F(G) ≅ SL(2,4), ΣL(2,4), SL(2,8), Sz(8) or Sz(32)", (
        histogram in (A5, S5, SL28, SZ8) or sum(histogram.values()) == SZ32_ORDER
    )
    yield "C_F(x) = 1 for every x of odd order", _fixed_point_free_odd(G, s.F)


STRUCTURAL_CASES = OrderedDict(
    [
        (CASE.FITTING_C2C2C3, _fitting_c2c2c3),
        (CASE.FITTING_ODD_ABELIAN, _fitting_odd_abelian),
        (CASE.FITTING_C3_CUBED, _fitting_c3_cubed),
        (CASE.FITTING_C2_4_SQUARED, _fitting_c2_4_squared),
        (CASE.FITTING_C2_8_SPLIT, _fitting_c2_8_split),
        (CASE.FITTING_C2_3_GL32, _fitting_c2_3_gl32),
        (CASE.FITTING_C2_4_A6, _fitting_c2_4_a6),
        (CASE.FITTING_C2_8_M10, _fitting_c2_8_m10),
        (CASE.FITTING_C2_ELEMENTARY, _fitting_c2_elementary),
    ]
)


def _run(case, assertions, checks):
    """record assertions up to the first failure; True if all hold"""
    for text, passed in assertions:
        checks.append(("({}) {}".format(case_number(case), text), bool(passed)))
        if not passed:
            return False
    return True


def classification_match(G):
    oliver, _ = is_oliver(G)
    a = laitinen_number(G)
    checks = []
    matched = None
    if oliver:
        s = _Structure(G)
        for case in CASE:
            if case in LABELLED_CASES:
                assertions = _labelled(G, case)
            else:
                assertions = STRUCTURAL_CASES[case](G, s)
            if _run(case, assertions, checks):
                if matched is None:
                    matched = case
                else:
                    logger.warning(
                        "%s matches both case %d and case %d",
                        G.name,
                        case_number(matched),
                        case_number(case),
                    )
    verdict = ClassificationVerdict(G.name, oliver, a, matched, checks)
    if not verdict.consistent:
        logger.warning(
            "%s: Oliver=%s a_G=%d but matched case %s", G.name, oliver, a, matched
        )
    return verdict
