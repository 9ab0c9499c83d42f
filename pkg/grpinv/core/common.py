__all__ = [
    "RESIDUAL",
    "RANK",
    "MEMBERSHIP",
    "PARITY",
    "GAP",
    "GAP_MODE",
    "STRUCTURE",
    "CHECK_STATUS",
    "CHECK_REF",
    "SUITE",
    "CASE",
    "GroupComputationError",
    "CapExceeded",
    "NotNormal",
    "BadPair",
    "BadQuotient",
    "ParseError",
    "OrderMismatch",
    "UnknownName",
    "NumericalFailure",
]

from grpinv.util import Enumerator

RESIDUAL = Enumerator("OP", "SOLVABLE", "NILPOTENT")
RANK = Enumerator("IO", "IO_GG", "IO_GH")
MEMBERSHIP = Enumerator("IO", "IO_GG", "IO_GH", "LO")
PARITY = Enumerator("ODD", "EVEN")
GAP = Enumerator("GAP", "NOT_GAP", "UNKNOWN")
GAP_MODE = Enumerator("SUFFICIENT", "EXACT")
STRUCTURE = Enumerator(
    "CYCLIC",
    "ABELIAN",
    "NILPOTENT",
    "SOLVABLE",
    "PERFECT",
    "P_GROUP",
    "ELEMENTARY_ABELIAN",
)
CHECK_STATUS = Enumerator("PASS", "FAIL", "WARN", "SKIP")
CHECK_REF = Enumerator("PUBLISHED", "DERIVED", "TRIVIAL")
SUITE = Enumerator("RANKS", "CLASSIFICATION", "VGG", "PQPAIR", "ORIENTATION", "ALL")
# classification of Oliver groups with Laitinen number at most one, in order
CASE = Enumerator(
    "PSL2_SMALL",
    "SIMPLE_LIST",
    "PGL_LIST",
    "PSL34_GRAPH_FIELD",
    "FITTING_C2C2C3",
    "FITTING_ODD_ABELIAN",
    "FITTING_C3_CUBED",
    "FITTING_C2_4_SQUARED",
    "FITTING_C2_8_SPLIT",
    "FITTING_C2_3_GL32",
    "FITTING_C2_4_A6",
    "FITTING_C2_8_M10",
    "FITTING_C2_ELEMENTARY",
)


class GroupComputationError(Exception):
    pass


class CapExceeded(GroupComputationError):
    def __init__(self, name, cap, reached, *args):
        message = "Group {}: size {} exceeds the configured cap of {}".format(
            name, reached, cap
        )
        self.name = name
        self.cap = cap
        self.reached = reached
        super(CapExceeded, self).__init__(message)


class NotNormal(GroupComputationError):
    def __init__(self, group, subgroup_order, *args):
        message = "Subgroup of order {} is not normal in {}".format(
            subgroup_order, group
        )
        self.group = group
        self.subgroup_order = subgroup_order
        super(NotNormal, self).__init__(message)


class BadPair(GroupComputationError):
    def __init__(self, p_order, h_order, reason, *args):
        message = "({}, {}) is not a proper pair: {}".format(p_order, h_order, reason)
        self.p_order = p_order
        self.h_order = h_order
        self.reason = reason
        super(BadPair, self).__init__(message)


class BadQuotient(GroupComputationError):
    def __init__(self, group, reason, *args):
        message = "Group {}: {}".format(group, reason)
        self.group = group
        self.reason = reason
        super(BadQuotient, self).__init__(message)


class ParseError(GroupComputationError):
    def __init__(self, line, column, text, reason, *args):
        message = "line {} column {}: {} in {!r}".format(line, column, reason, text)
        self.line = line
        self.column = column
        self.text = text
        self.reason = reason
        super(ParseError, self).__init__(message)


class OrderMismatch(GroupComputationError):
    def __init__(self, name, expected, got, *args):
        message = "Group {}: expected order {}, enumerated {}".format(
            name, expected, got
        )
        self.name = name
        self.expected = expected
        self.got = got
        super(OrderMismatch, self).__init__(message)


class UnknownName(GroupComputationError):
    def __init__(self, name, *args):
        message = "Unknown group or constructor: {}".format(name)
        self.name = name
        super(UnknownName, self).__init__(message)


class NumericalFailure(GroupComputationError):
    def __init__(self, what, value, tolerance, *args):
        message = "{}: value {!r} outside tolerance {}".format(what, value, tolerance)
        self.what = what
        self.value = value
        self.tolerance = tolerance
        super(NumericalFailure, self).__init__(message)
