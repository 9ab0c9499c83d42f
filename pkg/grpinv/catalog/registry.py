"""Group catalog: bundled metadata, named groups and the expression builder.

An expression is a constructor call ``Name(arg, ...)`` whose arguments are
integers or further expressions (``Direct(Sym(3), Cyc(5))``), a catalog name
or label (``PSL(3,4):2``, ``Aut(A6)``), a bundled group file record
(``M11``) or a short alias (``S7``, ``A9``, ``Z15``, ``D6``).
"""

__all__ = ["Catalog", "CatalogEntry", "default_catalog", "build", "parse_expression"]

import glob
import logging
import os
import re
import threading

from grpinv.catalog.constructors import CONSTRUCTORS
from grpinv.catalog.loader import read_specs
from grpinv.core.common import CapExceeded, OrderMismatch, ParseError, UnknownName
from grpinv.core.config import get_config
from grpinv.core.yaml_config import YamlConfig

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")
CATALOG_FILE = os.path.join(DATA_DIR, "catalog.yml")

ALIAS_RE = re.compile(r"^(?P<family>[SAZD])(?P<n>\d+)$")
ALIASES = {"S": "Sym", "A": "Alt", "Z": "Cyc", "D": "Dih"}
TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),]))")

_default = None
_default_lock = threading.Lock()


class CatalogEntry(object):
    """metadata of one catalog group"""

    FIELDS = (
        "name",
        "expr",
        "order",
        "labels",
        "a_g",
        "npp_orders",
        "case",
        "gap",
        "tags",
        "suites",
        "heavy",
        "heavy_gap",
        "metadata_only",
    )

    def __init__(self, document):
        unknown = set(document) - set(self.FIELDS)
        if unknown:
            raise ValueError(
                "catalog entry {} has unknown fields {}".format(
                    document.get("name"), sorted(unknown)
                )
            )
        self.name = document["name"]
        self.expr = document.get("expr", self.name)
        self.order = document.get("order")
        self.labels = tuple(document.get("labels") or ())
        self.a_g = document.get("a_g")
        self.npp_orders = document.get("npp_orders")
        self.case = document.get("case")
        self.gap = document.get("gap")
        self.tags = tuple(document.get("tags") or ())
        self.suites = tuple(document.get("suites") or ())
        self.heavy = bool(document.get("heavy", False))
        self.heavy_gap = bool(document.get("heavy_gap", False))
        self.metadata_only = bool(document.get("metadata_only", False))

    def __repr__(self):
        return "<CatalogEntry {} order={}>".format(self.name, self.order)

    def names(self):
        return (self.name,) + self.labels


def _compact(text):
    return re.sub(r"\s+", "", text)


def parse_expression(text):
    """Parse ``Name(arg, ...)`` into nested ``(name, [args])`` tuples.

    Integer arguments stay integers; a bare name has no argument list
    (``args`` is None).
    """
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = TOKEN_RE.match(stripped, position)
        if match is None or match.end() == position:
            raise ParseError(1, position + 1, text, "unexpected character")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind) + 1))
        position = match.end()
    tokens.append(("end", None, len(stripped) + 1))

    def expect(index, value):
        kind, token, column = tokens[index]
        if token != value:
            raise ParseError(1, column, text, "expected {!r}".format(value))
        return index + 1

    def parse_term(index):
        kind, token, column = tokens[index]
        if kind == "int":
            return int(token), index + 1
        if kind != "name":
            raise ParseError(1, column, text, "expected a name or an integer")
        index += 1
        if tokens[index][1] != "(":
            return (token, None), index
        index += 1
        args = []
        if tokens[index][1] != ")":
            while True:
                arg, index = parse_term(index)
                args.append(arg)
                if tokens[index][1] == ",":
                    index += 1
                    continue
                break
        index = expect(index, ")")
        return (token, args), index

    tree, index = parse_term(0)
    if tokens[index][0] != "end":
        raise ParseError(1, tokens[index][2], text, "trailing input")
    if isinstance(tree, int):
        raise ParseError(1, 1, text, "an expression must name a group")
    return tree


class Catalog(object):
    """Bundled and user supplied groups.

    Built groups are cached per expression; a group is built once even when
    several threads ask for it.
    """

    def __init__(self, metadata_file=CATALOG_FILE, group_files=None):
        self.__logger = logging.getLogger(__name__)
        self.__lock = threading.RLock()
        self._groups = {}
        self.entries = []
        self._by_name = {}
        self._specs = {}
        if metadata_file is not None:
            for document in YamlConfig(metadata_file).get("groups"):
                self.add_entry(CatalogEntry(document))
        if group_files is None:
            group_files = sorted(glob.glob(os.path.join(DATA_DIR, "*.grp")))
        for path in group_files:
            self.add_group_file(path)

    def __repr__(self):
        return "<Catalog {} entries, {} group records>".format(
            len(self.entries), len(self._specs)
        )

    def add_entry(self, entry):
        self.entries.append(entry)
        for name in entry.names():
            self._by_name.setdefault(_compact(name), entry)

    def add_group_file(self, path):
        """register the records of a group file; returns their names"""
        specs = read_specs(path)
        for spec in specs:
            self._specs[spec.name] = spec
        self.__logger.debug("%d group records from %s", len(specs), path)
        return [spec.name for spec in specs]

    def entry(self, name):
        return self._by_name.get(_compact(name))

    def select(self, suite=None, include_heavy=False):
        """entries taking part in a suite (all enumerable entries by default)"""
        chosen = []
        for entry in self.entries:
            if entry.metadata_only:
                continue
            if entry.heavy and not include_heavy:
                continue
            if suite is not None and suite not in entry.suites:
                continue
            chosen.append(entry)
        return chosen

    # -- building ----------------------------------------------------------

    def build(self, expr):
        """the enumerated group for a name or constructor expression"""
        key = _compact(expr)
        with self.__lock:
            if key in self._groups:
                return self._groups[key]
            entry = self.entry(key)
            if entry is not None:
                # every label of an entry shares one group
                name = _compact(entry.name)
                G = self._groups.get(name) or self.__build_entry(entry)
                self._groups[name] = G
            else:
                G = self.__evaluate(parse_expression(expr), expr)
            self._groups[key] = G
            return G

    def __build_entry(self, entry):
        if entry.metadata_only:
            raise CapExceeded(entry.name, get_config().element_cap, entry.order)
        G = self.__named(entry.expr)
        if G is None:
            G = self.__evaluate(parse_expression(entry.expr), entry.expr)
        G.name = entry.name
        G.labels = tuple(sorted(set(G.labels) | set(entry.labels)))
        G.metadata["catalog"] = entry
        if entry.order is not None and entry.order <= get_config().element_cap:
            if G.order != entry.order:
                raise OrderMismatch(entry.name, entry.order, G.order)
        return G

    def __named(self, name):
        spec = self._specs.get(name)
        if spec is not None:
            return spec.build()
        match = ALIAS_RE.match(name)
        if match is not None:
            function, _ = CONSTRUCTORS[ALIASES[match.group("family")]]
            return function(int(match.group("n")))
        if name in CONSTRUCTORS and CONSTRUCTORS[name][1] == 0:
            return CONSTRUCTORS[name][0]()
        return None

    def __evaluate(self, tree, text):
        name, args = tree
        if args is None:
            entry = self.entry(name)
            if entry is not None:
                return self.build(entry.name)
            G = self.__named(name)
            if G is None:
                raise UnknownName(name)
            return G
        if name not in CONSTRUCTORS:
            raise UnknownName(name)
        function, arity = CONSTRUCTORS[name]
        if arity is None:
            groups = []
            for arg in args:
                if isinstance(arg, int):
                    raise ParseError(1, 1, text, "{} takes groups".format(name))
                groups.append(self.__evaluate(arg, text))
            return function(*groups)
        if len(args) != arity or not all(isinstance(a, int) for a in args):
            raise ParseError(
                1, 1, text, "{} takes {} integer arguments".format(name, arity)
            )
        try:
            return function(*args)
        except ValueError as e:
            raise ParseError(1, 1, text, str(e))


def default_catalog():
    """the shared catalog of bundled groups plus configured extra files"""
    global _default
    with _default_lock:
        if _default is None:
            _default = Catalog()
            for path in get_config().extra_catalogs:
                _default.add_group_file(path)
        return _default


def build(expr):
    return default_catalog().build(expr)
