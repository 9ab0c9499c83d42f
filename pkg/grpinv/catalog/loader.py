__all__ = ["GroupSpec", "parse_group_file", "parse_group_json", "load", "save"]

import io
import json
import logging
import os
import re

import pandas as pd

from grpinv.core.common import CapExceeded, OrderMismatch, ParseError
from grpinv.core.config import get_config
from grpinv.perm.group import FiniteGroup
from grpinv.perm.permutation import parse_cycles
from grpinv.util import to_json

HEADER_RE = re.compile(r"^group\s+(?P<name>\S+)(?P<fields>(\s+[\w-]+=\S*)*)\s*$")
FIELD_RE = re.compile(r"([\w-]+)=(\S*)")

logger = logging.getLogger(__name__)


class GroupSpec(object):
    """One group record of a group file"""

    def __init__(
        self, name, degree, generators, order=None, tags=(), labels=(), source=None
    ):
        self.name = name
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        self.order = order
        self.tags = tuple(tags)
        self.labels = tuple(labels)
        self.source = source

    def __repr__(self):
        return "<GroupSpec {} degree={} order={}>".format(
            self.name, self.degree, self.order
        )

    def build(self, verify=True):
        """The FiniteGroup of this record, order checked when enumerable"""
        G = FiniteGroup(
            self.generators, degree=self.degree, name=self.name, labels=self.labels
        )
        G.metadata.update({"tags": list(self.tags), "source": self.source})
        if verify and self.order is not None:
            if self.order > get_config().element_cap:
                logger.warning(
                    "%s: order %d is above the element cap, metadata only",
                    self.name,
                    self.order,
                )
                G.metadata["metadata_only"] = True
                return G
            try:
                got = G.order
            except CapExceeded:
                raise OrderMismatch(self.name, self.order, "more than the cap")
            if got != self.order:
                raise OrderMismatch(self.name, self.order, got)
        return G


def _parse_images(text, degree, line):
    body = text.strip()[1:-1].replace(",", " ").split()
    try:
        images = tuple(int(x) - 1 for x in body)
    except ValueError:
        raise ParseError(line, 1, text, "bad image list")
    if len(images) != degree or sorted(images) != list(range(degree)):
        raise ParseError(line, 1, text, "image list is not a permutation of 1..{}".format(degree))
    return images


def _parse_header(match, text, line):
    fields = dict(FIELD_RE.findall(match.group("fields")))
    if "degree" not in fields:
        raise ParseError(line, 1, text, "group header needs degree=")
    try:
        degree = int(fields["degree"])
        order = int(fields["order"]) if fields.get("order") else None
    except ValueError:
        raise ParseError(line, 1, text, "degree and order must be integers")
    split = lambda key: [x for x in fields.get(key, "").split(",") if x]
    return {
        "name": match.group("name"),
        "degree": degree,
        "order": order,
        "tags": split("tags"),
        "labels": split("labels"),
        "generators": [],
    }


def parse_group_file(text, source=None):
    """Parse the text group format into GroupSpec records.

    ``group <name> degree=<d> order=<n> tags=<csv>`` starts a record and each
    following non-blank line is a generator in 1-based cycle notation (or a
    bracketed image list); ``#`` starts a comment.
    """
    records = []
    current = None
    for number, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0].rstrip()
        if not content.strip():
            continue
        if content.startswith("group"):
            match = HEADER_RE.match(content)
            if match is None:
                raise ParseError(number, 1, raw, "malformed group header")
            current = _parse_header(match, raw, number)
            records.append(current)
            continue
        if current is None:
            raise ParseError(number, 1, raw, "generator before any group header")
        stripped = content.strip()
        if stripped.startswith("["):
            current["generators"].append(_parse_images(stripped, current["degree"], number))
        else:
            current["generators"].append(parse_cycles(content, current["degree"], number))
    return [GroupSpec(source=source, **record) for record in records]


def parse_group_json(text, source=None):
    """the JSON mirror: a list of objects with the header fields and generators"""
    try:
        documents = json.loads(text)
    except ValueError as e:
        raise ParseError(getattr(e, "lineno", 1), getattr(e, "colno", 1), text[:40], str(e))
    if isinstance(documents, dict):
        documents = [documents]
    specs = []
    for i, doc in enumerate(documents, 1):
        degree = int(doc["degree"])
        generators = []
        for g in doc.get("generators", []):
            if isinstance(g, str):
                generators.append(parse_cycles(g, degree, i))
            else:
                generators.append(_parse_images(str(g), degree, i))
        specs.append(
            GroupSpec(
                doc["name"],
                degree,
                generators,
                order=doc.get("order"),
                tags=doc.get("tags", ()),
                labels=doc.get("labels", ()),
                source=source,
            )
        )
    return specs


def read_specs(path):
    with io.open(path, "r", encoding="utf-8") as stream:
        text = stream.read()
    if path.endswith(".json"):
        return parse_group_json(text, source=path)
    return parse_group_file(text, source=path)


def load(path):
    """Groups of a group file, each order-verified."""
    specs = read_specs(path)
    logger.info("Loaded %d group records from %s", len(specs), path)
    return [spec.build() for spec in specs]


def save(report, path, format=None):
    """Write a report as JSON, TSV (one row per group) or text."""
    if format is None:
        format = os.path.splitext(path)[1].lstrip(".") or "json"
    with io.open(path, "w", encoding="utf-8") as stream:
        if format == "json":
            stream.write(to_json(report))
            stream.write("\n")
        elif format == "tsv":
            rows = [
                {k: v for k, v in group.items() if not isinstance(v, (list, dict))}
                for group in report.get("groups", [])
            ]
            pd.DataFrame(rows).to_csv(stream, sep="\t", index=False)
        else:
            stream.write(str(report))
    logger.info("Report written to %s", path)
