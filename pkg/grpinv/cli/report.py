"""Verification report assembly and rendering (json, tsv, text)."""

__all__ = ["build_report", "summarize", "rank_frame", "render", "exit_code", "FORMATS"]

import logging

import pandas as pd

from grpinv import __version__
from grpinv.core.common import CHECK_STATUS
from grpinv.util import to_json, utcnow

FORMATS = ("json", "tsv", "text")

logger = logging.getLogger(__name__)


def summarize(records):
    """check counts by status over all records"""
    counts = {status.lower(): 0 for status in CHECK_STATUS}
    for record in records:
        for check in record.checks:
            counts[check.status.lower()] += 1
    return counts


def build_report(records, timestamp=None):
    return {
        "tool_version": __version__,
        "timestamp": timestamp or utcnow(),
        "groups": [record.to_dict() for record in records],
        "summary": summarize(records),
    }


def exit_code(report):
    return 1 if report["summary"]["fail"] else 0


def rank_frame(report):
    """one row per (group, normal subgroup)"""
    rows = []
    for group in report["groups"]:
        for row in group.get("b_table") or []:
            rows.append(
                {
                    "group": group["group"],
                    "order": group["order"],
                    "a_g": group["a_g"],
                    "normal_order": row["order"],
                    "b": row["b"],
                    "rank_io_gh": row["rank_io_gh"],
                    "a_quotient": row["a_quotient"],
                }
            )
    columns = ["group", "order", "a_g", "normal_order", "b", "rank_io_gh", "a_quotient"]
    return pd.DataFrame(rows, columns=columns)


def _yes(value):
    if value is None:
        return "-"
    return "yes" if value else "no"


def _group_text(group):
    lines = ["{}  order {}".format(group["group"], group.get("order"))]
    if "a_g" not in group:
        lines.extend(_checks_text(group))
        return lines
    orders = group["npp_orders"]
    lines.append(
        "  a_G = {}  NPP orders {}".format(
            group["a_g"], ",".join(str(n) for n in orders) if orders else "none"
        )
    )
    lines.append(
        "  oliver {}  CP {}  EP {}  gap {} ({})".format(
            _yes(group["oliver"]),
            _yes(group["cp"]),
            _yes(group["ep"]),
            group["gap"],
            group["gap_mode"].lower(),
        )
    )
    witness = group.get("oliver_witness")
    if witness:
        lines.append(
            "  isthmus |P| = {p_order} <| |H| = {h_order} <| G".format(**witness)
        )
    lower, upper = group["lo_bounds"]
    lines.append(
        "  rk IO(G) = {}  rk IO(G,G) = {}  rk LO(G) in [{}, {}]".format(
            group["ranks"]["io"], group["ranks"]["io_gg"], lower, upper
        )
    )
    case = group.get("classification_case")
    lines.append("  classification case {}".format(case if case else "-"))
    frame = pd.DataFrame(group["b_table"], columns=["order", "b", "rank_io_gh", "a_quotient"])
    frame.columns = ["|H|", "b", "rk IO(G,H)", "a_G/H"]
    lines.extend("  " + line for line in frame.to_string(index=False).splitlines())
    lines.extend(_checks_text(group))
    return lines


def _checks_text(group):
    lines = []
    for check in group.get("checks", []):
        line = "  {:<5} {}".format(check["status"], check["id"])
        if check["status"] != CHECK_STATUS.SKIP:
            line += "  got {!s} expected {!s}".format(check["got"], check["expected"])
        lines.append(line)
    return lines


def render(report, format="text"):
    if format == "json":
        return to_json(report) + "\n"
    if format == "tsv":
        return rank_frame(report).to_csv(sep="\t", index=False)
    if format != "text":
        raise ValueError("unknown report format {!r}".format(format))
    lines = []
    for group in report["groups"]:
        lines.extend(_group_text(group))
        lines.append("")
    summary = report["summary"]
    if any(group.get("checks") for group in report["groups"]):
        lines.append(
            "pass {pass}  fail {fail}  warn {warn}  skip {skip}".format(**summary)
        )
    return "\n".join(lines) + "\n"
