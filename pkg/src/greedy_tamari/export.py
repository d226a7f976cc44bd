"""Serializers for posets, interval streams and statistic histograms."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, TextIO

from .posets import CoverGraph, histogram, intervals


def to_dot(graph: CoverGraph) -> str:
    """Hasse diagram in Graphviz DOT, one node per path, edges upward."""
    lines = [f'digraph "D_{graph.m}_{graph.n}_{graph.flavor.value}" {{', "  rankdir=BT;"]
    for k, w in enumerate(graph.nodes):
        lines.append(f'  n{k} [label="{w.word}"];')
    for a, b in graph.edges():
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_intervals_jsonl(graph: CoverGraph, out: TextIO, with_chain: bool = False) -> int:
    """Stream interval records as JSON Lines; returns the number written."""
    count = 0
    for rec in intervals(graph, with_chain=with_chain):
        out.write(json.dumps(rec.to_json(), sort_keys=True))
        out.write("\n")
        count += 1
    return count


def _value_text(value) -> str:
    if isinstance(value, tuple):
        return ";".join(str(v) for v in value)
    return str(value)


def histogram_rows(graph: CoverGraph, statistics: Iterable[str]) -> list:
    rows = [["statistic", "value", "count"]]
    for stat in statistics:
        hist = histogram(graph, stat)
        for value in sorted(hist, key=lambda v: (str(type(v)), v)):
            rows.append([stat, _value_text(value), str(hist[value])])
    return rows


def to_csv(graph: CoverGraph, statistics: Iterable[str]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(histogram_rows(graph, statistics))
    return buf.getvalue()
