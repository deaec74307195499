#!/usr/bin/env python3
"""
Text formats for groups, graphs, flows, partitions, certificates and traces.

All formats are line based; '#' starts a comment and blank lines are
ignored. Serializers emit no comments, so parse followed by serialize
reproduces generated files byte for byte.
"""

import logging
from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union

from .config import DEFAULT_ORDER_CAP
from .errors import FormatError, InvalidGraph, InvalidPermutation
from .flowkit import Flow
from .graphcore import Graph, Orientation, VertexPartition
from .permgrp import PermGroup, Permutation
from .pipeline import TRACE_INDENT, PipelineTrace, TraceStep
from .quotients import MulticoverCert

logger = logging.getLogger(__name__)

Record = Tuple[int, str, List[str]]


def _records(text: str) -> Iterator[Record]:
    """(line number, keyword, arguments) for every non-empty line"""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            keyword, *args = line.split()
            yield line_no, keyword, args


def _ints(args: List[str], line_no: int) -> List[int]:
    try:
        return [int(a) for a in args]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(args)!r}", line_no)


def _header(records: List[Record], keyword: str) -> int:
    if not records:
        raise FormatError(f"empty file, expected '{keyword} <n>'")
    line_no, found, args = records[0]
    if found != keyword or len(args) != 1:
        raise FormatError(f"expected '{keyword} <n>' header", line_no)
    value = _ints(args, line_no)[0]
    if value < 0:
        raise FormatError(f"'{keyword}' must be non-negative", line_no)
    return value


def _expect(keyword: str, found: str, line_no: int) -> None:
    if found != keyword:
        raise FormatError(f"expected '{keyword}' record, got '{found}'", line_no)


# Groups

def parse_group(text: str, order_cap: int = DEFAULT_ORDER_CAP) -> PermGroup:
    records = list(_records(text))
    degree = _header(records, "deg")
    generators = []
    for line_no, keyword, args in records[1:]:
        _expect("gen", keyword, line_no)
        images = _ints(args, line_no)
        if len(images) != degree:
            raise FormatError(f"generator has {len(images)} images, degree is {degree}", line_no)
        try:
            generators.append(Permutation(tuple(images)))
        except InvalidPermutation as e:
            raise FormatError(str(e), line_no) from e
    return PermGroup(degree, generators, order_cap)


def serialize_group(group: PermGroup) -> str:
    lines = [f"deg {group.degree}"]
    lines.extend("gen " + " ".join(map(str, g.images)) for g in group.generators)
    return "\n".join(lines) + "\n"


# Graphs

def parse_graph(text: str) -> Graph:
    records = list(_records(text))
    n = _header(records, "v")
    edges = []
    for line_no, keyword, args in records[1:]:
        _expect("e", keyword, line_no)
        values = _ints(args, line_no)
        if len(values) != 2:
            raise FormatError("edge record needs two endpoints", line_no)
        edges.append((values[0], values[1]))
    try:
        return Graph(n, tuple(edges))
    except InvalidGraph as e:
        raise FormatError(str(e)) from e


def serialize_graph(graph: Graph) -> str:
    lines = [f"v {graph.n}"]
    lines.extend(f"e {u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


# Flows

def parse_flow(text: str) -> Flow:
    records = list(_records(text))
    k = _header(records, "k")
    directions = []
    values = []
    for line_no, keyword, args in records[1:]:
        _expect("f", keyword, line_no)
        numbers = _ints(args, line_no)
        if len(numbers) != 3:
            raise FormatError("flow record needs tail, head and value", line_no)
        directions.append((numbers[0], numbers[1]))
        values.append(numbers[2])
    try:
        return Flow(k, Orientation(tuple(directions)), tuple(values))
    except ValueError as e:
        raise FormatError(str(e)) from e


def serialize_flow(flow: Flow) -> str:
    lines = [f"k {flow.k}"]
    lines.extend(f"f {t} {h} {x}" for (t, h), x in zip(flow.orientation.dir, flow.values))
    return "\n".join(lines) + "\n"


# Partitions and certificates

def parse_partition(text: str) -> VertexPartition:
    blocks = []
    for line_no, keyword, args in _records(text):
        _expect("b", keyword, line_no)
        blocks.append(tuple(_ints(args, line_no)))
    try:
        return VertexPartition(tuple(blocks))
    except ValueError as e:
        raise FormatError(str(e)) from e


def serialize_partition(partition: VertexPartition) -> str:
    return "".join("b " + " ".join(map(str, block)) + "\n" for block in partition.blocks)


def serialize_certificate(cert: MulticoverCert) -> str:
    lines = [serialize_graph(cert.quotient).rstrip("\n"), f"t {cert.t}"]
    lines.extend(f"map {e} {q}" for e, q in enumerate(cert.edge_map))
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, partition: VertexPartition) -> MulticoverCert:
    """Certificate file plus the partition it was issued for"""
    graph_lines = []
    t: Optional[int] = None
    mapping = {}
    for line_no, keyword, args in _records(text):
        if keyword in ("v", "e"):
            graph_lines.append(" ".join([keyword] + args))
        elif keyword == "t":
            if len(args) != 1:
                raise FormatError("expected 't <t>'", line_no)
            t = _ints(args, line_no)[0]
        elif keyword == "map":
            numbers = _ints(args, line_no)
            if len(numbers) != 2:
                raise FormatError("map record needs an edge and a quotient edge", line_no)
            mapping[numbers[0]] = numbers[1]
        else:
            raise FormatError(f"unknown record '{keyword}'", line_no)
    if t is None or t < 1:
        raise FormatError("certificate needs a positive 't' record")
    if sorted(mapping) != list(range(len(mapping))):
        raise FormatError("map records must cover edges 0..m-1")
    quotient = parse_graph("\n".join(graph_lines))
    return MulticoverCert(t, quotient, tuple(mapping[e] for e in range(len(mapping))), partition)


# Traces

def _trace_value(raw: str) -> Union[int, str]:
    try:
        return int(raw)
    except ValueError:
        return raw


def serialize_trace(trace: PipelineTrace) -> str:
    """Step records, then the final flow"""
    lines = trace.render()
    return "\n".join(lines) + ("\n" if lines else "") + serialize_flow(trace.final)


def parse_trace(text: str) -> Tuple[List[TraceStep], Flow]:
    """Step records, indented two spaces per recursion depth, then the flow"""
    raw_lines = text.splitlines()
    steps = []
    flow_lines = []
    for line_no, keyword, args in _records(text):
        if keyword == "STEP":
            if not args:
                raise FormatError("STEP record needs a kind", line_no)
            line = raw_lines[line_no - 1]
            indent = len(line) - len(line.lstrip(" "))
            if indent % len(TRACE_INDENT):
                raise FormatError(f"STEP indentation must be a multiple of {len(TRACE_INDENT)} spaces", line_no)
            values = {}
            for item in args[1:]:
                key, sep, raw = item.partition("=")
                if not sep:
                    raise FormatError(f"expected key=value, got {item!r}", line_no)
                values[key] = _trace_value(raw)
            steps.append(TraceStep(kind=args[0], depth=indent // len(TRACE_INDENT), values=values))
        else:
            flow_lines.append(" ".join([keyword] + args))
    return steps, parse_flow("\n".join(flow_lines))


# Files

def read_text(path: Union[str, Path]) -> str:
    logger.debug(f"Reading {path}")
    return Path(path).read_text(encoding='utf-8')


def write_text(path: Union[str, Path], text: str) -> None:
    Path(path).write_text(text, encoding='utf-8')
    logger.info(f"Wrote {path}")
