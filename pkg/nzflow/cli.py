#!/usr/bin/env python3
"""
nzflow command line.

Exit codes: 0 success, 1 proven infeasible (or flow rejected by verify),
2 budget, I/O or internal error, 3 hypotheses unmet.
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv

from .config import (
    PipelineConfig,
    create_pipeline_config_from_dict,
    load_config_from_file,
)
from .errors import (
    BudgetExceeded,
    Infeasible,
    InternalInvariantViolation,
    NotAutomorphismGroup,
    NotMulticover,
    NzFlowError,
    OutsideScope,
    PartitionNotInvariant,
)
from .families import FAMILIES, FamilySpec
from .flowkit import solve_nz_kflow, verify_flow
from .formats import (
    parse_flow,
    parse_graph,
    parse_group,
    parse_partition,
    read_text,
    serialize_certificate,
    serialize_flow,
    serialize_graph,
    serialize_group,
    serialize_trace,
    write_text,
)
from .permgrp import derived_series, orbits
from .pipeline import check_hypotheses, solve_three_flow, solve_three_flow_per_component
from .quotients import certify_multicover

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_ERROR = 2
EXIT_OUT_OF_SCOPE = 3


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text)


def _build_config(args: argparse.Namespace) -> PipelineConfig:
    config = create_pipeline_config_from_dict(load_config_from_file(args.config))
    if getattr(args, 'fallback', False):
        config.fallback = True
    if getattr(args, 'strict', False):
        config.strict = True
    if args.budget is not None:
        config.solver.budget = args.budget
    if args.order_cap is not None:
        config.solver.order_cap = args.order_cap
    return config


def cmd_solve(args: argparse.Namespace, config: PipelineConfig) -> int:
    graph = parse_graph(read_text(args.graph))
    flow = solve_nz_kflow(graph, args.k, config.solver.budget)
    if flow is None:
        print("INFEASIBLE")
        return EXIT_INFEASIBLE
    _emit(serialize_flow(flow), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: PipelineConfig) -> int:
    graph = parse_graph(read_text(args.graph))
    flow = parse_flow(read_text(args.flow))
    report = verify_flow(graph, flow)
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_INFEASIBLE


def cmd_pipeline(args: argparse.Namespace, config: PipelineConfig) -> int:
    graph = parse_graph(read_text(args.graph))
    groups = [parse_group(read_text(path), config.solver.order_cap) for path in args.groups]

    if args.per_component:
        flow, traces = solve_three_flow_per_component(graph, groups, config)
        trace_text = "".join(serialize_trace(trace) for trace in traces)
    else:
        if len(groups) != 1:
            raise ValueError("pass exactly one group file, or use --per-component")
        flow, trace = solve_three_flow(graph, groups[0], config)
        trace_text = serialize_trace(trace)

    if args.trace:
        write_text(args.trace, trace_text)
    _emit(serialize_flow(flow), args.out)
    return EXIT_OK


def describe_series(group) -> str:
    series = derived_series(group)
    orders = series.orders()
    text = f"order {orders[0]}"
    if series.is_solvable:
        text += f", solvable, derived length {series.derived_length}"
        if series.derived_length > 1:
            text += f", series {'>'.join(map(str, orders))}"
    else:
        text += ", NOT solvable"
        if len(orders) > 1:
            text += f", series {'>'.join(map(str, orders))}"
    return text


def cmd_group(args: argparse.Namespace, config: PipelineConfig) -> int:
    group = parse_group(read_text(args.group), config.solver.order_cap)
    print(describe_series(group))
    return EXIT_OK


def cmd_quotient(args: argparse.Namespace, config: PipelineConfig) -> int:
    graph = parse_graph(read_text(args.graph))
    if args.partition:
        partition = parse_partition(read_text(args.partition))
    else:
        partition = orbits(parse_group(read_text(args.group), config.solver.order_cap))
    cert = certify_multicover(graph, partition)
    _emit(serialize_certificate(cert), args.out)
    return EXIT_OK


def cmd_gen(args: argparse.Namespace, config: PipelineConfig) -> int:
    instance = FamilySpec(args.family, tuple(args.params)).build(config.solver.order_cap)
    prefix = args.prefix or args.family
    write_text(f"{prefix}.g", serialize_graph(instance.graph))
    written = [f"{prefix}.g"]
    if instance.regular_group is not None:
        write_text(f"{prefix}.grp", serialize_group(instance.regular_group))
        written.append(f"{prefix}.grp")
    if instance.arc_group is not None:
        write_text(f"{prefix}.arc.grp", serialize_group(instance.arc_group))
        written.append(f"{prefix}.arc.grp")
    print(f"{instance.name}: {instance.graph.n} vertices, {instance.graph.m} edges -> {', '.join(written)}")
    return EXIT_OK


def cmd_hypotheses(args: argparse.Namespace, config: PipelineConfig) -> int:
    graph = parse_graph(read_text(args.graph))
    group = parse_group(read_text(args.group), config.solver.order_cap)
    report = check_hypotheses(graph, group)
    print(report.model_dump_json(indent=2))
    return EXIT_OK if report.all_hold else EXIT_OUT_OF_SCOPE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nzflow", description="Nowhere-zero flows on symmetric graphs")
    parser.add_argument("--config", default="nzflow.json", help="JSON configuration file")
    parser.add_argument("--budget", type=int, help="Solver node budget (overrides NZFLOW_BUDGET)")
    parser.add_argument("--order-cap", type=int, help="Group enumeration cap (overrides NZFLOW_ORDER_CAP)")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="Search for a nowhere-zero k-flow")
    solve.add_argument("graph")
    solve.add_argument("-k", type=int, required=True)
    solve.add_argument("--out", help="Write the flow here instead of stdout")
    solve.set_defaults(handler=cmd_solve)

    verify = sub.add_parser("verify", help="Check a flow file against a graph")
    verify.add_argument("graph")
    verify.add_argument("flow")
    verify.set_defaults(handler=cmd_verify)

    pipeline = sub.add_parser("pipeline", help="Three-flow from a solvable arc-transitive group")
    pipeline.add_argument("graph")
    pipeline.add_argument("groups", nargs="+", help="Group file (one per component with --per-component)")
    pipeline.add_argument("--fallback", action="store_true", help="Use the generic solver when hypotheses fail")
    pipeline.add_argument("--strict", action="store_true", help="Require every hypothesis of the theorem")
    pipeline.add_argument("--per-component", action="store_true", help="Solve each component with its own group")
    pipeline.add_argument("--trace", help="Write step records and the flow here")
    pipeline.add_argument("--out", help="Write the flow here instead of stdout")
    pipeline.set_defaults(handler=cmd_pipeline)

    group = sub.add_parser("group", help="Order, solvability and derived series")
    group.add_argument("group")
    group.set_defaults(handler=cmd_group)

    quotient = sub.add_parser("quotient", help="Certify a multicover over a partition")
    quotient.add_argument("graph")
    source = quotient.add_mutually_exclusive_group(required=True)
    source.add_argument("--partition", help="Partition file")
    source.add_argument("--group", help="Group file whose orbits form the partition")
    quotient.add_argument("--out", help="Write the certificate here instead of stdout")
    quotient.set_defaults(handler=cmd_quotient)

    gen = sub.add_parser("gen", help="Generate a graph family with its groups")
    gen.add_argument("family", choices=FAMILIES)
    gen.add_argument("params", nargs="*")
    gen.add_argument("--prefix", help="Output file prefix (default: family name)")
    gen.set_defaults(handler=cmd_gen)

    hypotheses = sub.add_parser("hypotheses", help="Report each hypothesis of the three-flow theorem")
    hypotheses.add_argument("graph")
    hypotheses.add_argument("group")
    hypotheses.set_defaults(handler=cmd_hypotheses)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    logging.basicConfig(
        level=getattr(logging, os.getenv('LOG_LEVEL', 'WARNING').upper(), logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    )
    args = build_parser().parse_args(argv)

    try:
        config = _build_config(args)
        return args.handler(args, config)
    except Infeasible as e:
        print(f"INFEASIBLE: {e}")
        return EXIT_INFEASIBLE
    except (OutsideScope, NotAutomorphismGroup, NotMulticover, PartitionNotInvariant) as e:
        print(f"OUT OF SCOPE: {e}", file=sys.stderr)
        return EXIT_OUT_OF_SCOPE
    except BudgetExceeded as e:
        logger.error(f"Search budget exhausted: {e}")
        print(f"BUDGET EXCEEDED: {e}", file=sys.stderr)
        return EXIT_ERROR
    except InternalInvariantViolation as e:
        logger.error(f"Internal invariant violated, please report: {e}")
        print(f"INTERNAL ERROR: {e}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, NzFlowError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"ERROR: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
