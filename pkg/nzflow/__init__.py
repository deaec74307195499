#!/usr/bin/env python3
"""
nzflow: Nowhere-Zero Flows on Symmetric Graphs
==============================================

Computes nowhere-zero integer flows. Graphs that come with a solvable
arc-transitive group get a 3-flow built through derived-series quotients,
multicover lifting and constructive base cases; an exhaustive solver
handles everything else and serves as the oracle.

Main Components:
- permgrp: permutations, group closure, derived series, orbits
- graphcore: multigraphs, orientations, partitions
- flowkit: flows, verification, Eulerian and bipartite builders, solver
- quotients: quotient graphs, multicover certificates, flow lifting
- pipeline: the three-flow pipeline with its trace
- formats / families / corpus: files, generated graphs, test corpus

Quick Usage:
    from nzflow import complete_bipartite, solve_three_flow

    instance = complete_bipartite(5, 5)
    flow, trace = solve_three_flow(instance.graph, instance.arc_group)
    print(trace.render())
"""

from .config import PipelineConfig, SolverConfig, load_config_from_file
from .corpus import CorpusEntry, default_corpus, heisenberg_cover, sample_circulants, sample_odd_valency
from .errors import (
    BudgetExceeded,
    Infeasible,
    InternalInvariantViolation,
    NotMulticover,
    NzFlowError,
    OutsideScope,
)
from .families import FamilySpec, cayley, circulant, complete, complete_bipartite, cycle, octahedron, petersen
from .flowkit import (
    Flow,
    VerificationReport,
    bipartite_regular_three_flow,
    eulerian_two_flow,
    reinterpret_flow,
    solve_nz_kflow,
    verify_flow,
)
from .graphcore import Graph, Orientation, VertexPartition, bipartition, components, is_connected, valency
from .permgrp import (
    DerivedSeries,
    PermGroup,
    Permutation,
    derived_series,
    derived_subgroup,
    is_arc_transitive,
    orbits,
)
from .pipeline import HypothesisReport, PipelineTrace, check_hypotheses, solve_three_flow
from .quotients import MulticoverCert, certify_multicover, induced_quotient_action, lift_flow, quotient_graph

__version__ = "1.0.0"

__all__ = [
    # Configuration
    'PipelineConfig',
    'SolverConfig',
    'load_config_from_file',

    # Groups and graphs
    'Permutation',
    'PermGroup',
    'DerivedSeries',
    'derived_subgroup',
    'derived_series',
    'orbits',
    'is_arc_transitive',
    'Graph',
    'Orientation',
    'VertexPartition',
    'valency',
    'is_connected',
    'components',
    'bipartition',

    # Flows
    'Flow',
    'VerificationReport',
    'verify_flow',
    'eulerian_two_flow',
    'bipartite_regular_three_flow',
    'solve_nz_kflow',
    'reinterpret_flow',

    # Quotients and pipeline
    'MulticoverCert',
    'quotient_graph',
    'certify_multicover',
    'induced_quotient_action',
    'lift_flow',
    'HypothesisReport',
    'PipelineTrace',
    'check_hypotheses',
    'solve_three_flow',

    # Families and corpus
    'FamilySpec',
    'cycle',
    'complete',
    'complete_bipartite',
    'circulant',
    'cayley',
    'octahedron',
    'petersen',
    'CorpusEntry',
    'default_corpus',
    'heisenberg_cover',
    'sample_circulants',
    'sample_odd_valency',

    # Errors
    'NzFlowError',
    'BudgetExceeded',
    'Infeasible',
    'InternalInvariantViolation',
    'NotMulticover',
    'OutsideScope',
]
