"""Solver recommendation for quantum annealers."""

import json as _json

from ._core import (  # noqa: F401
    BenchmarkRow,
    Error,
    NoCandidates,
    NoFormula,
    Qubo,
    Registry,
    SampleResult,
    SchemaError,
    TooLarge,
    Topology,
    Tour,
    ZeroOptimum,
    brute_force_tsp,
    build_tsp_qubo,
    decode_tour,
    default_topologies,
    deviation_pct,
    estimate_qubits,
    nearest_benchmark,
    sample,
    variable_count,
)


def recommend(registry, problem_id, n):
    """Recommendation payload as a dict (same content as POST /api/recommend)."""
    return _json.loads(registry.recommend_json(problem_id, n))


__version__ = "0.1.0"
