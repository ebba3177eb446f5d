"""Jacobian syzygies, global Tjurina numbers and freeness of reduced plane curves."""

import json

from ._syzcurve import (
    InternalInconsistency,
    analyze_json,
    arrangement_poly,
    corpus_json,
    intervals,
    lattice_tjurina,
    normalize,
    terao,
)

__all__ = [
    "InternalInconsistency",
    "analyze",
    "arrangement_poly",
    "intervals",
    "lattice_tjurina",
    "normalize",
    "run_corpus",
    "terao",
    "tjurina",
]


def analyze(expr, field="auto", seed=1, max_degree_table=None):
    """Full report for the curve f = 0, as a dict with the CLI's JSON schema."""
    return json.loads(analyze_json(expr, field, seed, max_degree_table))


def tjurina(expr, field="auto", seed=1):
    report = analyze(expr, field, seed)
    if "tau" not in report:
        raise ValueError("the curve is not reduced")
    return report["tau"]


def run_corpus(directory, field="auto", seed=1):
    return json.loads(corpus_json(str(directory), field, seed))
