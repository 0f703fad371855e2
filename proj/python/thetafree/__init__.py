"""Python bindings for the theta(2,2,3)-free spectral extremal graph workbench."""

import json

from ._core import (
    DEFAULT_EDGE_BUDGET,
    EDGE_BUDGET_ENV,
    BudgetExceeded,
    Graph,
    book,
    bound_value,
    canonical_label,
    count_connected_by_order,
    enumerate_by_edges,
    family,
    is_theta_free,
    normalize_spec,
    spectral_radius,
)
from . import _core

__all__ = [
    "DEFAULT_EDGE_BUDGET",
    "EDGE_BUDGET_ENV",
    "BudgetExceeded",
    "Graph",
    "book",
    "bound_value",
    "canonical_label",
    "check_nosal",
    "contains_theta",
    "count_connected_by_order",
    "enumerate_by_edges",
    "extremal_search",
    "family",
    "is_theta_free",
    "normalize_spec",
    "spectral_result",
    "spectral_radius",
    "verify",
]


def contains_theta(g, spec="2,2,3"):
    """Witness dict {"hubs", "paths"} if g contains the theta graph, else None."""
    raw = _core.contains_theta_json(g, spec)
    return None if raw is None else json.loads(raw)


def spectral_result(g):
    """Dict with lambda, residual, iterations and the Perron vector."""
    return json.loads(_core.spectral_radius_json(g))


def check_nosal(g):
    return json.loads(_core.nosal_json(g))


def extremal_search(m, spec="2,2,3", connected_only=True, threads=1, edge_budget=0):
    """ExtremalRecord as a dict; edge_budget=0 uses the environment/default budget."""
    return json.loads(_core.extremal_search_json(m, spec, connected_only, threads, edge_budget))


def verify(g, spec="2,2,3"):
    """Certificate dict for one graph."""
    return json.loads(_core.verify_json(g, spec))
