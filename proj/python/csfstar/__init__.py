"""Chromatic symmetric functions of graphs in the star basis."""

import json

from ._core import (
    CsfError,
    Graph,
    bicyclic,
    canonical_form,
    complete,
    count_lambda_words,
    cuttlefish,
    cycle,
    enumerate_unicyclic,
    expansion_json,
    leading_term,
    pan,
    parse_expansion,
    path,
    paw,
    power_sum,
    power_sum_to_star,
    star,
    star_expand,
    tree_hook_coeff,
    unicyclic_hook_coeff,
)
from . import _core


def infer(expansion):
    """Structural report for a star expansion {partition tuple: coefficient}."""
    return json.loads(_core.infer_json(expansion))


def collisions(n, c, jobs=1):
    return json.loads(_core.collisions_json(n, c, jobs))


def verify(n_max, jobs=1):
    return json.loads(_core.verify_json(n_max, jobs))


__all__ = [
    "CsfError",
    "Graph",
    "bicyclic",
    "canonical_form",
    "collisions",
    "complete",
    "count_lambda_words",
    "cuttlefish",
    "cycle",
    "enumerate_unicyclic",
    "expansion_json",
    "infer",
    "leading_term",
    "pan",
    "parse_expansion",
    "path",
    "paw",
    "power_sum",
    "power_sum_to_star",
    "star",
    "star_expand",
    "tree_hook_coeff",
    "unicyclic_hook_coeff",
    "verify",
]
