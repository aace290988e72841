"""Symmetric r-wise intersecting set families."""

import json

from ._symfam import (
    CapabilityError,
    DomainError,
    Error,
    Family,
    ParseError,
    construct_family,
    cross_intersecting,
    load_family,
    save_family,
    search_family,
    structured_measure,
)
from . import _symfam

__all__ = [
    "CapabilityError",
    "DomainError",
    "Error",
    "Family",
    "ParseError",
    "certify",
    "certify_construction",
    "construct",
    "construct_family",
    "cross_intersecting",
    "cross_lemma",
    "intersection_lemma",
    "load_family",
    "measure",
    "proof_chain",
    "save_family",
    "search",
    "search_family",
    "structured_measure",
    "threshold_window",
]


def construct(descriptor, threads=1):
    """Size report for a construction such as "block(k=3)"."""
    return json.loads(_symfam._construct(descriptor, threads))


def measure(family, p):
    """p-biased measure of an explicit family: {"value", "exact"}."""
    return json.loads(family._measure(p))


def threshold_window(descriptor, epsilon=0.1):
    return json.loads(_symfam._threshold_window(descriptor, epsilon))


def certify(family, r=3, generators=None, threads=1):
    """generators: optional witness group as lists of 1-based images."""
    return json.loads(_symfam._certify(family, r, generators, threads))


def certify_construction(descriptor, r, seed=0, threads=1):
    return json.loads(_symfam._certify_construction(descriptor, r, seed, threads))


def search(n, r, complete=False, threads=1):
    return json.loads(_symfam._search(n, r, complete, threads))


def cross_lemma(a, b, p):
    return json.loads(_symfam._cross_lemma(a, b, p))


def intersection_lemma(family):
    return json.loads(_symfam._intersection_lemma(family))


def proof_chain(family):
    return json.loads(_symfam._proof_chain(family))
