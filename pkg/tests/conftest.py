"""Shared fixtures for the test suite."""

from __future__ import annotations

import itertools

import pytest

from tracelang import Trace


def all_traces(lengths, alphabet=("p", "q")):
    """Every trace whose length is in ``lengths`` over subsets of ``alphabet``."""
    steps = [
        frozenset(atoms)
        for size in range(len(alphabet) + 1)
        for atoms in itertools.combinations(alphabet, size)
    ]
    for length in lengths:
        for combo in itertools.product(steps, repeat=length):
            yield Trace(combo)


@pytest.fixture(scope="session")
def traces_to_three():
    return list(all_traces(range(0, 4)))


@pytest.fixture(scope="session")
def traces_one_to_four():
    return list(all_traces(range(1, 5)))
