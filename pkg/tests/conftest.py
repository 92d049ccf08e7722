"""Shared fixtures: the canonical 4x4 context and random-context helpers."""

from pathlib import Path

import pytest

from semlat import FormalContext

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = DATA_DIR / "golden"

# Canonical worked example used across the suite: objects 1..4 over
# attributes a..d with rows 1:{a,b}, 2:{a,c}, 3:{a,b,c}, 4:{d}.
C1_OBJECTS = ("1", "2", "3", "4")
C1_ATTRIBUTES = ("a", "b", "c", "d")
C1_ROWS = (
    (True, True, False, False),
    (True, False, True, False),
    (True, True, True, False),
    (False, False, False, True),
)


def make_c1(backend=None) -> FormalContext:
    return FormalContext.from_bools(
        C1_OBJECTS, C1_ATTRIBUTES, C1_ROWS, backend=backend
    )


def random_context(rng, max_objects=15, max_attributes=10, p=0.3, backend=None):
    """A random nonempty context; empty rows are dropped by construction."""
    n_obj = rng.randint(1, max_objects)
    n_attr = rng.randint(1, max_attributes)
    rows = [[rng.random() < p for _ in range(n_attr)] for _ in range(n_obj)]
    if not any(any(row) for row in rows):
        rows[rng.randrange(n_obj)][rng.randrange(n_attr)] = True
    objects = [f"o{i}" for i in range(n_obj)]
    attributes = [f"m{j:02d}" for j in range(n_attr)]
    return FormalContext.from_bools(objects, attributes, rows, backend=backend)


@pytest.fixture
def c1() -> FormalContext:
    return make_c1()


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR
