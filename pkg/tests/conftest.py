"""Shared fixtures: the source corpus under ``fixtures/`` and small hand-built models."""

from pathlib import Path

import pytest

from ckmetrics.models import ClassModel

from helpers import klass, method

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def corpus_dir() -> Path:
    return FIXTURES / "corpus"


@pytest.fixture
def corpus_files(corpus_dir):
    return sorted(p.as_posix() for p in corpus_dir.rglob("*.java"))


@pytest.fixture
def golden_csv() -> bytes:
    return (FIXTURES / "corpus_metrics.csv").read_bytes()


@pytest.fixture
def golden_model() -> bytes:
    return (FIXTURES / "corpus_model.json").read_bytes()


@pytest.fixture
def cohesion_example() -> ClassModel:
    """
    One class, three methods: M1 uses {a, b, c, d}, M2 uses {a, b, c},
    M3 uses {x, y, z}. One sharing pair, two disjoint ones.
    """
    return ClassModel(classes=(
        klass(
            "demo.Example",
            fields=["a", "b", "c", "d", "x", "y", "z"],
            methods=[
                method("M1", uses={"a", "b", "c", "d"}),
                method("M2", uses={"a", "b", "c"}),
                method("M3", uses={"x", "y", "z"}),
            ],
        ),
    ))


@pytest.fixture
def layered_model() -> ClassModel:
    """
    ``app.Service`` calls into ``core.Repo``, which extends ``core.Base``;
    ``core.Base`` extends the external ``lib.Object``.
    """
    return ClassModel(classes=(
        klass("lib.Object", external=True),
        klass(
            "core.Base",
            parents=["lib.Object"],
            fields=["id"],
            methods=[method("id", uses={"id"}, returns="int")],
        ),
        klass(
            "core.Repo",
            parents=["core.Base"],
            fields=["rows", "size"],
            methods=[
                method("Repo", uses={"rows", "size"}),
                method("find", params=["int"], returns="core.Base", uses={"rows"},
                       calls=[("core.Repo", "count", 0)]),
                method("count", returns="int", uses={"size"}),
                method("hash", returns="int", calls=[("lib.Object", "hashCode", 0)]),
            ],
        ),
        klass(
            "app.Service",
            fields=[("repo", "core.Repo")],
            methods=[
                method("lookup", params=["int"], returns="core.Base", uses={"repo"},
                       calls=[("core.Repo", "find", 1)]),
                method("size", returns="int", uses={"repo"},
                       calls=[("core.Repo", "count", 0), ("?", "log", 1)]),
            ],
        ),
    ))
