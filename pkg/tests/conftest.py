import json
from pathlib import Path

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from braidcx.complex import SimplicialComplex
from braidcx.presentation import LeafLabelledTree

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
SCHEMAS = ROOT / "schemas"

# criterion number -> (passed, message); filled by test_acceptance.py
ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        passed, message = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {message}")


def _registry() -> Registry:
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], Resource.from_contents(doc)))
    return Registry().with_resources(resources)


@pytest.fixture(scope="session")
def validate():
    registry = _registry()

    def check(name: str, payload) -> None:
        schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
        Draft202012Validator(schema, registry=registry).validate(payload)

    return check


@pytest.fixture(scope="session")
def corpus_paths():
    return sorted(CORPUS.glob("*.cx"))


def labelled_tree(spine, leaves: dict, name: str) -> LeafLabelledTree:
    """Tree from spine edges plus ``{label: host}``; leaf ``i`` becomes vertex ``{name}{i}``."""
    faces = list(spine) + [(host, f"{name}{i}") for i, host in leaves.items()]
    tree = SimplicialComplex.from_maximal(faces, name)
    return LeafLabelledTree.from_tree(tree, {f"{name}{i}": i for i in leaves})


@pytest.fixture(scope="session")
def twisted_k33_trees():
    # realized graph is K3,3: leaf i of the first tree meets leaf i of the second
    first = labelled_tree([("a1", "b1"), ("b1", "a2")],
                          {1: "b1", 2: "a1", 3: "a1", 4: "a2", 5: "a2"}, "x")
    second = labelled_tree([("b2", "a3"), ("a3", "b3")],
                           {1: "a3", 2: "b2", 4: "b2", 3: "b3", 5: "b3"}, "y")
    return first, second


@pytest.fixture(scope="session")
def planar_k4_trees():
    first = labelled_tree([("v1", "v2")], {1: "v1", 2: "v1", 3: "v2", 4: "v2"}, "x")
    second = labelled_tree([("w1", "w2")], {1: "w1", 3: "w1", 2: "w2", 4: "w2"}, "y")
    return first, second
