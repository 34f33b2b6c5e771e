import pytest

from hilbertfn.errors import ResourceCapError
from hilbertfn.monomial import ideal
from hilbertfn.simplicial import (
    SimplicialComplex,
    minimal_nonfaces,
    stanley_reisner_ideal,
    validate_complex,
)

# two triangles sharing the edge {y, z}
BOWTIE = SimplicialComplex(
    ("x", "xh", "y", "z", "w"),
    (("x", "y", "z"), ("xh", "y", "z"), ("y", "z", "w")),
)


def test_validate_ok():
    assert validate_complex(BOWTIE) == []


def test_validate_duplicate_vertex():
    c = SimplicialComplex(("a", "a"), (("a",),))
    assert any("duplicate" in v for v in validate_complex(c))


def test_validate_unknown_vertex():
    c = SimplicialComplex(("a", "b"), (("a", "c"), ("b",)))
    assert any("unknown" in v for v in validate_complex(c))


def test_validate_facet_containment():
    c = SimplicialComplex(("a", "b", "c"), (("a", "b", "c"), ("a", "b")))
    assert any("contained" in v for v in validate_complex(c))


def test_validate_uncovered_vertex():
    c = SimplicialComplex(("a", "b"), (("a",),))
    assert any("not covered" in v for v in validate_complex(c))


def test_minimal_nonfaces_bowtie():
    assert minimal_nonfaces(BOWTIE) == [
        ("x", "xh"),
        ("x", "w"),
        ("xh", "w"),
    ]


def test_minimal_nonfaces_hollow_triangle():
    c = SimplicialComplex(("a", "b", "c"), (("a", "b"), ("b", "c"), ("a", "c")))
    assert minimal_nonfaces(c) == [("a", "b", "c")]


def test_minimal_nonfaces_full_simplex_has_none():
    c = SimplicialComplex(("a", "b", "c"), (("a", "b", "c"),))
    assert minimal_nonfaces(c) == []


def test_minimal_nonfaces_rejects_invalid():
    c = SimplicialComplex(("a", "b"), (("a",),))
    with pytest.raises(ValueError):
        minimal_nonfaces(c)


def test_vertex_cap():
    names = tuple(f"v{i}" for i in range(25))
    c = SimplicialComplex(names, (names,))
    with pytest.raises(ResourceCapError):
        minimal_nonfaces(c)


def test_stanley_reisner_ideal_bowtie():
    I = stanley_reisner_ideal(BOWTIE)
    assert I == ideal(
        5,
        (1, 1, 0, 0, 0),
        (1, 0, 0, 0, 1),
        (0, 1, 0, 0, 1),
    )


def test_stanley_reisner_generators_are_squarefree():
    I = stanley_reisner_ideal(BOWTIE)
    assert all(max(g.exponents) <= 1 for g in I.generators)
