import json
import random

import pytest

from helpers import finite_index_instance, nondegenerate_embedding
from symlat.exactnum import FactoredInteger
from symlat.lattices import (
    DegenerateLatticeError,
    Embedding,
    Lattice,
    complement_discriminant,
    discriminant,
    double_complement,
    hyperbolic_plane,
    index_in,
    orthogonal_complement,
    quotient_torsion,
    random_unimodular_lattice,
    random_unimodular_matrix,
    saturation,
)
from symlat.linalg import det_exact, same_row_span

Z1 = Lattice([[1]])
Z2 = Lattice([[1, 0], [0, 1]])


def discr(e):
    return discriminant(e.source()) if e.rank else FactoredInteger()


def test_lattice_validation():
    with pytest.raises(DegenerateLatticeError):
        Lattice([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        Lattice([["1/2"]])
    assert Lattice.direct_sum(hyperbolic_plane(), Z1).rank == 3


def test_discriminant_examples():
    assert discriminant(Lattice([[-2]])) == 2
    assert discriminant(hyperbolic_plane()) == 1 and hyperbolic_plane().is_unimodular()
    assert discriminant(Lattice([[2, 0], [0, 4]])) == 8


def test_torsion_examples():
    assert quotient_torsion(Embedding(Z1, [[2]])) == 2
    assert discr(Embedding(Z1, [[2]])) == 4
    assert quotient_torsion(Embedding(Lattice.direct_sum(Z2, Z1), [[1, 0, 0], [0, 1, 0]])) == 1
    assert quotient_torsion(Embedding(Z2, [[1, 1], [1, -1]])) == 2


def test_embedding_validation_and_json():
    with pytest.raises(ValueError):
        Embedding(Z2, [[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        Embedding(Z2, [[1, 2, 3]])
    e = Embedding(hyperbolic_plane(), [[1, 2]])
    data = json.loads(json.dumps(e.to_json()))
    assert data["basis_rows"] == [[1, 2]]
    assert Embedding.from_json(data) == e


def test_complement_examples():
    u = hyperbolic_plane()
    perp = orthogonal_complement(Embedding(u, [[1, 0]]))
    assert same_row_span(perp.rows(), [[1, 0]])
    dd = double_complement(Embedding(Z2, [[2, 0]]))
    assert same_row_span(dd.rows(), [[1, 0]])
    assert orthogonal_complement(Embedding(Z2, [[1, 0], [0, 1]])).rank == 0
    assert orthogonal_complement(Embedding(Z2, [])).rank == 2


def test_complement_discriminant_examples():
    big = FactoredInteger.parse("2^1106 * 3^92")
    assert complement_discriminant(big, FactoredInteger.parse("2^277 * 3^46")) == FactoredInteger.parse("2^552")
    assert complement_discriminant(12, 1) == 12
    assert complement_discriminant(4, 2) == 1
    with pytest.raises(ValueError):
        complement_discriminant(12, 3)


def test_random_unimodular_generators():
    rng = random.Random(41)
    for _ in range(50):
        n = rng.randint(1, 6)
        assert abs(det_exact(random_unimodular_matrix(n, rng))) == 1
        assert random_unimodular_lattice(n, rng).is_unimodular()


def test_finite_index_square_discriminant():
    rng = random.Random(42)
    for _ in range(100):
        e, det_t = finite_index_instance(rng)
        n = quotient_torsion(e)
        assert n == det_t
        assert n**2 == discr(e)
        assert index_in(e, Embedding(e.target, [[int(i == j) for j in range(e.rank)] for i in range(e.rank)])) == det_t


def test_torsion_divides_discriminant():
    rng = random.Random(43)
    for _ in range(100):
        e = nondegenerate_embedding(rng, min_corank=1)
        assert quotient_torsion(e).divides(discr(e))


def test_primitive_complement_has_same_discriminant():
    rng = random.Random(44)
    for _ in range(100):
        e = nondegenerate_embedding(rng, primitive=True)
        assert quotient_torsion(e) == 1
        assert discr(e) == discr(orthogonal_complement(e))


def test_complement_discriminant_formula():
    rng = random.Random(45)
    for _ in range(100):
        e = nondegenerate_embedding(rng)
        want = complement_discriminant(discr(e), quotient_torsion(e))
        assert discr(orthogonal_complement(e)) == want
        assert discr(double_complement(e)) == want


def test_double_complement_is_saturation():
    rng = random.Random(46)
    for _ in range(100):
        e = nondegenerate_embedding(rng)
        dd, sat = double_complement(e), saturation(e)
        assert same_row_span(dd.rows(), sat.rows())
        assert index_in(e, sat) == quotient_torsion(e)


def test_isotropic_sublattice_in_indefinite_target():
    # L = span{(1,0)} in U is degenerate, but its complement is still computed
    e = Embedding(hyperbolic_plane(), [[1, 0]])
    with pytest.raises(DegenerateLatticeError):
        e.source()
    assert orthogonal_complement(e).rank == 1
