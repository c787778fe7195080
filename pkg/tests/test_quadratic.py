import pytest

from tracelattice.cyclotomic import Involution
from tracelattice.exactalg import inertia
from tracelattice.quadratic import QuadField, is_squarefree, quad_discriminant, quad_gram

CONJ, ID = Involution.CONJUGATION, Involution.IDENTITY

NEGATIVE = [c for c in range(-200, 0) if is_squarefree(c)]
POSITIVE = [c for c in range(2, 201) if is_squarefree(c)]


def test_discriminants():
    assert quad_discriminant(QuadField(-3)) == -3
    assert quad_discriminant(QuadField(-1)) == -4
    assert quad_discriminant(QuadField(2)) == 8


@pytest.mark.parametrize("c", [0, 1, 4, -8, 12])
def test_invalid_fields(c):
    with pytest.raises(ValueError):
        QuadField(c)


@pytest.mark.parametrize(
    "c, gram",
    [(-3, ((2, 1), (1, 2))), (-1, ((2, 0), (0, 2))), (-7, ((2, 1), (1, 4)))],
)
def test_cm_grams(c, gram):
    assert quad_gram(QuadField(c), CONJ).gram == gram


def test_conjugation_on_real_field_rejected():
    with pytest.raises(ValueError):
        quad_gram(QuadField(5), CONJ)


@pytest.mark.parametrize("c", NEGATIVE)
def test_cm_discriminant_and_definiteness(c):
    F = QuadField(c)
    L = quad_gram(F, CONJ)
    assert abs(L.discriminant) == abs(quad_discriminant(F))
    assert inertia(L.gram) == (2, 0, 0)


@pytest.mark.parametrize("c", POSITIVE)
def test_real_fields_identity_is_definite(c):
    F = QuadField(c)
    L = quad_gram(F, ID)
    assert L.discriminant == quad_discriminant(F)
    assert inertia(L.gram) == (2, 0, 0)


@pytest.mark.parametrize("c", NEGATIVE[:40])
def test_imaginary_identity_form_also_indefinite(c):
    # the identity form on an imaginary field has signature (1, 1)
    assert inertia(quad_gram(QuadField(c), ID).gram) == (1, 1, 0)
