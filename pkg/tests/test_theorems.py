import pytest

from tracelattice.cyclotomic import Involution
from tracelattice.lattice import GramLattice, scaled
from tracelattice.roots import RootType, catalog_gram, catalog_sum, witt_decompose
from tracelattice.theorems import (
    FieldSpec,
    Prediction,
    check_bk,
    rescale_not_even_unimodular,
    conductor_invariants,
    disc_bound_witness,
    json_int,
    predict,
    sweep,
    sweep_specs,
    tensor_congruence,
    unmixed_label,
    verify,
)

ID, CONJ = Involution.IDENTITY, Involution.CONJUGATION


class TestFieldSpec:
    def test_theta_rule(self):
        assert FieldSpec.cyclotomic(2).theta is ID
        assert FieldSpec.cyclotomic(3).theta is CONJ
        assert FieldSpec.quadratic(5).theta is ID
        assert FieldSpec.quadratic(-5).theta is CONJ

    @pytest.mark.parametrize(
        "kind, param, theta",
        [("cyclotomic", 1, CONJ), ("cyclotomic", 5, ID), ("quadratic", 3, CONJ),
         ("quadratic", -2, ID), ("quadratic", 4, ID), ("cyclotomic", 0, ID), ("cubic", 3, ID)],
    )
    def test_invalid(self, kind, param, theta):
        with pytest.raises(ValueError):
            FieldSpec(kind, param, theta)

    def test_cyclotomic_aliases(self):
        assert FieldSpec.quadratic(-1).as_cyclotomic_conductor() == 4
        assert FieldSpec.quadratic(-3).as_cyclotomic_conductor() == 3
        assert FieldSpec.quadratic(-7).as_cyclotomic_conductor() is None
        assert FieldSpec.cyclotomic(6).as_cyclotomic_conductor() == 3


class TestPredict:
    def test_two_power(self):
        assert predict(FieldSpec.cyclotomic(16)) == Prediction(None, "Z1^8", 8)

    def test_two_three(self):
        assert predict(FieldSpec.cyclotomic(36)) == Prediction(None, "A2^6", 6)

    def test_eisenstein(self):
        assert predict(FieldSpec.quadratic(-3)).root_lattice == "A2"
        assert predict(FieldSpec.cyclotomic(6)).root_lattice == "A2"

    def test_gaussian(self):
        assert predict(FieldSpec.quadratic(-1)) == Prediction("A1^2", "Z1^2", 2)

    def test_rationals(self):
        assert predict(FieldSpec.cyclotomic(1)) == Prediction("Z1", "Z1", 1)
        assert predict(FieldSpec.cyclotomic(2)).root_lattice == "Z1"

    @pytest.mark.parametrize("m", [5, 9 * 5, 20, 27 * 5])
    def test_other(self, m):
        assert predict(FieldSpec.cyclotomic(m)) == Prediction(None, None, None)

    def test_odd_three_power_is_two_three(self):
        # Q(zeta_9) = Q(zeta_18), conductor 2 * 9
        assert predict(FieldSpec.cyclotomic(9)).similar == "A2^3"


class TestVerify:
    def test_twelve(self):
        rec = verify(FieldSpec.cyclotomic(12))
        assert rec.agrees and rec.similar == "A2^2" and rec.content == 2

    def test_five(self):
        rec = verify(FieldSpec.cyclotomic(5))
        assert rec.agrees and rec.root_lattice is None and rec.similar is None

    def test_minus_five(self):
        spec = FieldSpec.quadratic(-5)
        assert spec.gram().gram == ((2, 0), (0, 10))
        rec = verify(spec)
        assert rec.agrees and rec.root_lattice is None

    def test_mixed_similarity_is_outside_prediction(self):
        rec = verify(FieldSpec.quadratic(-2))
        assert rec.similar == "Z1 + A1" and rec.agrees

    def test_budget_failure_is_recorded(self):
        records = sweep(12, 0, max_nodes=3)
        failed = [r for r in records if r.error]
        assert failed and not any(r.agrees for r in failed)
        assert all("EnumerationBudgetExceeded" in r.error for r in failed)

    def test_record_json(self):
        payload = verify(FieldSpec.cyclotomic(9)).to_json()
        assert abs(payload["disc"]) == 3**9 and isinstance(payload["disc"], int)
        payload = verify(FieldSpec.cyclotomic(59)).to_json()
        assert payload["disc"].lstrip("-") == str(59**57)
        assert payload["scope"] == "family-verified"

    def test_sweep_sorted(self):
        specs = sweep_specs(10, 10)
        assert specs == sorted(specs, key=lambda s: s.sort_key)
        assert specs[0] == FieldSpec.cyclotomic(1)


def test_unmixed_label():
    assert unmixed_label(witt_decompose(catalog_sum([RootType("Z1", 1), RootType("A", 1)]))) is None
    assert unmixed_label(witt_decompose(catalog_sum([RootType("A", 2)] * 2))) == "A2^2"
    assert unmixed_label(None) is None


class TestEvenUnimodularRescale:
    def test_e8_flagged(self):
        assert rescale_not_even_unimodular(catalog_gram(RootType("E8", 8))) is False
        assert rescale_not_even_unimodular(scaled(catalog_gram(RootType("E8", 8)), 3)) is False

    def test_gaussian(self):
        assert rescale_not_even_unimodular(FieldSpec.quadratic(-1))

    def test_odd_unimodular_passes(self):
        assert rescale_not_even_unimodular(GramLattice([[1]]))

    @pytest.mark.parametrize("m", [15, 16, 20, 24, 32])
    def test_rank_eight_plus(self, m):
        spec = FieldSpec.cyclotomic(m)
        assert rescale_not_even_unimodular(spec) and disc_bound_witness(spec)


def test_json_int():
    assert json_int(5) == 5
    assert json_int(2**53) == str(2**53)
    assert json_int(-(2**60)) == str(-(2**60))


@pytest.mark.parametrize("m", range(1, 60, 2))
def test_conductor_duality(m):
    assert conductor_invariants(m) == conductor_invariants(2 * m)


@pytest.mark.parametrize(
    "i, j", [(4, 3), (8, 3), (4, 9), (3, 4), (16, 3), (8, 9), (4, 5), (3, 5)]
)
def test_tensor_congruence(i, j):
    assert tensor_congruence(i, j)


@pytest.mark.parametrize("m", [3, 4, 12])
def test_bk_examples(m):
    assert check_bk(m) < 1e-9


def test_bk_rationals():
    assert check_bk(1) < 1e-12 and check_bk(2) < 1e-12
