import pytest

hankel_lab = pytest.importorskip("hankel_lab")


def test_determinant_values():
    assert hankel_lab.d_r(0, 6) == 32
    assert hankel_lab.d_r(3, 5) == -8
    assert hankel_lab.d_r(5, 9) == 370
    assert hankel_lab.d_prime(4, 4) == 3
    assert hankel_lab.d_prime(3, 2) == 0


def test_big_values_are_exact():
    # n = 40 overflows any fixed-width integer.
    assert hankel_lab.d_r(0, 40) == 2**39
    assert hankel_lab.seq_term("binomial_shift", 0, 64) == \
        23951146041928082866135587776380551750


def test_closed_form_residues():
    assert hankel_lab.closed_form(5, 10) == 25
    assert hankel_lab.closed_form(6, 3) == -144
    assert hankel_lab.closed_form(7, 5) is None


def test_det_matches_sequence_hankel():
    rows = hankel_lab.hankel("binomial_shift", 4, 6)
    assert hankel_lab.det(rows) == hankel_lab.d_r(4, 6) == -16


def test_witness_normalization():
    w = hankel_lab.witness(5, 2, 1)
    assert w[-1] == 1


def test_lucas_coefficients():
    assert hankel_lab.lucas(4) == [2, 0, -4, 0, 1]


def test_claim_run_summary():
    assert "angan" in hankel_lab.claims()
    rep = hankel_lab.verify_claim("angan", quick=True)
    assert rep["ok"]
    assert rep["failures"] == 0
    assert rep["passes"] > 0


def test_claim_range_override():
    rep = hankel_lab.verify_claim("detckn", k=(1, 2), N=(0, 10))
    assert rep["ok"]


def test_conjecture_summaries():
    results = hankel_lab.conjectures(2, 2)
    by_id = {r["id"]: r for r in results}
    assert by_id[1]["supported"]
    assert not by_id[7]["supported"]
    identity = hankel_lab.matrix_identity(2, 8)
    assert identity["supported"]


def test_error_paths():
    with pytest.raises(ValueError):
        hankel_lab.d_prime(0, 3)
    with pytest.raises(ValueError):
        hankel_lab.verify_claim("nonsense")
    with pytest.raises(ValueError):
        hankel_lab.det([[1, 2]])
