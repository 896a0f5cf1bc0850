from fractions import Fraction
import pytest
from kiselman.count import (
    BRUTE_FORCE, CLOSED_FORMULA, CountResult, brute_count, closed_count, closed_value, compare_counts, count_grid,
    dn_cardinalities, dn_cardinality
)
from kiselman.errors import DomainError, GuardExceededError


@pytest.mark.parametrize("m, n, value", [
    (2, 1, 4), (2, 2, 15), (2, 3, 54), (3, 1, 8), (3, 2, 54), (3, 3, 330), (4, 1, 16), (4, 4, 16927), (5, 1, 32),
])
def test_closed_count(m, n, value):
    result = closed_count(m, n)
    assert result.value == value
    assert result.source == CLOSED_FORMULA


def test_closed_value_is_fractional_below_offset():
    # the power 4^(n - 3) is a fraction for n < 3; only the product is an integer
    assert closed_value(3, 1) == Fraction(8)
    assert isinstance(closed_value(3, 1), Fraction)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_closed_values_are_integers(m):
    for n in range(1, 40):
        assert closed_value(m, n).denominator == 1


def test_closed_count_domain():
    with pytest.raises(DomainError):
        closed_count(1, 3)
    with pytest.raises(DomainError):
        closed_count(6, 1)
    with pytest.raises(DomainError):
        closed_count(2, 0)


def test_big_values_are_exact():
    # c_{2,n} = (3 + n) 3^(n - 1) beyond 64 bits
    assert closed_count(2, 60).value == 63 * 3 ** 59


@pytest.mark.parametrize("m, n, value", [(2, 2, 15), (3, 3, 330), (1, 7, 128), (4, 1, 16), (2, 3, 54), (3, 2, 54)])
def test_brute_count(m, n, value):
    result = brute_count(m, n)
    assert result.value == value
    assert result.source == BRUTE_FORCE


def test_brute_guard():
    with pytest.raises(GuardExceededError) as e:
        brute_count(5, 5, guard_bits=24)
    assert e.value.exit_code == 3


def test_brute_count_is_independent_of_workers(monkeypatch):
    import kiselman.count.brute as brute
    monkeypatch.setattr(brute, "BLOCK_SIZE", 1 << 8)
    assert brute.brute_count(3, 4, n_workers=2).value == brute.brute_count(3, 4, n_workers=1).value == 1888


def test_grid_agrees():
    rows = count_grid(max_bits=12)
    assert all(row["agree"] for row in rows)
    assert {(row["m"], row["n"]) for row in rows} == {(m, n) for m in range(2, 6) for n in range(1, 12 // m + 1)}


def test_grid_with_brute_only_rows():
    rows = count_grid(max_bits=4, include_brute_only=True)
    ones = [row for row in rows if row["m"] == 1]
    assert [row["brute"] for row in ones] == [2, 4, 8, 16]
    assert all(row["closed"] is None and row["agree"] for row in ones)


def test_compare_counts():
    assert compare_counts(3, 1) == {"m": 3, "n": 1, "closed": 8, "brute": 8, "agree": True}


def test_dn_cardinality():
    assert [dn_cardinality(n).value for n in (1, 2, 3)] == [2, 15, 330]
    assert [r.value for r in dn_cardinalities()][:4] == [2, 15, 330, 16927]
    with pytest.raises(DomainError):
        dn_cardinality(6)


def test_count_result():
    r = CountResult(2, 2, 15, CLOSED_FORMULA)
    assert r.to_dict() == {"m": 2, "n": 2, "value": "15", "source": "closed_formula"}
    assert CountResult.decode(r.encode()) == r
    with pytest.raises(DomainError):
        CountResult(2, 2, 17, BRUTE_FORCE)
    with pytest.raises(DomainError):
        CountResult(2, 2, 15, "guess")
