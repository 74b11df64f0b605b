"""Divisor counts, catalog lookups, realization, and count reports."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bwcontact.geography import (
    Catalog,
    Q_lower_bound,
    Q_upper_bound,
    catalog_realizable,
    contact_count_report,
    count_N,
    count_N_prime,
    realize_level,
)
from bwcontact.manifolds import SymplecticFourManifold, barden_sum_name


def test_count_values():
    assert count_N(12) == 3       # 4, 6, 12
    assert count_N(15) == 2       # 5, 15
    assert count_N(7) == 1
    assert count_N(1) == 0
    assert count_N(60) == 9       # 4,5,6,10,12,15,20,30,60
    assert count_N_prime(12) == 0
    assert count_N_prime(20) == 1  # 5
    assert count_N_prime(60) == 2  # 5, 15
    assert count_N_prime(9) == 1   # 9
    with pytest.raises(ValueError):
        count_N(0)
    with pytest.raises(ValueError):
        count_N_prime(-3)


@given(st.integers(1, 3000))
def test_count_against_direct_enumeration(d):
    divisors = [k for k in range(1, d + 1) if d % k == 0]
    assert count_N(d) == sum(1 for k in divisors if k >= 4)
    assert count_N_prime(d) == sum(1 for k in divisors if k >= 4 and k % 2)


def test_catalog_realizable_entries():
    # rank 10 admits the chi_h = 1 family and Dolgachev surfaces, odd k only
    entries = catalog_realizable(10, 5)
    assert {e.family for e in entries} == {
        "homotopy elliptic surface", "Dolgachev surface",
    }
    assert all(e.b2 == 10 and e.b2_plus == 1 for e in entries)
    assert catalog_realizable(10, 4) == ()
    # rank 22 (chi_h = 2): any k
    entries = catalog_realizable(22, 4)
    assert len(entries) == 1
    assert entries[0].b2_plus == 3
    # rank off the families: nothing
    assert catalog_realizable(11, 5) == ()
    assert catalog_realizable(12, 5) == ()
    with pytest.raises(ValueError):
        catalog_realizable(0, 5)
    with pytest.raises(ValueError):
        catalog_realizable(10, 0)


def test_custom_catalog(tmp_path):
    rules = [
        {
            "kind": "explicit", "family": "test family", "b2": 7,
            "b2_plus": 1, "dK_parity": "even",
        }
    ]
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(rules))
    cat = Catalog.from_path(path)
    assert cat.realizable(7, 4)
    assert cat.realizable(7, 5) == ()
    assert cat.realizable(10, 5) == ()  # built-ins replaced wholesale
    with pytest.raises(ValueError):
        Catalog([{"kind": "nonsense"}])
    with pytest.raises(ValueError):
        Catalog([{"kind": "explicit", "family": "x", "b2": 7}])
    with pytest.raises(ValueError):
        Catalog([
            {"kind": "explicit", "family": "x", "b2": 7, "b2_plus": 1,
             "dK_parity": "sometimes"}
        ])


def test_Q_lower_bound_values():
    assert Q_lower_bound(10, 15) == 2     # k = 5, 15
    assert Q_lower_bound(22, 12) == 3     # k = 4, 6, 12
    assert Q_lower_bound(10, 12) == 0     # odd k only, none divides 12
    assert Q_lower_bound(11, 60) == 0     # rank matches no family
    # chi_h = 3 is odd, so only odd k: all of 5, 9, 15, 45 qualify
    assert Q_lower_bound(34, 45) == 4


def test_Q_upper_bound_values():
    assert Q_upper_bound(21, 12) == (3, 0)
    assert Q_upper_bound(22, 12) == (3, None)
    assert Q_upper_bound(9, 7) == (1, None)
    assert Q_upper_bound(10, 20) == (4, None)   # 10 = 2 mod 4: no refinement
    assert Q_upper_bound(12, 20) == (4, 1)      # refinement: odd k only


def test_realize_level():
    desc = SymplecticFourManifold(
        name="e", b2=4, b2_plus=1, c1=(4, 0, 0, 0), omega=(0, 0, 0, 1),
        spin=True,
    )
    for m in (1, 2, 7):
        out = realize_level(desc, m)
        assert out.level == 4 * m
        assert out.omega_adapted == (1, m, 0, 0)
        assert out.hypothesis
    # c1 entries off the axis still work through the adapted basis
    skew = SymplecticFourManifold(
        name="s", b2=3, b2_plus=1, c1=(6, 4, 2), omega=(1, 0, 0), spin=True,
    )
    out = realize_level(skew, 3)
    assert out.level == 3 * 2  # d(K) = gcd(6, 4, 2) = 2


def test_realize_level_errors():
    flat = SymplecticFourManifold(
        name="f", b2=2, b2_plus=1, c1=(0, 0), omega=(1, 1), spin=True,
    )
    with pytest.raises(ValueError):
        realize_level(flat, 2)      # c1 = 0: only level 0
    rank1 = SymplecticFourManifold(
        name="r", b2=1, b2_plus=1, c1=(2,), omega=(1,), spin=True,
    )
    with pytest.raises(ValueError):
        realize_level(rank1, 2)
    good = SymplecticFourManifold(
        name="g", b2=2, b2_plus=1, c1=(2, 0), omega=(1, 1), spin=True,
    )
    with pytest.raises(ValueError):
        realize_level(good, 0)


def test_contact_count_reports():
    rep = contact_count_report(22, 12)
    assert rep.manifold == barden_sum_name(21, twisted=False)
    assert rep.spin_X
    assert (rep.lower_bound, rep.upper_bound_N, rep.upper_bound_refined) == (
        3, 3, None,
    )
    assert rep.exact
    assert [k for k, _ in rep.realizations] == [4, 6, 12]

    rep = contact_count_report(10, 15)
    assert rep.manifold == barden_sum_name(8, twisted=True)
    assert not rep.spin_X
    assert rep.lower_bound == 2 and rep.exact is (2 == count_N(15))

    rep = contact_count_report(10, 12)
    assert (rep.lower_bound, rep.upper_bound_refined) == (0, None)
    assert not rep.exact

    rep = contact_count_report(21, 12)
    assert rep.upper_bound_refined == 0
    assert rep.lower_bound == 0
    assert rep.exact

    with pytest.raises(ValueError):
        contact_count_report(1, 12)
    with pytest.raises(ValueError):
        contact_count_report(22, 0)


@given(st.integers(2, 40), st.integers(1, 200))
def test_count_report_bounds_are_ordered(r, d):
    rep = contact_count_report(r, d)
    assert 0 <= rep.lower_bound <= rep.upper_bound_N == count_N(d)
    if rep.upper_bound_refined is not None:
        assert rep.lower_bound <= rep.upper_bound_refined
        assert d % 2 == 0 and r % 4 != 2
    assert rep.exact == (
        rep.lower_bound
        == (
            rep.upper_bound_N
            if rep.upper_bound_refined is None
            else min(rep.upper_bound_N, rep.upper_bound_refined)
        )
    )
