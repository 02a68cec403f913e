import pytest

from genus0.etaforms import EtaProduct
from genus0.levels import cusps, eta_order_condition, genus, genus0_levels, level_invariants, psi


def test_genus0_levels():
    assert genus0_levels() == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25]


def test_genus_11():
    assert genus(11) == 1


def test_invariants_13():
    inv = level_invariants(13)
    assert (inv.degree, inv.eps2, inv.eps3, inv.eps_inf, inv.genus) == (14, 2, 2, 2, 0)


def test_psi_values():
    assert [psi(n) for n in (2, 3, 4, 6, 12, 25)] == [3, 4, 6, 12, 24, 30]


@pytest.mark.parametrize("N,g", [(11, 1), (14, 1), (22, 2), (23, 2), (37, 2), (64, 3), (100, 7)])
def test_known_genera(N, g):
    # values from dimension tables of weight-2 cusp forms on Gamma0(N)
    assert genus(N) == g


def test_cusp_count():
    assert len(cusps(4)) == 3
    assert len(cusps(12)) == 6
    assert len(cusps(25)) == 6


def test_order_of_hauptmodul_at_cusps():
    p = EtaProduct(6, {1: 5, 2: -1, 3: 1, 6: -5})
    assert eta_order_condition(p, 6) == -1   # simple pole at infinity
    assert eta_order_condition(p, 1) == 1    # simple zero at 0
    assert eta_order_condition(p, 2) == 0
    assert eta_order_condition(p, 3) == 0
