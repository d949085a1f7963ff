"""Seed mutation oracle: matrices, mutation, exploration, verification."""

import pytest

from foldmatch import geometry as geo
from foldmatch import oracle as orc
from foldmatch import snake as sn
from foldmatch.polynomials import LaurentPolynomial


def test_signed_adjacency_examples(tbar_a, fix_b, fix_c):
    b = orc.signed_adjacency(tbar_a)
    assert abs(b[0][1]) == 1 and b[0][2] == 0 and abs(b[1][2]) == 1
    assert all(b[i][j] == -b[j][i] for i in range(3) for j in range(3))
    _, tbar_b, _ = geo.restrict(fix_b[0])
    bb = orc.signed_adjacency(tbar_b)
    assert abs(bb[0][1]) == 1 and abs(bb[1][2]) == 1 and bb[0][2] == 0
    _, tbar_c, _ = geo.restrict(fix_c[0])
    bc = orc.signed_adjacency(tbar_c)
    assert all(abs(bc[i][j]) == 1 for i in range(3) for j in range(3) if i != j)


def test_fold_matrix_shape(fix_b):
    t, _, _, _ = fix_b
    m = orc.fold_exchange_matrix(t, "B")
    n = t.n
    assert any(abs(m[i][n - 1]) == 2 or abs(m[n - 1][i]) == 2 for i in range(n - 1))
    mc = orc.fold_exchange_matrix(t, "C")
    assert mc == tuple(tuple(-m[j][i] for j in range(n)) for i in range(n))


@pytest.mark.parametrize("kind,diag", [("B", (2, 2, 1)), ("C", (1, 1, 2))])
def test_fold_matrix_skew_symmetrizable(fix_b, kind, diag):
    t, _, _, _ = fix_b
    m = orc.fold_exchange_matrix(t, kind)
    n = t.n
    for i in range(n):
        for j in range(n):
            assert diag[i] * m[i][j] == -diag[j] * m[j][i]


def test_fold_rank2():
    t = geo.theta_invariant_triangulation(2, [(1, 3), (0, 3), (0, 4)], (3, 0))
    m = orc.fold_exchange_matrix(t, "B")
    entries = sorted(abs(m[i][j]) for i in range(2) for j in range(2))
    assert entries == [0, 0, 1, 2]


def test_mutation_involution(fix_b):
    t, _, _, _ = fix_b
    seed = orc.Seed.initial(orc.fold_exchange_matrix(t, "B"), t)
    for k in (1, 2, 3):
        twice = orc.mutate_seed(orc.mutate_seed(seed, k), k)
        assert twice.xs == seed.xs
        assert twice.b == seed.b and twice.c == seed.c


def test_mutation_exchange_binomial(fix_b):
    t, _, _, _ = fix_b
    seed = orc.Seed.initial(orc.fold_exchange_matrix(t, "B"), t)
    mutated = orc.mutate_seed(seed, 2)
    new_x = mutated.xs[1]
    num = new_x * seed.xs[1]
    assert len(num.terms) == 2


def test_f_and_g_initial(fix_b):
    t, _, _, _ = fix_b
    b0 = orc.fold_exchange_matrix(t, "B")
    for i in range(3):
        f, g = orc.f_and_g(LaurentPolynomial.x_var(3, i), b0)
        assert f.is_one()
        assert g == tuple(1 if j == i else 0 for j in range(3))


@pytest.mark.parametrize("n,seeds,variables", [(2, 6, 6), (3, 20, 12)])
def test_explore_counts(n, seeds, variables):
    t = next(geo.theta_invariant_triangulations(n))
    for kind in ("B", "C"):
        res = orc.explore(t, kind)
        assert res.seed_count == seeds
        assert len(res.table) == variables
        for f, _ in res.table.values():
            assert f.constant_term() == 1
            assert all(c > 0 for c in f.terms.values())
            assert len(f.max_terms()) == 1


def test_oracle_matches_snake_type_a(tbar_a, fix_a_poly):
    f, g = orc.oracle_f_and_g_a(tbar_a, (1, 4))
    assert f == fix_a_poly
    assert (f, g) == sn.f_and_g((1, 4), tbar_a)


def test_oracle_fixture_values(fix_b, fix_c):
    tb, ob, fb, gb = fix_b
    res = orc.explore(tb, "B")
    assert res.table[ob] == (fb, gb)
    tc, oc, fc, gc = fix_c
    res = orc.explore(tc, "C")
    assert res.table[oc] == (fc, gc)


def test_verify_theorems_fixtures(fix_b, fix_c):
    tb, _, _, _ = fix_b
    rep = orc.verify_theorems(tb, "B")
    assert rep.passed and len(rep.rows) == 12
    assert rep.summary() == "12/12 orbits OK"
    tc, _, _, _ = fix_c
    rep = orc.verify_theorems(tc, "C")
    assert rep.passed
    payload = rep.as_dict()
    assert payload["passed"] is True and len(payload["orbits"]) == 12


def test_verify_detects_wrong_folding(fix_c):
    """Feeding the transposed-binding table must surface mismatches."""
    t, _, _, _ = fix_c
    wrong = orc.explore_with_matrix(t, orc.fold_exchange_matrix(t, "B")).table
    rep = orc.verify_theorems(t, "C", table=wrong)
    assert not rep.passed
