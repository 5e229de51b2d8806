"""Character table construction and the operations built on top of it.

Expected values come from the textbook tables of small groups (symmetric,
dihedral, quaternion, cyclic, extraspecial of order 27), identified
semantically through class sizes and element orders rather than by class
position.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from groupchar import (
    Character,
    Cyclotomic,
    InputError,
    char_center,
    character_table,
    decompose,
    deflate,
    dixon_prime,
    induce,
    inner_product,
    kernel,
    lift,
    quotient,
    restrict,
    root_of_unity,
    same_values,
    value_key,
)
from groupchar.groups import Subgroup


def _class_index(table, size, element_order):
    csz = [len(m) for m in table.classes.members]
    orders = table.group.element_orders()
    found = [c for c, rep in enumerate(table.classes.reps)
             if csz[c] == size and orders[rep] == element_order]
    assert len(found) == 1
    return found[0]


def test_s3_table_matches_textbook(tables):
    t = tables["s3"]
    ident = _class_index(t, 1, 1)
    transpositions = _class_index(t, 3, 2)
    threecycles = _class_index(t, 2, 3)
    rows = {ch.degree: [] for ch in t.irreducibles}
    for ch in t.irreducibles:
        rows[ch.degree].append(ch)
    assert sorted(ch.degree for ch in t.irreducibles) == [1, 1, 2]
    two = rows[2][0]
    assert two.values[ident] == 2
    assert two.values[transpositions] == 0
    assert two.values[threecycles] == -1
    linear_vals = {(ch.values[transpositions].as_rational(),
                    ch.values[threecycles].as_rational()) for ch in rows[1]}
    assert linear_vals == {(Fraction(1), Fraction(1)), (Fraction(-1), Fraction(1))}
    # canonical row order sorts by degree first
    degrees = [ch.degree for ch in t.irreducibles]
    assert degrees == sorted(degrees)


def test_cyclic_rows_are_powers_of_a_root(tables):
    t = tables["c6"]
    g = t.group
    assert len(t) == 6 and all(ch.degree == 1 for ch in t.irreducibles)
    class_of = t.classes.class_of
    for ch in t.irreducibles:  # each row is multiplicative
        for x in range(6):
            for y in range(6):
                lhs = ch.values[class_of[g.mul(x, y)]]
                assert lhs == ch.values[class_of[x]] * ch.values[class_of[y]]
    seen = set()
    for ch in t.irreducibles:
        for k in range(6):
            if all(ch.value_at(x) == root_of_unity((k * _log(g, x)) % 6, 6).embed(t.exponent)
                   for x in range(6)):
                seen.add(k)
    assert seen == set(range(6))


def _log(g, x):
    """Discrete log of x base the generator of a cyclic group."""
    gen = next(y for y in range(g.order) if g.element_orders()[y] == g.order)
    acc, k = 0, 0
    while acc != x:
        acc = g.mul(acc, gen)
        k += 1
    return k


def test_heis3_nonlinear_rows(tables):
    t = tables["heis3"]
    g = t.group
    z = g.center()
    assert z.order == 3
    nl = t.nonlinear()
    assert [ch.degree for ch in nl] == [3, 3]
    central = {t.classes.class_of[m] for m in z.members}
    for ch in nl:
        for c in range(len(t.classes)):
            v = ch.values[c]
            if c in central:
                assert v.abs_squared() == 9  # 3 times a root of unity
                assert any(v == root_of_unity(k, 3).embed(t.exponent) * 3
                           for k in range(3))
            else:
                assert v.is_zero()


def test_row_orthogonality(tables):
    for name in ("s3", "d4", "q8", "heis3"):
        t = tables[name]
        for i, chi in enumerate(t.irreducibles):
            for j, psi in enumerate(t.irreducibles):
                assert inner_product(chi, psi) == (1 if i == j else 0)


def test_column_orthogonality(tables):
    for name in ("s3", "d5", "heis3"):
        t = tables[name]
        sizes = [len(m) for m in t.classes.members]
        n = t.group.order
        for a in range(len(t.classes)):
            for b in range(len(t.classes)):
                acc = Cyclotomic.zero(t.exponent)
                for ch in t.irreducibles:
                    acc = acc + ch.values[a] * ch.values[b].conj()
                expected = Fraction(n, sizes[a]) if a == b else Fraction(0)
                assert acc.equals_rational(expected)


def test_degree_squares_sum_to_order(tables):
    for name, t in tables.items():
        assert sum(ch.degree ** 2 for ch in t.irreducibles) == t.group.order
        assert len(t.linear()) == t.group.order // t.group.derived_subgroup().order


def test_decompose_recovers_multiplicities(tables):
    t = tables["d4"]
    chi, psi = t.irreducibles[0], t.irreducibles[-1]
    sum_vals = tuple(a.embed(t.exponent) + b.embed(t.exponent) * 2
                     for a, b in zip(chi.values, psi.values))
    virtual = Character(t.group, chi.degree + 2 * psi.degree, sum_vals, False)
    mults = decompose(virtual, t)
    expected = [0] * len(t)
    expected[0], expected[len(t) - 1] = 1, 2
    assert list(mults) == expected


def test_frobenius_reciprocity(tables):
    g = tables["s3"].group
    h = g.derived_subgroup()  # alternating subgroup of order 3
    ht = character_table(h.as_group())
    gt = tables["s3"]
    for lam in ht.irreducibles:
        up = induce(lam, h, g)
        for chi in gt.irreducibles:
            down = restrict(chi, h)
            assert inner_product(up, chi) == inner_product(lam, down)


def test_induction_from_trivial_subgroup_is_regular(tables):
    g = tables["s3"].group
    h = Subgroup(g, [0])
    lam = character_table(h.as_group()).irreducibles[0]
    reg = induce(lam, h, g)
    assert reg.degree == 6
    assert reg.values[0] == 6
    assert all(v.is_zero() for v in reg.values[1:])
    # multiplicity of each irreducible in the regular character is its degree
    assert list(decompose(reg, tables["s3"])) == [ch.degree for ch in tables["s3"].irreducibles]


def test_central_induction_in_heis3(tables):
    t = tables["heis3"]
    g = t.group
    z = g.center()
    zt = character_table(z.as_group())
    nontrivial = [lam for lam in zt.irreducibles
                  if not all(v.equals_rational(1) for v in lam.values)]
    assert len(nontrivial) == 2
    for lam in nontrivial:
        up = induce(lam, z, g)
        assert inner_product(up, up) == 9
        mults = decompose(up, t)
        assert sorted(mults) == [0] * (len(t) - 1) + [3]
        pos = mults.index(3)
        assert t.irreducibles[pos].degree == 3


def test_restriction_of_s3_twodim_to_a3(tables):
    g = tables["s3"].group
    h = g.derived_subgroup()
    two = tables["s3"].nonlinear()[0]
    down = restrict(two, h)
    assert down.degree == 2
    assert inner_product(down, down) == 2
    ht = character_table(h.as_group())
    assert list(decompose(down, ht)).count(1) == 2


def test_kernels_and_centers(tables):
    t = tables["q8"]
    two = t.nonlinear()[0]
    assert kernel(two).order == 1  # faithful
    assert char_center(two).members == t.group.center().members
    s3t = tables["s3"]
    sign = next(ch for ch in s3t.linear()
                if not all(v.equals_rational(1) for v in ch.values))
    assert kernel(sign).order == 3
    assert char_center(sign).order == 6
    assert kernel(s3t.irreducibles[1 if s3t.irreducibles[1] is not sign else 0]).order in (3, 6)


def test_lift_and_deflate_through_central_quotient(tables):
    t = tables["heis3"]
    g = t.group
    qm = quotient(g, g.center())
    qt = character_table(qm.target)
    lifted = [lift(ch, qm) for ch in qt.irreducibles]
    assert len(lifted) == 9
    keys = {value_key(ch, t.exponent) for ch in t.irreducibles}
    for up in lifted:
        assert up.is_irreducible
        assert value_key(up, t.exponent) in keys
        back = deflate(up, qm)
        assert back is not None and same_values(back, deflate(up, qm))
        assert value_key(back, qt.exponent) in {value_key(ch, qt.exponent)
                                                for ch in qt.irreducibles}
    # characters whose kernel misses the centre do not deflate
    for ch in t.nonlinear():
        assert deflate(ch, qm) is None
    # deflate also accepts the bare normal subgroup
    assert deflate(t.linear()[0], g.center()) is not None


def test_table_is_independent_of_splitting_strategy(tables):
    for name in ("s3", "heis3"):
        base = tables[name]
        k = len(base.classes)
        variants = [
            character_table(base.group, split_order=list(range(k - 1, 0, -1))),
            character_table(base.group, randomized=True, seed=123),
            character_table(base.group, parallel=2),
        ]
        base_keys = [value_key(ch, base.exponent) for ch in base.irreducibles]
        for v in variants:
            assert [value_key(ch, v.exponent) for ch in v.irreducibles] == base_keys


def test_dixon_prime_choice():
    assert dixon_prime(6, 6) == 7
    assert dixon_prime(243, 3) == 37
    for order, e in ((6, 6), (243, 3), (8, 4), (10000, 12)):
        q = dixon_prime(order, e)
        assert q % e == 1
        assert q * q > 4 * order
        assert all(q % d for d in range(2, int(q ** 0.5) + 1))


def test_inverse_class_and_power_map(tables):
    t = tables["s3"]
    assert list(t.inverse_class) == [0, 1, 2]  # all classes are real
    c3 = tables["c3"]
    assert c3.inverse_class[1] == 2 and c3.inverse_class[2] == 1
    g = t.group
    class_of = g.conjugacy_classes().class_of
    for c, rep in enumerate(t.classes.reps):
        assert t.power_map[c][0] == 0
        for k in range(1, t.exponent):
            assert t.power_map[c][k] == class_of[g.power(rep, k)]


def test_induce_rejects_foreign_characters(tables):
    g = tables["s3"].group
    h = g.derived_subgroup()
    lam = tables["c3"].irreducibles[0]
    with pytest.raises(InputError):
        induce(lam, h, g)
