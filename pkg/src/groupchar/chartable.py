"""Exact irreducible character tables of finite groups.

The table is computed by the classical class-matrix method: the structure
constants a_ijk of the class sums give commuting integer matrices whose
simultaneous eigenvectors over a suitable prime field F_q are the central
characters.  Degrees are recovered from the second orthogonality relation
inside F_q, and values are lifted exactly into Q(zeta_e) (e = exponent of
the group) by extracting, for each class, the multiplicity of each e-th
root of unity among the eigenvalues of a representing matrix:

    m_k = e^-1 * sum_s theta(g^s) z^(-s k)   in F_q,

with z a fixed element of multiplicative order e in F_q.  Since q exceeds
twice the square root of |G|, the m_k are determined by their residues and
the recovered values are exact.  No floating point is involved anywhere.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import modular
from .cyclotomic import Cyclotomic, _zeta_powers, euler_phi
from .errors import ConsistencyError, InputError, ResourceError
from .groups import ConjugacyClasses, Group, QuotientMap, Subgroup

PRIME_BOUND = 10_000_000


@dataclass(frozen=True, eq=False)
class Character:
    """A class function on a group with values in Q(zeta_e).

    ``values[c]`` is the value on conjugacy class ``c`` of ``group``.  For
    genuine characters the value on class 0 equals ``degree``.
    """

    group: Group
    degree: int
    values: tuple[Cyclotomic, ...]
    is_irreducible: bool

    @property
    def conductor(self) -> int:
        return self.values[0].conductor

    def value_on_class(self, c: int) -> Cyclotomic:
        return self.values[c]

    def value_at(self, element: int) -> Cyclotomic:
        return self.values[self.group.conjugacy_classes().class_of[element]]

    def is_linear(self) -> bool:
        return self.degree == 1

    def __repr__(self) -> str:
        return f"Character(degree={self.degree} on {self.group.name})"


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """All irreducible characters of a group, rows in a canonical order.

    Rows are sorted by degree, then lexicographically by the concatenated
    coefficient vectors of their values, so the table is independent of the
    eigenspace splitting order.
    """

    group: Group
    classes: ConjugacyClasses
    irreducibles: tuple[Character, ...]
    exponent: int
    field_prime: int
    inverse_class: tuple[int, ...]
    power_map: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.irreducibles)

    def linear(self) -> tuple[Character, ...]:
        return tuple(ch for ch in self.irreducibles if ch.degree == 1)

    def nonlinear(self) -> tuple[Character, ...]:
        return tuple(ch for ch in self.irreducibles if ch.degree > 1)


# ---------------------------------------------------------------------------
# primes and roots of unity in F_q

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def dixon_prime(order: int, exponent: int, bound: int = PRIME_BOUND) -> int:
    """Smallest prime q = 1 (mod exponent) with q > 2*sqrt(order)."""
    floor_limit = math.isqrt(4 * order)  # q must exceed 2*sqrt(order)
    q = exponent + 1
    while q <= floor_limit or not _is_prime(q):
        q += exponent
        if q > bound:
            raise ResourceError(f"no usable prime below {bound}")
    return q


def _element_of_order(e: int, q: int) -> int:
    """Smallest-seeded element of multiplicative order exactly e in F_q."""
    if e == 1:
        return 1
    prime_parts = []
    n = e
    p = 2
    while p * p <= n:
        if n % p == 0:
            prime_parts.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        prime_parts.append(n)
    for c in range(2, q):
        z = pow(c, (q - 1) // e, q)
        if z != 1 and all(pow(z, e // pp, q) != 1 for pp in prime_parts):
            return z
    raise ConsistencyError("no element of the required order in F_q")


# ---------------------------------------------------------------------------
# class matrices and eigenspace splitting

def class_matrix(g: Group, classes: ConjugacyClasses, i: int) -> np.ndarray:
    """Matrix M_i with M_i[j, t] = a_ijt, the number of ways z_t = x*y with
    x in class i and y in class j."""
    k = len(classes)
    m = np.zeros((k, k), dtype=np.int64)
    class_of = classes.class_of
    reps = classes.reps
    for x in classes.members[i]:
        xi = g.inv(x)
        for t in range(k):
            m[class_of[g.mul(xi, reps[t])], t] += 1
    return m


class _MatrixPool:
    """Lazily built class matrices, optionally prefetched by a thread pool."""

    def __init__(self, g: Group, classes: ConjugacyClasses, parallel: int = 1):
        self._g = g
        self._classes = classes
        self._cache: dict[int, np.ndarray] = {}
        if parallel > 1:
            with ThreadPoolExecutor(max_workers=parallel) as pool:
                futures = {i: pool.submit(class_matrix, g, classes, i)
                           for i in range(len(classes))}
            self._cache = {i: f.result() for i, f in futures.items()}

    def get(self, i: int) -> np.ndarray:
        if i not in self._cache:
            self._cache[i] = class_matrix(self._g, self._classes, i)
        return self._cache[i]


def _split_spaces(spaces, matrix, q):
    """Refine a list of (rows, pivots) common eigenspaces under one matrix."""
    out = []
    changed = False
    for rows, pivots in spaces:
        d = rows.shape[0]
        if d == 1:
            out.append((rows, pivots))
            continue
        b = rows.T  # columns span the space; rows[pivots] is the identity
        restricted = (matrix @ b % q)[list(pivots), :] % q
        eye = np.eye(d, dtype=np.int64)
        pieces = []
        found = 0
        for lam in range(q):
            ns = modular.nullspace((restricted - lam * eye) % q, q)
            if ns.shape[0]:
                pieces.append(ns)
                found += ns.shape[0]
                if found == d:
                    break
        if found != d:
            raise ConsistencyError("class matrix not diagonalisable over F_q")
        if len(pieces) == 1:
            out.append((rows, pivots))
            continue
        changed = True
        for ns in pieces:
            new_rows, new_pivots = modular.rref(ns @ rows % q, q)
            out.append((new_rows, new_pivots))
    return out, changed


def _power_map(g: Group, classes: ConjugacyClasses, e: int) -> tuple[tuple[int, ...], ...]:
    class_of = classes.class_of
    pm = []
    for rep in classes.reps:
        row = []
        x = 0
        for _ in range(e):
            row.append(class_of[x])
            x = g.mul(x, rep)
        pm.append(tuple(row))
    return tuple(pm)


# ---------------------------------------------------------------------------
# the table itself

def character_table(g: Group, *, split_order: Sequence[int] | None = None,
                    randomized: bool = False, seed: int = 0,
                    prime_bound: int = PRIME_BOUND,
                    parallel: int = 1) -> CharacterTable:
    """Exact character table of ``g``.

    ``split_order`` overrides the order in which class matrices are used to
    refine the common eigenspaces (the resulting table is identical, as rows
    are sorted canonically).  ``randomized`` enables a seeded fast path that
    first splits on a random linear combination of all class matrices.
    """
    classes = g.conjugacy_classes()
    k = len(classes)
    e = g.exponent
    q = dixon_prime(g.order, e, prime_bound)
    pool = _MatrixPool(g, classes, parallel=parallel)

    eye = np.eye(k, dtype=np.int64)
    spaces = [(eye.copy(), tuple(range(k)))]

    if randomized and k > 1:
        rng = random.Random(seed)
        for _ in range(3):
            if all(rows.shape[0] == 1 for rows, _ in spaces):
                break
            combo = np.zeros((k, k), dtype=np.int64)
            for i in range(1, k):
                combo = (combo + rng.randrange(q) * pool.get(i)) % q
            spaces, _ = _split_spaces(spaces, combo, q)

    order_list = list(split_order) if split_order is not None else list(range(1, k))
    for i in order_list:
        if not 0 <= i < k:
            raise InputError(f"split order entry {i} is not a class index")
        if all(rows.shape[0] == 1 for rows, _ in spaces):
            break
        spaces, _ = _split_spaces(spaces, pool.get(i), q)
    if any(rows.shape[0] != 1 for rows, _ in spaces):
        raise ConsistencyError("class matrices failed to separate all characters")
    if len(spaces) != k:
        raise ConsistencyError("wrong number of one-dimensional eigenspaces")

    inverse_class = tuple(classes.class_of[g.inv(r)] for r in classes.reps)
    inv_sizes = [pow(len(m), -1, q) for m in classes.members]
    pm = _power_map(g, classes, e)
    z = _element_of_order(e, q)
    zpow = [1] * e
    for j in range(1, e):
        zpow[j] = zpow[j - 1] * z % q
    inv_e = pow(e, -1, q)
    zeta_rows = _zeta_powers(e)
    phi = euler_phi(e)
    max_degree = math.isqrt(g.order)

    chars = []
    for rows, _ in spaces:
        v = [int(c) for c in rows[0]]
        if v[0] == 0:
            raise ConsistencyError("eigenvector vanishes on the identity class")
        scale = pow(v[0], -1, q)
        omega = [c * scale % q for c in v]
        dot = sum(omega[t] * omega[inverse_class[t]] * inv_sizes[t] for t in range(k)) % q
        dsq = g.order * pow(dot, -1, q) % q
        degree = next((d for d in range(1, max_degree + 1) if d * d % q == dsq), None)
        if degree is None:
            raise ConsistencyError("no integer degree matches the squared residue")
        theta = [degree * omega[t] * inv_sizes[t] % q for t in range(k)]

        values = []
        for j in range(k):
            coeffs = [Fraction(0)] * phi
            total = 0
            for kk in range(e):
                m_kk = inv_e * sum(
                    theta[pm[j][s]] * zpow[(-s * kk) % e] for s in range(e)) % q
                if m_kk:
                    total += m_kk
                    row = zeta_rows[kk]
                    for t in range(phi):
                        if row[t]:
                            coeffs[t] += m_kk * row[t]
            if total != degree:
                raise ConsistencyError("root-of-unity multiplicities do not sum "
                                       "to the degree")
            values.append(Cyclotomic(e, coeffs))
        if not values[0].equals_rational(degree):
            raise ConsistencyError("identity value differs from the degree")
        chars.append(Character(g, degree, tuple(values), True))

    chars.sort(key=lambda ch: (ch.degree, tuple(v.coeffs for v in ch.values)))
    if sum(ch.degree ** 2 for ch in chars) != g.order:
        raise ConsistencyError("degrees fail the sum-of-squares identity")
    return CharacterTable(g, classes, tuple(chars), e, q, inverse_class, pm)


# ---------------------------------------------------------------------------
# operations on characters

def inner_product(chi: Character, psi: Character) -> Fraction:
    """Standard inner product <chi, psi>; always rational for characters."""
    if chi.group is not psi.group:
        raise InputError("characters live on different groups")
    e = math.lcm(chi.conductor, psi.conductor)
    classes = chi.group.conjugacy_classes()
    total = Cyclotomic.zero(e)
    for size, a, b in zip(classes.sizes, chi.values, psi.values):
        total = total + size * (a.embed(e) * b.embed(e).conj())
    r = total.as_rational()
    if r is None:
        raise ConsistencyError("inner product of characters must be rational")
    return r / chi.group.order


def decompose(chi: Character, table: CharacterTable) -> tuple[int, ...]:
    """Multiplicities of ``chi`` against the irreducibles of ``table``."""
    if chi.group is not table.group:
        raise InputError("character does not live on the table's group")
    mults = []
    for irr in table.irreducibles:
        m = inner_product(chi, irr)
        if m.denominator != 1 or m < 0:
            raise InputError("class function is not a genuine character")
        mults.append(int(m))
    return tuple(mults)


def _transversal(g: Group, h: Subgroup) -> list[int]:
    """Representatives t of the right cosets H t, ascending in first element."""
    covered = [False] * g.order
    reps = []
    for x in range(g.order):
        if not covered[x]:
            reps.append(x)
            for m in h.members:
                covered[g.mul(m, x)] = True
    return reps


def induce(lam: Character, h: Subgroup, g: Group) -> Character:
    """Induced class function lam^G(x) = sum over the transversal of lam(t x t^-1)."""
    if h.parent is not g:
        raise InputError("subgroup does not live in the target group")
    hg = h.as_group()
    if lam.group is not hg:
        raise InputError("character is not on the given subgroup")
    e = g.exponent
    h_classes = hg.conjugacy_classes()
    lam_e = [v.embed(e) for v in lam.values]
    member_set = frozenset(h.members)
    sub_index = {m: i for i, m in enumerate(h.members)}
    transversal = _transversal(g, h)
    values = []
    for rep in g.conjugacy_classes().reps:
        acc = Cyclotomic.zero(e)
        for t in transversal:
            y = g.mul(g.mul(t, rep), g.inv(t))
            if y in member_set:
                acc = acc + lam_e[h_classes.class_of[sub_index[y]]]
        values.append(acc)
    degree = (g.order // h.order) * lam.degree
    if not values[0].equals_rational(degree):
        raise ConsistencyError("induced degree mismatch")
    result = Character(g, degree, tuple(values), False)
    return Character(g, degree, tuple(values),
                     inner_product(result, result) == 1)


def restrict(chi: Character, h: Subgroup) -> Character:
    """Restriction of ``chi`` to a subgroup, as a character of h.as_group()."""
    g = chi.group
    if h.parent is not g:
        raise InputError("subgroup does not live in the character's group")
    hg = h.as_group()
    g_class_of = g.conjugacy_classes().class_of
    values = tuple(chi.values[g_class_of[h.to_parent(r)]]
                   for r in hg.conjugacy_classes().reps)
    result = Character(hg, chi.degree, values, False)
    return Character(hg, chi.degree, values, inner_product(result, result) == 1)


def kernel(chi: Character) -> Subgroup:
    """Elements where the character value equals its degree."""
    classes = chi.group.conjugacy_classes()
    members: list[int] = []
    for mem, v in zip(classes.members, chi.values):
        if v.equals_rational(chi.degree):
            members.extend(mem)
    return Subgroup(chi.group, members)


def char_center(chi: Character) -> Subgroup:
    """Elements where the value has absolute value equal to the degree."""
    classes = chi.group.conjugacy_classes()
    target = Fraction(chi.degree) ** 2
    members: list[int] = []
    for mem, v in zip(classes.members, chi.values):
        if v.abs_squared().equals_rational(target):
            members.extend(mem)
    return Subgroup(chi.group, members)


def degree_set(table: CharacterTable) -> tuple[int, ...]:
    return tuple(sorted({ch.degree for ch in table.irreducibles}))


def lift(chibar: Character, qm: QuotientMap) -> Character:
    """Pull a character of G/N back to G along the projection."""
    if chibar.group is not qm.target:
        raise InputError("character is not on the quotient group")
    e = qm.source.exponent
    target_class_of = qm.target.conjugacy_classes().class_of
    values = tuple(
        chibar.values[target_class_of[qm.projection[rep]]].embed(e)
        for rep in qm.source.conjugacy_classes().reps)
    return Character(qm.source, chibar.degree, values, chibar.is_irreducible)


def deflate(chi: Character, n_or_qm: Subgroup | QuotientMap) -> Character | None:
    """View ``chi`` as a character of G/N; None unless N is inside the kernel."""
    from .groups import quotient  # local import to keep module load cheap

    if isinstance(n_or_qm, QuotientMap):
        qm = n_or_qm
    else:
        qm = quotient(n_or_qm.parent, n_or_qm)
    if chi.group is not qm.source:
        raise InputError("character does not live on the quotient's source")
    if not kernel(chi).contains_set(qm.kernel):
        return None
    source_class_of = qm.source.conjugacy_classes().class_of
    values = tuple(chi.values[source_class_of[qm.section[rep]]]
                   for rep in qm.target.conjugacy_classes().reps)
    return Character(qm.target, chi.degree, values, chi.is_irreducible)


def value_key(chi: Character, e: int | None = None):
    """Canonical comparison key for a character's values at conductor ``e``."""
    if e is None:
        e = chi.conductor
    return (chi.degree, tuple(v.embed(e).coeffs for v in chi.values))


def same_values(a: Character, b: Character) -> bool:
    """Classwise equality of two class functions on the same group."""
    if a.group is not b.group:
        raise InputError("characters live on different groups")
    e = math.lcm(a.conductor, b.conductor)
    return value_key(a, e) == value_key(b, e)
