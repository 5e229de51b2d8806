"""Finite groups with indexed elements: enumeration, subgroups, quotients.

Elements of a group are the integers 0..order-1 in a canonical order: the
identity is index 0 and the rest follow in breadth-first discovery order from
the generators (taken in input order).  Every algorithm downstream works
through the index-level multiplication oracle, so permutation groups,
collected presentations, direct products and quotient groups all share one
code path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .errors import ConsistencyError, InputError, NotNilpotent, ResourceError

ENUMERATION_CAP = 10**6
DENSE_TABLE_CAP = 4096

Label = Hashable

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _default_gen_names(count: int) -> list[str]:
    return [_LETTERS[i] if i < len(_LETTERS) else f"g{i}" for i in range(count)]


@dataclass(frozen=True)
class ConjugacyClasses:
    """Conjugacy classes of a group, in discovery order (identity class first).

    ``reps[c]`` is the smallest element index of class ``c``, ``members[c]``
    the sorted member indices, and ``class_of[x]`` the class index of x.
    """

    reps: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.reps)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(m) for m in self.members)


class Group:
    """A concrete finite group on indices 0..order-1; index 0 is the identity."""

    __slots__ = (
        "name", "order", "elements", "words", "generators", "meta",
        "_index", "_table", "_compose", "_label_inverse", "_inv",
        "_orders", "_exponent", "_classes", "_center", "_derived",
    )

    def __init__(self, name: str, elements: Sequence[Label], words: Sequence[str],
                 generators: Sequence[int], *, table=None,
                 compose: Callable[[Label, Label], Label] | None = None,
                 label_inverse: Callable[[Label], Label] | None = None,
                 inverses: Sequence[int] | None = None,
                 meta: dict | None = None):
        self.name = name
        self.elements = tuple(elements)
        self.order = len(self.elements)
        self.words = tuple(words)
        self.generators = tuple(generators)
        self.meta = dict(meta) if meta else {}
        self._index = {lab: i for i, lab in enumerate(self.elements)}
        if len(self._index) != self.order:
            raise InputError("duplicate element labels")
        self._table = table
        self._compose = compose
        self._label_inverse = label_inverse
        if table is None and compose is None:
            raise InputError("need a multiplication table or a compose function")
        if inverses is not None:
            self._inv = list(inverses)
        elif table is not None:
            self._inv = [row.index(0) for row in table]
        else:
            self._inv = None
        self._orders = None
        self._exponent = None
        self._classes = None
        self._center = None
        self._derived = None

    def __repr__(self) -> str:
        return f"Group({self.name!r}, order={self.order})"

    # -- multiplication oracle -------------------------------------------

    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return self._table[a][b]
        return self._index[self._compose(self.elements[a], self.elements[b])]

    def inv(self, a: int) -> int:
        if self._inv is not None:
            return self._inv[a]
        lab = self._label_inverse(self.elements[a])
        return self._index[lab]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result, base = 0, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def index_of(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"label {label!r} is not an element of {self.name}") from None

    # -- cached element data ---------------------------------------------

    def element_orders(self) -> tuple[int, ...]:
        if self._orders is None:
            n = self.order
            orders = [0] * n
            orders[0] = 1
            for x in range(1, n):
                if orders[x]:
                    continue
                # walk the cyclic subgroup of x once, then read off all powers
                chain = [x]
                p = self.mul(x, x)
                while p != 0:
                    chain.append(p)
                    if len(chain) > n:
                        raise InputError(
                            f"powers of {self.words[x]!r} never reach the "
                            "identity; the multiplication is not a group law")
                    p = self.mul(p, x)
                m = len(chain) + 1  # includes the identity
                for j, el in enumerate(chain, start=1):
                    if not orders[el]:
                        orders[el] = m // math.gcd(j, m)
            self._orders = tuple(orders)
        return self._orders

    @property
    def exponent(self) -> int:
        if self._exponent is None:
            self._exponent = math.lcm(*self.element_orders())
        return self._exponent

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def conjugacy_classes(self) -> ConjugacyClasses:
        if self._classes is None:
            n = self.order
            class_of = [-1] * n
            gens = list(dict.fromkeys(self.generators))
            inv_gens = [self.inv(g) for g in gens]
            reps: list[int] = []
            members: list[tuple[int, ...]] = []
            for x in range(n):
                if class_of[x] >= 0:
                    continue
                ci = len(reps)
                class_of[x] = ci
                orbit = [x]
                qi = 0
                while qi < len(orbit):
                    y = orbit[qi]
                    qi += 1
                    for g, gi in zip(gens, inv_gens):
                        z = self.mul(self.mul(gi, y), g)
                        if class_of[z] < 0:
                            class_of[z] = ci
                            orbit.append(z)
                reps.append(x)
                members.append(tuple(sorted(orbit)))
            self._classes = ConjugacyClasses(tuple(reps), tuple(members), tuple(class_of))
        return self._classes

    def center(self) -> "Subgroup":
        if self._center is None:
            gens = list(dict.fromkeys(self.generators))
            members = [z for z in range(self.order)
                       if all(self.mul(z, g) == self.mul(g, z) for g in gens)]
            self._center = Subgroup(self, members)
        return self._center

    def derived_subgroup(self) -> "Subgroup":
        if self._derived is None:
            whole = self.full_subgroup()
            self._derived = commutator_subgroup(whole, whole)
        return self._derived

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, range(self.order))


def build_group(name: str, gen_labels: Sequence[Label],
                compose: Callable[[Label, Label], Label], identity: Label, *,
                gen_names: Sequence[str] | None = None,
                label_inverse: Callable[[Label], Label] | None = None,
                cap: int = ENUMERATION_CAP,
                word_fn: Callable[[Label], str] | None = None,
                meta: dict | None = None) -> Group:
    """Enumerate the closure of ``gen_labels`` under ``compose``.

    The element order is canonical: identity first, then breadth-first
    discovery multiplying on the right by the generators in input order.
    Raises ResourceError once the closure exceeds ``cap`` elements.
    """
    gens: list[Label] = []
    for lab in gen_labels:
        if lab not in gens:
            gens.append(lab)
    if gen_names is None:
        gen_names = _default_gen_names(len(gens))
    elif len(gen_names) < len(gens):
        raise InputError("fewer generator names than generators")

    elements: list[Label] = [identity]
    index: dict[Label, int] = {identity: 0}
    parents: list[tuple[int, int]] = [(-1, -1)]  # (parent index, generator slot)
    i = 0
    while i < len(elements):
        base = elements[i]
        for gpos, glab in enumerate(gens):
            y = compose(base, glab)
            if y not in index:
                if len(elements) >= cap:
                    raise ResourceError(
                        f"closure of {name} exceeds the enumeration cap ({cap})")
                index[y] = len(elements)
                elements.append(y)
                parents.append((i, gpos))
        i += 1
    n = len(elements)

    if word_fn is not None:
        words = [word_fn(lab) for lab in elements]
    else:
        words = [""] * n
        words[0] = "1"
        for j in range(1, n):
            par, gpos = parents[j]
            words[j] = gen_names[gpos] if par == 0 else words[par] + "*" + gen_names[gpos]

    table = None
    inverses = None
    if n <= DENSE_TABLE_CAP:
        tbl = np.empty((n, n), dtype=np.int32)
        tbl[:, 0] = np.arange(n)
        gen_cols = [np.fromiter((index[compose(el, glab)] for el in elements),
                                dtype=np.int32, count=n) for glab in gens]
        for j in range(1, n):
            par, gpos = parents[j]
            tbl[:, j] = gen_cols[gpos][tbl[:, par]]
        inverses = np.argmin(tbl, axis=1).tolist()
        table = tbl.tolist()

    return Group(name, elements, words, [index[g] for g in gens],
                 table=table, compose=compose, label_inverse=label_inverse,
                 inverses=inverses, meta=meta)


def enumerate_from_permutations(degree: int, perms: Sequence[Sequence[int]], *,
                                name: str | None = None,
                                gen_names: Sequence[str] | None = None,
                                cap: int = ENUMERATION_CAP) -> Group:
    """Group generated by permutations of {0..degree-1} given as image tuples."""
    if degree < 1:
        raise InputError("degree must be at least 1")
    labels = []
    for p in perms:
        t = tuple(p)
        if sorted(t) != list(range(degree)):
            raise InputError(f"not a bijection on 0..{degree - 1}: {t}")
        labels.append(t)

    def compose(p, r):  # p∘r: apply r first
        return tuple(p[r[i]] for i in range(degree))

    def invert(p):
        out = [0] * degree
        for i, pi in enumerate(p):
            out[pi] = i
        return tuple(out)

    return build_group(name or f"perm({degree})", labels, compose,
                       tuple(range(degree)), gen_names=gen_names,
                       label_inverse=invert, cap=cap)


def perm_from_cycles(degree: int, cycles: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Image tuple of a product of disjoint cycles on 1-based points."""
    images = list(range(degree))
    for cyc in cycles:
        pts = [c - 1 for c in cyc]
        if any(p < 0 or p >= degree for p in pts) or len(set(pts)) != len(pts):
            raise InputError(f"bad cycle {list(cyc)} for degree {degree}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return tuple(images)


class Subgroup:
    """A subgroup of a parent group, held as a sorted tuple of member indices."""

    __slots__ = ("parent", "members", "_member_set", "_group", "_small_gens")

    def __init__(self, parent: Group, members: Iterable[int]):
        mt = tuple(sorted(set(int(m) for m in members)))
        if not mt or mt[0] != 0:
            raise InputError("a subgroup must contain the identity (index 0)")
        if mt[-1] >= parent.order:
            raise InputError("member index out of range")
        self.parent = parent
        self.members = mt
        self._member_set = frozenset(mt)
        self._group = None
        self._small_gens = None

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.members == self.members)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.name})"

    def contains_set(self, other: "Subgroup") -> bool:
        return self._member_set.issuperset(other.members)

    def small_generators(self) -> tuple[int, ...]:
        """A short generating list, chosen greedily over ascending indices."""
        if self._small_gens is None:
            gens: list[int] = []
            have = {0}
            for m in self.members:
                if m not in have:
                    gens.append(m)
                    have = set(generated_by(self.parent, gens).members)
                    if len(have) == self.order:
                        break
            self._small_gens = tuple(gens)
        return self._small_gens

    def describe(self) -> str:
        words = self.parent.words
        return "<" + (",".join(words[g] for g in self.small_generators()) or "1") + ">"

    def as_group(self) -> Group:
        """The subgroup as a Group of its own; labels are parent indices."""
        if self._group is None:
            par = self.parent
            lookup = {m: i for i, m in enumerate(self.members)}
            table = []
            for a in self.members:
                row = []
                for b in self.members:
                    p = par.mul(a, b)
                    idx = lookup.get(p)
                    if idx is None:
                        raise InputError(
                            f"not closed under multiplication: "
                            f"{par.words[a]} * {par.words[b]} escapes")
                    row.append(idx)
                table.append(row)
            gens = [lookup[g] for g in self.small_generators()]
            self._group = Group(f"{self.parent.name}|{self.describe()}",
                                self.members,
                                [par.words[m] for m in self.members],
                                gens, table=table)
        return self._group

    def to_parent(self, sub_index: int) -> int:
        return self.members[sub_index]

    def from_parent(self, parent_index: int) -> int:
        i = self.members
        lo, hi = 0, len(i)
        # members are sorted: binary search
        while lo < hi:
            mid = (lo + hi) // 2
            if i[mid] < parent_index:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(i) or i[lo] != parent_index:
            raise InputError("element is not in the subgroup")
        return lo


@dataclass(frozen=True)
class QuotientMap:
    """Surjection G -> G/N with an index-level projection and a section."""

    source: Group
    kernel: Subgroup
    target: Group
    projection: tuple[int, ...]
    section: tuple[int, ...]

    def project(self, x: int) -> int:
        return self.projection[x]


def generated_by(g: Group, seeds: Iterable[int]) -> Subgroup:
    """Subgroup generated by the given element indices."""
    seed_list = [s for s in dict.fromkeys(int(s) for s in seeds)]
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for s in seed_list:
                y = g.mul(x, s)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(g, members)


def centralizer(g: Group, x: int) -> Subgroup:
    return Subgroup(g, (y for y in range(g.order) if g.mul(y, x) == g.mul(x, y)))


def commutator_subgroup(h: Subgroup, k: Subgroup) -> Subgroup:
    """Subgroup generated by all commutators [a,b] = a^-1 b^-1 a b, a in H, b in K."""
    if h.parent is not k.parent:
        raise InputError("subgroups live in different parent groups")
    g = h.parent
    comms = set()
    for a in h.members:
        ia = g.inv(a)
        for b in k.members:
            comms.add(g.mul(g.mul(ia, g.inv(b)), g.mul(a, b)))
    return generated_by(g, sorted(comms))


def is_normal(g: Group, h: Subgroup) -> bool:
    if h.parent is not g:
        raise InputError("subgroup of a different group")
    for gen in dict.fromkeys(g.generators):
        gi = g.inv(gen)
        for m in h.members:
            if g.mul(g.mul(gi, m), gen) not in h:
                return False
    return True


def coset(x: int, n: Subgroup) -> tuple[int, ...]:
    """The left coset x·N as a sorted tuple of element indices."""
    g = n.parent
    return tuple(sorted(g.mul(x, m) for m in n.members))


def quotient(g: Group, n: Subgroup) -> QuotientMap:
    """Quotient by a normal subgroup; raises InputError naming a witness if not normal."""
    if n.parent is not g:
        raise InputError("subgroup of a different group")
    for gen in dict.fromkeys(g.generators):
        gi = g.inv(gen)
        for m in n.members:
            c = g.mul(g.mul(gi, m), gen)
            if c not in n:
                raise InputError(
                    f"subgroup is not normal in {g.name}: conjugating "
                    f"{g.words[m]} by {g.words[gen]} gives {g.words[c]}, "
                    "which is outside the subgroup")

    cid_of = [-1] * g.order
    coset_members: list[tuple[int, ...]] = []
    for x in range(g.order):
        if cid_of[x] >= 0:
            continue
        mem = tuple(sorted(g.mul(x, m) for m in n.members))
        cid = len(coset_members)
        coset_members.append(mem)
        for y in mem:
            cid_of[y] = cid

    def comp(c1, c2):
        return coset_members[cid_of[g.mul(c1[0], c2[0])]]

    def invert(c):
        return coset_members[cid_of[g.inv(c[0])]]

    gen_indices = list(dict.fromkeys(g.generators))
    target = build_group(
        f"{g.name}/{n.describe()}",
        [coset_members[cid_of[gen]] for gen in gen_indices],
        comp, coset_members[cid_of[0]],
        gen_names=[g.words[gen] for gen in gen_indices],
        label_inverse=invert, cap=g.order + 1)

    if target.order * n.order != g.order:
        raise ConsistencyError("coset count does not match the index")
    if target.elements[0] != n.members:
        raise ConsistencyError("identity coset differs from the kernel")

    target_of_cid = {cid: target.index_of(mem) for cid, mem in enumerate(coset_members)}
    projection = tuple(target_of_cid[cid_of[x]] for x in range(g.order))
    section = tuple(lab[0] for lab in target.elements)
    return QuotientMap(g, n, target, projection, section)


def nilpotency_class(g: Group) -> int:
    """Length of the lower central series; raises NotNilpotent if it stabilises."""
    whole = g.full_subgroup()
    cur = whole
    c = 0
    while cur.order > 1:
        nxt = commutator_subgroup(cur, whole)
        if nxt.members == cur.members:
            raise NotNilpotent(
                f"{g.name} is not nilpotent: the lower central series "
                f"stabilises at order {cur.order}")
        cur = nxt
        c += 1
    return c
