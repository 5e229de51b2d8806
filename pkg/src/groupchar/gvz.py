"""Structure analysis for groups whose irreducible characters vanish off
their centres.

A non-Abelian group is a *GVZ-group* when every irreducible character
vanishes outside its own centre Z(chi) = {g : |chi(g)| = chi(1)};
equivalently chi(1)^2 = |G : Z(chi)| for every chi.  A pair (G, N) with N
normal is a *generalised Camina pair* (GCP) when every nonlinear
irreducible vanishes outside N; equivalently the class of every g outside
N is the full coset g*G'.  Both formulations are always computed and
cross-checked; they can only disagree if this package is wrong, never
because of the input.

The ``verify_*`` functions check the counting identities, bijections and
coset criteria that hold in the two-character-degree GVZ setting, entirely
by exact computation, and return structured reports.  Reports carry a
claim token (``thm1.1``, ``thm1.2``, ``lemmas``, ``prop2.11``,
``centres``) naming the claim catalogue entry they verify; the catalogue
is documented in the README.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .chartable import (Character, CharacterTable, char_center, deflate,
                        degree_set, decompose, induce, inner_product, kernel,
                        lift, restrict, value_key)
from .constructions import predicted_centres
from .errors import (ConsistencyError, HypothesisNotMet, InputError,
                     TheoremViolation)
from .groups import (QuotientMap, Subgroup, commutator_subgroup, coset,
                     is_normal, nilpotency_class, quotient)


def _j(value):
    """Coerce a value into something JSON-serialisable for reports."""
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else int(value)
    if isinstance(value, tuple):
        return [_j(v) for v in value]
    return value


@dataclass
class CheckRecord:
    label: str
    status: str  # "pass" | "fail" | "skip"
    lhs: object = None
    rhs: object = None
    witness: object = None

    def to_dict(self) -> dict:
        return {"label": self.label, "status": self.status,
                "lhs": _j(self.lhs), "rhs": _j(self.rhs),
                "witness": _j(self.witness)}


@dataclass
class TheoremReport:
    claim: str
    group: str
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def add(self, label, status, lhs=None, rhs=None, witness=None) -> None:
        self.checks.append(CheckRecord(label, status, lhs, rhs, witness))

    def to_dict(self) -> dict:
        return {"claim": self.claim, "group": self.group,
                "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}


# ---------------------------------------------------------------------------
# shared computation context (memoises subgroups, quotients and their tables)

class _Ctx:
    def __init__(self, table: CharacterTable):
        self.table = table
        self.g = table.group
        self._canonical: dict[tuple, Subgroup] = {}
        self._centres: dict[int, Subgroup] = {}
        self._kernels: dict[int, Subgroup] = {}
        self._commutators: dict[tuple, tuple] = {}
        self._quotients: dict[tuple, QuotientMap] = {}
        self._quotient_tables: dict[tuple, CharacterTable] = {}
        self._subgroup_tables: dict[tuple, CharacterTable] = {}
        self._lifted_keys: dict[tuple, tuple] = {}

    def canonical(self, members: Iterable[int]) -> Subgroup:
        key = tuple(sorted(members))
        if key not in self._canonical:
            self._canonical[key] = Subgroup(self.g, key)
        return self._canonical[key]

    def centre(self, pos: int) -> Subgroup:
        if pos not in self._centres:
            self._centres[pos] = self.canonical(
                char_center(self.table.irreducibles[pos]).members)
        return self._centres[pos]

    def kernel_of(self, pos: int) -> Subgroup:
        if pos not in self._kernels:
            self._kernels[pos] = self.canonical(
                kernel(self.table.irreducibles[pos]).members)
        return self._kernels[pos]

    def derived(self) -> Subgroup:
        return self.canonical(self.g.derived_subgroup().members)

    def commutator_with_group(self, sub: Subgroup) -> Subgroup:
        if sub.members not in self._commutators:
            m = commutator_subgroup(sub, self.g.full_subgroup())
            self._commutators[sub.members] = m.members
        return self.canonical(self._commutators[sub.members])

    def quotient_by(self, sub: Subgroup) -> QuotientMap:
        if sub.members not in self._quotients:
            self._quotients[sub.members] = quotient(self.g, sub)
        return self._quotients[sub.members]

    def quotient_table(self, qm: QuotientMap) -> CharacterTable:
        key = qm.kernel.members
        if key not in self._quotient_tables:
            from .chartable import character_table
            self._quotient_tables[key] = character_table(qm.target)
        return self._quotient_tables[key]

    def subgroup_table(self, sub: Subgroup) -> CharacterTable:
        if sub.members not in self._subgroup_tables:
            from .chartable import character_table
            self._subgroup_tables[sub.members] = character_table(sub.as_group())
        return self._subgroup_tables[sub.members]

    def lifted_irreducible_keys(self, qm: QuotientMap) -> tuple:
        """Value keys (at the source conductor) of all lifted Irr(G/N)."""
        key = qm.kernel.members
        if key not in self._lifted_keys:
            e = self.g.exponent
            qt = self.quotient_table(qm)
            self._lifted_keys[key] = tuple(
                value_key(lift(ch, qm), e) for ch in qt.irreducibles)
        return self._lifted_keys[key]

    # -- frequently needed flags ------------------------------------------

    def nonlinear_positions(self) -> list[int]:
        return [i for i, ch in enumerate(self.table.irreducibles) if ch.degree > 1]

    def vanishes_off_centre(self, pos: int) -> tuple[bool, int | None]:
        """Whether chi is zero on every class outside Z(chi); witness class."""
        chi = self.table.irreducibles[pos]
        centre = self.centre(pos)
        for c, rep in enumerate(self.table.classes.reps):
            if rep not in centre and not chi.values[c].is_zero():
                return False, c
        return True, None

    def gvz_flags(self, pos: int) -> tuple[bool, bool, int | None]:
        """(degree criterion, vanishing criterion, witness class); must agree."""
        chi = self.table.irreducibles[pos]
        centre = self.centre(pos)
        by_degree = chi.degree ** 2 * centre.order == self.g.order
        vanishes, witness = self.vanishes_off_centre(pos)
        if by_degree != vanishes:
            raise ConsistencyError(
                "degree-square and vanishing criteria disagree; "
                "this is a bug, the two are provably equivalent")
        return by_degree, vanishes, witness

    def is_gvz_bool(self) -> tuple[bool, int | None, int | None]:
        for pos in self.nonlinear_positions():
            _, vanishes, witness = self.gvz_flags(pos)
            if not vanishes:
                return False, pos, witness
        return True, None, None

    def two_degree_gvz(self) -> tuple[bool, str]:
        if self.g.is_abelian():
            return False, "the group is abelian"
        ds = degree_set(self.table)
        if len(ds) != 2:
            return False, f"the degree set {list(ds)} does not have exactly two members"
        ok, pos, _ = self.is_gvz_bool()
        if not ok:
            return False, (f"irreducible #{pos} does not vanish off its centre")
        return True, ""


# ---------------------------------------------------------------------------
# predicates

@dataclass(frozen=True)
class GvzCharRecord:
    position: int
    degree: int
    centre_order: int
    degree_matches_index: bool
    vanishes_off_centre: bool


@dataclass(frozen=True)
class GvzReport:
    group: str
    order: int
    degrees: tuple[int, ...]
    holds: bool
    records: tuple[GvzCharRecord, ...]
    witness: dict | None

    def to_dict(self) -> dict:
        return {
            "group": self.group, "order": self.order,
            "degrees": list(self.degrees), "holds": self.holds,
            "characters": [{
                "position": r.position, "degree": r.degree,
                "centre_order": r.centre_order,
                "degree_squared_equals_index": r.degree_matches_index,
                "vanishes_off_centre": r.vanishes_off_centre,
            } for r in self.records],
            "witness": _j(self.witness),
        }


def is_gvz(table: CharacterTable, *, _ctx: _Ctx | None = None) -> GvzReport:
    """Does every irreducible character vanish outside its own centre?

    Raises HypothesisNotMet for Abelian groups, where the question is void.
    """
    ctx = _ctx or _Ctx(table)
    if ctx.g.is_abelian():
        raise HypothesisNotMet(
            f"{ctx.g.name} is abelian; the vanishing property is about "
            "non-abelian groups")
    records = []
    witness = None
    holds = True
    for pos, chi in enumerate(table.irreducibles):
        by_degree, vanishes, wclass = ctx.gvz_flags(pos)
        centre = ctx.centre(pos)
        records.append(GvzCharRecord(pos, chi.degree, centre.order,
                                     by_degree, vanishes))
        if not vanishes and witness is None:
            holds = False
            rep = table.classes.reps[wclass]
            witness = {
                "character": pos, "degree": chi.degree,
                "degree_squared": chi.degree ** 2,
                "centre_index": ctx.g.order // centre.order,
                "class": wclass, "class_rep": ctx.g.words[rep],
                "value": chi.values[wclass].render(),
            }
    return GvzReport(ctx.g.name, ctx.g.order, degree_set(table), holds,
                     tuple(records), witness)


@dataclass(frozen=True)
class GcpResult:
    holds: bool
    normal_order: int
    witness: dict | None

    def to_dict(self) -> dict:
        return {"holds": self.holds, "normal_order": self.normal_order,
                "witness": _j(self.witness)}


def is_gcp(table: CharacterTable, n: Subgroup, *, _ctx: _Ctx | None = None) -> GcpResult:
    """Is (G, N) a pair where all nonlinear irreducibles vanish outside N?

    Both the character formulation and the class-coset formulation
    (Cl(g) = g*G' for g outside N) are evaluated; they must agree.
    """
    ctx = _ctx or _Ctx(table)
    g = ctx.g
    if n.parent is not g:
        raise InputError("the normal subgroup lives in a different group")
    if not is_normal(g, n):
        raise InputError(f"{n.describe()} is not normal in {g.name}")
    derived = ctx.derived()
    nl = [table.irreducibles[i] for i in ctx.nonlinear_positions()]
    witness = None
    holds = True
    for c, rep in enumerate(table.classes.reps):
        if rep in n:
            continue
        vanishing = all(ch.values[c].is_zero() for ch in nl)
        class_is_coset = table.classes.members[c] == coset(rep, derived)
        if vanishing != class_is_coset:
            raise ConsistencyError(
                "character and class-coset formulations of the Camina "
                "condition disagree; this is a bug")
        if not vanishing and witness is None:
            holds = False
            bad = next(ch for ch in nl if not ch.values[c].is_zero())
            witness = {
                "element": g.words[rep], "class_size": len(table.classes.members[c]),
                "coset_size": derived.order,
                "nonvanishing_degree": bad.degree,
                "value": bad.values[c].render(),
            }
    return GcpResult(holds, n.order, witness)


# ---------------------------------------------------------------------------
# fibres over centres

@dataclass(frozen=True)
class FiberCount:
    count: int
    formula: Fraction | None
    hypothesis_met: bool
    passed: bool | None


def fiber_count(table: CharacterTable, chi: Character, *,
                _ctx: _Ctx | None = None) -> FiberCount:
    """Number of nonlinear irreducibles sharing chi's centre, checked against
    |Z| * (1/|[Z,G]| - 1/|G'|) when the two-degree vanishing hypotheses hold."""
    ctx = _ctx or _Ctx(table)
    pos = _position_of(table, chi)
    if chi.degree == 1:
        raise InputError("fibres are counted over nonlinear characters")
    centre = ctx.centre(pos)
    count = sum(1 for i in ctx.nonlinear_positions()
                if ctx.centre(i).members == centre.members)
    met, _ = ctx.two_degree_gvz()
    if not met:
        return FiberCount(count, None, False, None)
    m = ctx.commutator_with_group(centre)
    derived = ctx.derived()
    if m.members == derived.members:
        raise TheoremViolation(
            "[Z(chi), G] equals the derived subgroup for a nonlinear "
            "character; that forces a zero fibre and contradicts the "
            "linearity criterion", evidence={"character": pos})
    formula = Fraction(centre.order, m.order) - Fraction(centre.order, derived.order)
    return FiberCount(count, formula, True,
                      formula.denominator == 1 and int(formula) == count)


def _position_of(table: CharacterTable, chi: Character) -> int:
    for i, ch in enumerate(table.irreducibles):
        if ch is chi:
            return i
    raise InputError("character is not a row of the given table")


@dataclass(frozen=True)
class IrrStar:
    centre: Subgroup
    commutator: Subgroup
    centre_table: CharacterTable
    lambdas: tuple[Character, ...]
    derived_in_centre: bool


def irr_star(table: CharacterTable, chi: Character, *,
             _ctx: _Ctx | None = None) -> IrrStar:
    """Characters of Z(chi) that kill [Z(chi),G] but not all of G'."""
    ctx = _ctx or _Ctx(table)
    met, why = ctx.two_degree_gvz()
    if not met:
        raise HypothesisNotMet(why)
    pos = _position_of(table, chi)
    if chi.degree == 1:
        raise InputError("the star set is defined over nonlinear characters")
    centre = ctx.centre(pos)
    m = ctx.commutator_with_group(centre)
    derived = ctx.derived()
    ctable = ctx.subgroup_table(centre)
    m_set = set(m.members)
    d_set = set(derived.members)
    lambdas = []
    for lam in ctable.irreducibles:
        ker_parent = {centre.to_parent(s) for s in kernel(lam).members}
        if m_set <= ker_parent and not d_set <= ker_parent:
            lambdas.append(lam)
    return IrrStar(centre, m, ctable, tuple(lambdas),
                   centre.contains_set(derived))


@dataclass(frozen=True)
class Constituent:
    theta: Character
    theta_position: int
    multiplicity: int
    checks: tuple[tuple[str, bool], ...]

    @property
    def formula_holds(self) -> bool:
        return all(ok for _, ok in self.checks)


def unique_nonlinear_constituent(table: CharacterTable, lam: Character,
                                 centre: Subgroup, *,
                                 _ctx: _Ctx | None = None) -> Constituent:
    """The single nonlinear constituent of lam^G, with its value-formula checks.

    Raises TheoremViolation (with the full decomposition attached) if the
    induced character does not have exactly one nonlinear constituent.
    """
    ctx = _ctx or _Ctx(table)
    g = ctx.g
    ind = induce(lam, centre, g)
    mults = decompose(ind, table)
    nonlin = [(i, m) for i, m in enumerate(mults)
              if m > 0 and table.irreducibles[i].degree > 1]
    if len(nonlin) != 1:
        raise TheoremViolation(
            f"induction from the centre has {len(nonlin)} nonlinear "
            "constituents instead of exactly one",
            evidence={"multiplicities": list(mults)})
    theta_pos, mult = nonlin[0]
    theta = table.irreducibles[theta_pos]

    index = g.order // centre.order
    root = math.isqrt(index)
    checks = [("the index of the centre is a perfect square", root * root == index)]

    e = g.exponent
    centre_set = set(centre.members)
    class_of = table.classes.class_of
    h_class_of = centre.as_group().conjugacy_classes().class_of
    vanishes = True
    value_formula = True
    for c, rep in enumerate(table.classes.reps):
        if rep not in centre_set:
            if not theta.values[c].is_zero():
                vanishes = False
        else:
            lam_val = lam.values[h_class_of[centre.from_parent(rep)]].embed(e)
            if theta.values[c] * lam.degree != root * lam_val:
                value_formula = False
    checks.append(("theta vanishes outside the centre", vanishes))
    checks.append(("theta agrees with sqrt(index)/lambda(1) * lambda on the centre",
                   value_formula))
    checks.append(("the multiplicity equals sqrt(index)/lambda(1)",
                   mult * lam.degree == root))
    checks.append(("theta's centre is the inducing centre",
                   ctx.centre(theta_pos).members == centre.members))
    return Constituent(theta, theta_pos, mult, tuple(checks))


# ---------------------------------------------------------------------------
# claim verifiers

def verify_fiber_theorem(table: CharacterTable, *,
                         _ctx: _Ctx | None = None) -> TheoremReport:
    """Claim ``thm1.1``: per-centre fibre counts, induced constituents and the
    bijections with the nonlinear characters of G/[Z(chi),G]."""
    ctx = _ctx or _Ctx(table)
    met, why = ctx.two_degree_gvz()
    if not met:
        raise HypothesisNotMet(why)
    report = TheoremReport("thm1.1", ctx.g.name)
    e = ctx.g.exponent

    nl = ctx.nonlinear_positions()
    fibres: dict[tuple, list[int]] = {}
    for pos in nl:
        fibres.setdefault(ctx.centre(pos).members, []).append(pos)

    total = 0
    for centre_key in sorted(fibres):
        fibre = fibres[centre_key]
        total += len(fibre)
        centre = ctx.canonical(centre_key)
        tag = f"centre {centre.describe()} (order {centre.order})"
        chi = table.irreducibles[fibre[0]]

        report.add(f"{tag}: derived subgroup lies inside the centre",
                   "pass" if centre.contains_set(ctx.derived()) else "fail",
                   lhs=centre.contains_set(ctx.derived()))

        try:
            fc = fiber_count(table, chi, _ctx=ctx)
            report.add(f"{tag}: fibre count matches |Z|(1/|[Z,G]| - 1/|G'|)",
                       "pass" if fc.passed else "fail",
                       lhs=fc.count, rhs=fc.formula)
        except TheoremViolation as exc:
            report.add(f"{tag}: fibre count matches |Z|(1/|[Z,G]| - 1/|G'|)",
                       "fail", witness={"reason": str(exc),
                                        "evidence": _j(exc.evidence)})

        star = irr_star(table, chi, _ctx=ctx)
        constituents = []
        failures = []
        for li, lam in enumerate(star.lambdas):
            try:
                con = unique_nonlinear_constituent(table, lam, centre, _ctx=ctx)
            except TheoremViolation as exc:
                failures.append({"lambda": li, "reason": str(exc),
                                 "evidence": _j(exc.evidence)})
                continue
            if not con.formula_holds:
                failures.append({"lambda": li,
                                 "failed": [lbl for lbl, ok in con.checks if not ok]})
            constituents.append(con)
        report.add(f"{tag}: each induced character has one nonlinear "
                   "constituent obeying the value formula",
                   "pass" if not failures else "fail",
                   lhs=len(star.lambdas), witness=failures or None)

        qm = ctx.quotient_by(star.commutator)
        qtable = ctx.quotient_table(qm)
        q_nl_keys = {value_key(ch, e) for ch in qtable.irreducibles if ch.degree > 1}
        report.add(f"{tag}: star set size equals the quotient's nonlinear count",
                   "pass" if len(star.lambdas) == len(q_nl_keys) else "fail",
                   lhs=len(star.lambdas), rhs=len(q_nl_keys))

        theta_keys = [value_key(c.theta, e) for c in constituents]
        report.add(f"{tag}: distinct inducing characters give distinct constituents",
                   "pass" if len(set(theta_keys)) == len(theta_keys) else "fail",
                   lhs=len(set(theta_keys)), rhs=len(theta_keys))

        deflated_keys = set()
        deflation_ok = True
        for con in constituents:
            down = deflate(con.theta, qm)
            if down is None:
                deflation_ok = False
                break
            deflated_keys.add(value_key(down, e))
        report.add(f"{tag}: constituents deflate onto the quotient's nonlinear "
                   "characters exactly",
                   "pass" if deflation_ok and deflated_keys == q_nl_keys else "fail",
                   lhs=len(deflated_keys), rhs=len(q_nl_keys))

        fibre_keys = {value_key(table.irreducibles[p], e) for p in fibre}
        report.add(f"{tag}: constituent set equals the fibre over this centre",
                   "pass" if set(theta_keys) == fibre_keys else "fail",
                   lhs=len(set(theta_keys)), rhs=len(fibre_keys))

    report.add("fibres partition the nonlinear characters",
               "pass" if total == len(nl) else "fail",
               lhs=total, rhs=len(nl))
    return report


def verify_coset_criterion(table: CharacterTable, *,
                           _ctx: _Ctx | None = None) -> TheoremReport:
    """Claim ``thm1.2``: with two degrees, the group is GVZ exactly when
    x[Z(chi),G] = Cl(x) for every chi and every admissible x."""
    ctx = _ctx or _Ctx(table)
    if len(degree_set(table)) != 2:
        raise HypothesisNotMet(
            f"the degree set {list(degree_set(table))} does not have exactly "
            "two members")
    report = TheoremReport("thm1.2", ctx.g.name)
    g = ctx.g
    classes = table.classes

    gvz_holds, bad_pos, bad_class = ctx.is_gvz_bool()
    report.add("evaluated: every nonlinear character vanishes off its centre",
               "pass", lhs=gvz_holds,
               witness=None if gvz_holds else {
                   "character": bad_pos, "class": bad_class})

    nl = ctx.nonlinear_positions()
    nl_centres = [ctx.centre(p) for p in nl]
    condition = True
    witness = None
    seen: dict[tuple, tuple[bool, dict | None]] = {}
    for pos in range(len(table.irreducibles)):
        centre = ctx.centre(pos)
        key = centre.members
        if key not in seen:
            m = ctx.commutator_with_group(centre)
            others = set()
            for other in nl_centres:
                if other.members != key:
                    others.update(other.members)
            holds_here = True
            wit = None
            for x in centre.members:
                if x in others:
                    continue
                cls = classes.members[classes.class_of[x]]
                cos = coset(x, m)
                if cls != cos:
                    holds_here = False
                    wit = {"element": g.words[x],
                           "coset_size": len(cos), "class_size": len(cls)}
                    break
            seen[key] = (holds_here, wit)
        holds_here, wit = seen[key]
        if not holds_here and witness is None:
            condition = False
            witness = dict(wit, character=pos)
    report.add("evaluated: x[Z(chi),G] equals the class of x for every "
               "admissible pair", "pass", lhs=condition, witness=witness)
    report.add("vanishing off centres holds exactly when the coset condition does",
               "pass" if gvz_holds == condition else "fail",
               lhs=gvz_holds, rhs=condition)
    return report


def _curated_normals(ctx: _Ctx) -> list[Subgroup]:
    keys = {(0,), tuple(range(ctx.g.order))}
    keys.add(ctx.derived().members)
    keys.add(ctx.canonical(ctx.g.center().members).members)
    for pos in range(len(ctx.table.irreducibles)):
        keys.add(ctx.kernel_of(pos).members)
        keys.add(ctx.commutator_with_group(ctx.centre(pos)).members)
    return [ctx.canonical(k) for k in sorted(keys)]


def verify_identity_suite(table: CharacterTable, *,
                          _ctx: _Ctx | None = None) -> TheoremReport:
    """Claim ``lemmas``: the supporting biconditionals and counting identities,
    each tested exhaustively over the irreducible characters."""
    ctx = _ctx or _Ctx(table)
    report = TheoremReport("lemmas", ctx.g.name)
    g = ctx.g
    e = g.exponent
    k = len(table.irreducibles)
    derived = ctx.derived()
    centre_of_g = ctx.canonical(g.center().members)

    # linearity <-> [Z(chi),G] = G'
    bad = [pos for pos in range(k)
           if (table.irreducibles[pos].degree == 1)
           != (ctx.commutator_with_group(ctx.centre(pos)).members == derived.members)]
    report.add("a character is linear exactly when [Z(chi),G] is the whole "
               "derived subgroup", "pass" if not bad else "fail",
               lhs=len(bad), witness=bad or None)

    # Z(G/[Z(chi),G]) = Z(chi)/[Z(chi),G]
    bad = []
    for pos in range(k):
        centre = ctx.centre(pos)
        qm = ctx.quotient_by(ctx.commutator_with_group(centre))
        projected = sorted({qm.projection[x] for x in centre.members})
        if tuple(projected) != qm.target.center().members:
            bad.append(pos)
    report.add("the centre of G/[Z(chi),G] is the image of Z(chi)",
               "pass" if not bad else "fail", lhs=len(bad), witness=bad or None)

    # restriction norm: [chi_H, chi_H] = [G:H] [chi,chi] iff vanishing off H
    bad = []
    for pos in range(k):
        chi = table.irreducibles[pos]
        centre = ctx.centre(pos)
        lhs = inner_product(restrict(chi, centre), restrict(chi, centre))
        rhs = Fraction(g.order, centre.order) * inner_product(chi, chi)
        vanishes, _ = ctx.vanishes_off_centre(pos)
        if lhs > rhs or (lhs == rhs) != vanishes:
            bad.append(pos)
    report.add("the restricted norm meets [G:H][chi,chi] exactly for "
               "characters vanishing off H (H = Z(chi))",
               "pass" if not bad else "fail", lhs=len(bad), witness=bad or None)

    # degree bound chi(1)^2 <= |G:Z(chi)| with equality iff vanishing
    bad = []
    for pos in range(k):
        chi = table.irreducibles[pos]
        index = g.order // ctx.centre(pos).order
        vanishes, _ = ctx.vanishes_off_centre(pos)
        if chi.degree ** 2 > index or (chi.degree ** 2 == index) != vanishes:
            bad.append(pos)
    report.add("chi(1)^2 is bounded by |G:Z(chi)| with equality exactly at "
               "vanishing off the centre", "pass" if not bad else "fail",
               lhs=len(bad), witness=bad or None)

    # abelian central quotient forces the extreme degree
    bad = [pos for pos in range(k)
           if ctx.centre(pos).contains_set(derived)
           and table.irreducibles[pos].degree ** 2
           * ctx.centre(pos).order != g.order]
    report.add("when G/Z(chi) is abelian, chi(1)^2 equals |G:Z(chi)|",
               "pass" if not bad else "fail", lhs=len(bad), witness=bad or None)

    # Z(chi)/ker chi = Z(G/ker chi)
    bad = []
    for pos in range(k):
        qm = ctx.quotient_by(ctx.kernel_of(pos))
        projected = sorted({qm.projection[x] for x in ctx.centre(pos).members})
        if tuple(projected) != qm.target.center().members:
            bad.append(pos)
    report.add("the centre of chi maps onto the centre of G/ker(chi)",
               "pass" if not bad else "fail", lhs=len(bad), witness=bad or None)

    # \{chi with N <= ker chi\} is exactly the lifted Irr(G/N), over a
    # curated family of normal subgroups
    bad_n = []
    for n in _curated_normals(ctx):
        over = {value_key(table.irreducibles[pos], e) for pos in range(k)
                if ctx.kernel_of(pos).contains_set(n)}
        lifted = set(ctx.lifted_irreducible_keys(ctx.quotient_by(n)))
        if over != lifted:
            bad_n.append(n.describe())
    report.add("the characters with N inside the kernel are exactly the "
               "lifts from G/N", "pass" if not bad_n else "fail",
               lhs=len(bad_n), witness=bad_n or None)

    # [Z(chi),G] <= ker chi
    bad = [pos for pos in range(k)
           if not ctx.kernel_of(pos).contains_set(
               ctx.commutator_with_group(ctx.centre(pos)))]
    report.add("[Z(chi),G] lies inside the kernel of chi",
               "pass" if not bad else "fail", lhs=len(bad), witness=bad or None)

    # Z(chi) <= Z(phi) iff phi factors through G/[Z(chi),G]
    nl = ctx.nonlinear_positions()
    bad_pairs = []
    seen_centres = set()
    for pos in nl:
        centre = ctx.centre(pos)
        if centre.members in seen_centres:
            continue
        seen_centres.add(centre.members)
        qm = ctx.quotient_by(ctx.commutator_with_group(centre))
        lifted = set(ctx.lifted_irreducible_keys(qm))
        for other in range(k):
            contained = ctx.centre(other).contains_set(centre)
            factors = value_key(table.irreducibles[other], e) in lifted
            if contained != factors:
                bad_pairs.append((pos, other))
    report.add("Z(chi) is contained in Z(phi) exactly when phi factors "
               "through G/[Z(chi),G]", "pass" if not bad_pairs else "fail",
               lhs=len(bad_pairs), witness=bad_pairs[:5] or None)

    met, why = ctx.two_degree_gvz()

    # equal centres <-> nonlinear on the quotient by [Z(chi),G]
    if met:
        bad_pairs = []
        for pos in nl:
            centre = ctx.centre(pos)
            qm = ctx.quotient_by(ctx.commutator_with_group(centre))
            lifted = set(ctx.lifted_irreducible_keys(qm))
            for other in nl:
                same_centre = ctx.centre(other).members == centre.members
                in_quotient_nl = value_key(table.irreducibles[other], e) in lifted
                if same_centre != in_quotient_nl:
                    bad_pairs.append((pos, other))
        report.add("two nonlinear characters share a centre exactly when one "
                   "lives on the other's quotient",
                   "pass" if not bad_pairs else "fail",
                   lhs=len(bad_pairs), witness=bad_pairs[:5] or None)
    else:
        report.add("two nonlinear characters share a centre exactly when one "
                   "lives on the other's quotient", "skip", witness=why)

    # nonlinear count = |Z(chi)| - |Z(chi)|/|G'| for every nonlinear chi,
    # and the degree set is {1, sqrt(|G:Z(chi)|)}
    if met:
        bad = []
        ds = degree_set(table)
        for pos in nl:
            centre = ctx.centre(pos)
            expected = centre.order - Fraction(centre.order, derived.order)
            root = math.isqrt(g.order // centre.order)
            if len(nl) != expected or ds != (1, root):
                bad.append((pos, f"count {len(nl)} vs {expected}, "
                                 f"degrees {list(ds)} vs [1, {root}]"))
        report.add("the nonlinear count is |Z(chi)| - |Z(chi)|/|G'| and the "
                   "degrees are {1, sqrt(|G:Z(chi)|)}",
                   "pass" if not bad else "fail", lhs=len(bad),
                   witness=bad[:5] or None)
    else:
        report.add("the nonlinear count is |Z(chi)| - |Z(chi)|/|G'| and the "
                   "degrees are {1, sqrt(|G:Z(chi)|)}", "skip", witness=why)

    # with all centres equal: they equal Z(G) and count from the group centre
    if met:
        if len({ctx.centre(p).members for p in nl}) == 1:
            common = ctx.centre(nl[0])
            expected = centre_of_g.order - Fraction(centre_of_g.order,
                                                    derived.order)
            ok = (common.members == centre_of_g.members
                  and len(nl) == expected)
            report.add("with all nonlinear centres equal, they are Z(G) and "
                       "the nonlinear count is |Z(G)| - |Z(G)|/|G'|",
                       "pass" if ok else "fail",
                       lhs=len(nl), rhs=expected)
        else:
            report.add("with all nonlinear centres equal, they are Z(G) and "
                       "the nonlinear count is |Z(G)| - |Z(G)|/|G'|", "skip",
                       witness="the nonlinear centres are not all equal")
    else:
        report.add("with all nonlinear centres equal, they are Z(G) and the "
                   "nonlinear count is |Z(G)| - |Z(G)|/|G'|", "skip",
                   witness=why)

    # Camina-type pair with the centre: degrees and nonlinear count
    gcp = is_gcp(table, centre_of_g, _ctx=ctx)
    if gcp.holds:
        index = g.order // centre_of_g.order
        root = math.isqrt(index)
        ds = degree_set(table)
        expected_ds = tuple(sorted({1, root}))
        expected_nl = centre_of_g.order - Fraction(centre_of_g.order,
                                                   derived.order)
        ok = (root * root == index and ds == expected_ds
              and len(nl) == expected_nl)
        report.add("for a Camina-type pair with the centre, the degrees are "
                   "{1, sqrt(|G:Z|)} and the nonlinear count is "
                   "|Z(G)| - |Z(G)|/|G'|", "pass" if ok else "fail",
                   lhs={"degrees": list(ds), "nonlinear": len(nl)},
                   rhs={"degrees": list(expected_ds),
                        "nonlinear": _j(expected_nl)})
    else:
        report.add("for a Camina-type pair with the centre, the degrees are "
                   "{1, sqrt(|G:Z|)} and the nonlinear count is "
                   "|Z(G)| - |Z(G)|/|G'|", "skip",
                   witness="(G, Z(G)) is not such a pair")
    return report


def verify_p4_criterion(table: CharacterTable, *,
                        _ctx: _Ctx | None = None) -> TheoremReport:
    """Claim ``prop2.11``: for non-abelian groups of order p^4, (G, Z(G)) is a
    Camina-type pair exactly when the nilpotency class is two."""
    ctx = _ctx or _Ctx(table)
    g = ctx.g
    order = g.order
    p = 2
    while p * p <= order and order % p:
        p += 1
    if order % p:
        p = order
    if order != p ** 4:
        raise HypothesisNotMet(f"|{g.name}| = {order} is not the fourth power "
                               "of a prime")
    if g.is_abelian():
        raise HypothesisNotMet(f"{g.name} is abelian")
    report = TheoremReport("prop2.11", g.name)
    gcp = is_gcp(table, ctx.canonical(g.center().members), _ctx=ctx)
    cls = nilpotency_class(g)
    report.add("nilpotency class", "pass", lhs=cls)
    report.add("(G, Z(G)) is a Camina-type pair", "pass", lhs=gcp.holds,
               witness=gcp.witness)
    report.add("the pair condition holds exactly at class two",
               "pass" if gcp.holds == (cls == 2) else "fail",
               lhs=gcp.holds, rhs=cls == 2)
    return report


# ---------------------------------------------------------------------------
# centre census

@dataclass(frozen=True)
class CensusEntry:
    members: tuple[int, ...]
    order: int
    generators: tuple[str, ...]
    count: int
    listed: bool | None


@dataclass(frozen=True)
class CensusReport:
    claim: str
    group: str
    entries: tuple[CensusEntry, ...]
    nonlinear_total: int
    predicted: tuple[tuple[int, ...], ...]
    all_predicted_present: bool | None
    unlisted_present: bool | None

    @property
    def passed(self) -> bool:
        total_ok = sum(e.count for e in self.entries) == self.nonlinear_total
        predicted_ok = self.all_predicted_present is not False
        return total_ok and predicted_ok

    def to_dict(self) -> dict:
        return {
            "claim": self.claim, "group": self.group, "passed": self.passed,
            "nonlinear_total": self.nonlinear_total,
            "centres": [{
                "order": e.order, "generators": list(e.generators),
                "count": e.count, "listed": e.listed,
            } for e in self.entries],
            "all_predicted_present": self.all_predicted_present,
            "unlisted_present": self.unlisted_present,
        }


def centre_census(table: CharacterTable, *,
                  _ctx: _Ctx | None = None) -> CensusReport:
    """Census of the centres Z(chi) over the nonlinear irreducibles.

    For the gn family the census is compared against the construction's
    predicted centre list; the report states explicitly whether centres
    outside that list occur.
    """
    ctx = _ctx or _Ctx(table)
    g = ctx.g
    if g.is_abelian():
        raise HypothesisNotMet(f"{g.name} is abelian; there are no nonlinear "
                               "characters to survey")
    counts: dict[tuple, int] = {}
    for pos in ctx.nonlinear_positions():
        key = ctx.centre(pos).members
        counts[key] = counts.get(key, 0) + 1
    predicted = tuple(predicted_centres(g))
    predicted_set = set(predicted)
    entries = []
    for key in sorted(counts):
        sub = ctx.canonical(key)
        entries.append(CensusEntry(
            key, sub.order, tuple(g.words[i] for i in sub.small_generators()),
            counts[key], (key in predicted_set) if predicted else None))
    if predicted:
        all_present = all(p in counts for p in predicted)
        unlisted = any(key not in predicted_set for key in counts)
    else:
        all_present = None
        unlisted = None
    return CensusReport("centres", g.name, tuple(entries),
                        len(ctx.nonlinear_positions()), predicted,
                        all_present, unlisted)


# ---------------------------------------------------------------------------
# one-shot driver

_CLAIMS = ("thm1.1", "thm1.2", "lemmas", "prop2.11", "centres")


def verify_claim(table: CharacterTable, claim: str, *,
                 _ctx: _Ctx | None = None):
    """Run one claim verifier; HypothesisNotMet propagates to the caller."""
    ctx = _ctx or _Ctx(table)
    if claim == "thm1.1":
        return verify_fiber_theorem(table, _ctx=ctx)
    if claim == "thm1.2":
        return verify_coset_criterion(table, _ctx=ctx)
    if claim == "lemmas":
        return verify_identity_suite(table, _ctx=ctx)
    if claim == "prop2.11":
        return verify_p4_criterion(table, _ctx=ctx)
    if claim == "centres":
        return centre_census(table, _ctx=ctx)
    raise InputError(f"unknown claim {claim!r}; expected one of "
                     f"{', '.join(_CLAIMS)} or all")


def verify_all(table: CharacterTable) -> list:
    """All claim verifiers; hypothesis failures become skipped sections."""
    ctx = _Ctx(table)
    out = []
    for claim in _CLAIMS:
        try:
            out.append(verify_claim(table, claim, _ctx=ctx))
        except HypothesisNotMet as exc:
            skipped = TheoremReport(claim, ctx.g.name)
            skipped.add("hypotheses", "skip", witness=str(exc))
            out.append(skipped)
    return out
