"""Numerical checks of the construction's Betti-number claims.

Every check builds a :class:`VerificationReport` listing (expected, actual)
pairs per field and degree; the verdict is "pass" iff no pair differs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .betti import BettiTable, betti_tables, lcm_lattice
from .borel import check_characteristic, is_p_borel_fixed
from .homology import FieldSpec, _char
from .ideals import (
    Monomial,
    MonomialIdeal,
    add_power,
    colon_power,
    degree,
    monomial_str,
    power,
    saturate_var,
)
from .stretch import ConstructionTrace, StretchSpec, regularity_bound, stretch_phi


class PreconditionError(ValueError):
    """The inputs do not satisfy the hypothesis of the checked claim."""


@dataclass(frozen=True)
class RegionSpec:
    """Regions A = {|a| <= r1} and B = {b_j < p^e_j - 1 for j < n-1}."""

    r1: int
    p: int
    e: tuple[int, ...]

    def __post_init__(self):
        check_characteristic(self.p)
        if self.p == 0:
            raise ValueError("region B needs a prime p")
        e = tuple(self.e)
        object.__setattr__(self, "e", e)
        if any(a >= b for a, b in zip(e, e[1:])):
            raise ValueError(f"e must be strictly increasing, got {e}")
        if any(self.p**x <= 1 for x in e):
            raise ValueError("every p^e_j must exceed 1")

    @classmethod
    def from_trace(cls, trace: ConstructionTrace) -> "RegionSpec":
        return cls(trace.r[0], trace.p, trace.e)

    @property
    def scales(self) -> tuple[int, ...]:
        return (1,) + tuple(self.p**x for x in self.e)


def in_region_A(a: Monomial, spec: RegionSpec) -> bool:
    return degree(a) <= spec.r1


def in_region_B(b: Monomial, spec: RegionSpec) -> bool:
    return all(b[j] < spec.p**x - 1 for j, x in enumerate(spec.e))


def psi_map(a: Monomial, spec: RegionSpec) -> Monomial:
    """(a_1, a_2 p^e_1, ..., a_n p^e_{n-1}): the stretches composed."""
    if len(a) != len(spec.e) + 1:
        raise ValueError(f"degree {a} does not match {len(spec.e)} exponents")
    if not in_region_A(a, spec):
        raise ValueError(f"{a} lies outside region A (|a| > {spec.r1})")
    return tuple(x * s for x, s in zip(a, spec.scales))


def psi_inverse(b: Monomial, spec: RegionSpec) -> Monomial | None:
    """Preimage of b under psi_map, or None if b is not in the image."""
    if len(b) != len(spec.e) + 1:
        raise ValueError(f"degree {b} does not match {len(spec.e)} exponents")
    a = []
    for x, s in zip(b, spec.scales):
        if x % s:
            return None
        a.append(x // s)
    a = tuple(a)
    return a if in_region_A(a, spec) else None


@dataclass(frozen=True)
class Comparison:
    characteristic: int
    label: str
    i: int
    degree: Monomial
    expected: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def __str__(self) -> str:
        field_ = "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"
        mark = "ok " if self.ok else "BAD"
        return (
            f"{mark} {field_:6} {self.label:10} i={self.i} b={monomial_str(self.degree)} "
            f"|b|={degree(self.degree)} expected={self.expected} actual={self.actual}"
        )


@dataclass
class VerificationReport:
    claim: str
    fields: tuple[int, ...]
    comparisons: list[Comparison] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def discrepancies(self) -> list[Comparison]:
        return [c for c in self.comparisons if not c.ok]

    @property
    def first_discrepancy(self) -> Comparison | None:
        return next((c for c in self.comparisons if not c.ok), None)

    @property
    def passed(self) -> bool:
        return self.first_discrepancy is None

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def add(self, p, label, i, b, expected, actual):
        self.comparisons.append(Comparison(p, label, i, tuple(b), expected, actual))

    def format(self, all_lines: bool = False) -> str:
        fields = ", ".join("QQ" if p == 0 else f"GF({p})" for p in self.fields)
        lines = [f"claim: {self.claim}", f"fields: {fields}"]
        lines += [f"note: {n}" for n in self.notes]
        shown = self.comparisons if all_lines else [
            c for c in self.comparisons if not c.ok or c.expected or c.actual
        ]
        lines += [str(c) for c in shown]
        lines.append(f"comparisons: {len(self.comparisons)}, discrepancies: {len(self.discrepancies)}")
        first = self.first_discrepancy
        if first is not None:
            lines.append(f"first discrepancy: {first}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def _chars(fields: Iterable[FieldSpec | int]) -> tuple[int, ...]:
    return tuple(_char(F) for F in fields)


# -- main theorem ------------------------------------------------------------

def verify_main_theorem(
    I: MonomialIdeal,
    J: MonomialIdeal,
    spec: RegionSpec,
    fields: Iterable[FieldSpec | int],
) -> VerificationReport:
    """Compare beta_{i,b}(J) on region B with beta_{i,psi^-1(b)}(I), 1 <= i <= n.

    Degrees of B outside the lcm lattice of J carry no Betti numbers, so
    only lattice degrees and the images psi(a) of I's support are visited.
    """
    n = I.n
    chars = _chars(fields)
    if J.n != n or len(spec.e) != n - 1:
        raise ValueError("region spec does not match the ideals' variable count")
    for j, x in enumerate(spec.e):
        if power(n, j, spec.p**x) not in J:
            raise ValueError(f"J does not contain x{j + 1}^{spec.p ** x}; it was not built with this spec")

    report = VerificationReport("main theorem: Betti table of J on region B mirrors that of I", chars)
    tab_I = betti_tables(I, chars)
    support_I = sorted({b for t in tab_I.values() for (i, b) in t.entries if 1 <= i <= n})
    images = {}
    for a in support_I:
        if not in_region_A(a, spec):
            report.notes.append(f"degree {monomial_str(a)} of I lies outside region A")
            continue
        b = psi_map(a, spec)
        if in_region_B(b, spec):
            images[a] = b
        else:
            report.notes.append(
                f"psi({monomial_str(a)}) = {monomial_str(b)} falls on or past the boundary of B; not judged"
            )
    degs = {b for b in lcm_lattice(J) if in_region_B(b, spec)} | set(images.values())
    tab_J = betti_tables(J, chars, degrees=degs)

    for p in chars:
        for b in sorted(degs):
            a = psi_inverse(b, spec)
            for i in range(1, n + 1):
                expected = tab_I[p][i, a] if a is not None else 0
                report.add(p, "region-B", i, b, expected, tab_J[p][i, b])
        for a, b in sorted(images.items()):
            for i in range(1, n + 1):
                if tab_I[p][i, a]:
                    report.add(p, "image", i, b, tab_I[p][i, a], tab_J[p][i, b])
    return report


# -- stretch proposition -----------------------------------------------------

def remap_table(T: BettiTable, spec: StretchSpec) -> dict[tuple[int, Monomial], int]:
    k = spec.z
    return {(i, b[:k] + (spec(b[k]),) + b[k + 1:]): v for (i, b), v in T.entries.items()}


def verify_stretch_proposition(
    I: MonomialIdeal,
    spec: StretchSpec,
    fields: Iterable[FieldSpec | int],
    cap: int = 20000,
) -> VerificationReport:
    """Table of Phi_d(I) equals the table of I with z-degree l moved to d_l."""
    chars = _chars(fields)
    report = VerificationReport(f"stretch: Betti table of Phi_d(I) along x{spec.z + 1}", chars)
    if I.is_zero:
        report.notes.append("zero ideal: both tables empty")
        return report
    phi = stretch_phi(I, spec)
    for ideal in (I, phi):
        size = len(lcm_lattice(ideal))
        if size > cap:
            raise PreconditionError(f"lcm lattice has {size} elements, above the cap {cap}")
    tab_I = betti_tables(I, chars)
    tab_phi = betti_tables(phi, chars)
    for p in chars:
        expected = remap_table(tab_I[p], spec)
        for key in sorted(set(expected) | set(tab_phi[p].entries)):
            i, b = key
            report.add(p, "stretch", i, b, expected.get(key, 0), tab_phi[p][i, b])
    return report


# -- one construction stage --------------------------------------------------

def verify_stage_dichotomy(
    J_prev: MonomialIdeal,
    j: int,
    e_j: int,
    p: int,
    fields: Iterable[FieldSpec | int],
    literal: bool = False,
) -> VerificationReport:
    """Check the Betti split at the stage adding x_j^q, q = p^e_j.

    With K = J_prev + (x_j^q) and T = (J_prev : x_j^inf):
      (1) (J_prev : x_j^q) == T;
      (2) beta_{i,b}(K) = beta_{i,b}(J_prev) when |b| < i + q, and
          beta_{i, b - q e_j}(S/T) otherwise;
      (3) after stretching x_{j+1} by q, the same rule holds at the
          contracted degree when q divides b_{j+1}, and zero elsewhere;
      (4) for each nonzero beta_{i,b} of the stretched ideal, it equals the
          J_prev value exactly when |b'| < i + q.

    ``literal=True`` switches to the threshold b_j < i + q and the ideal
    convention beta_{i-1}(T); that variant fails whenever T has Betti numbers
    (the saturation part always sits at b_j = q).
    """
    check_characteristic(p)
    if p == 0:
        raise ValueError("the stage check needs a prime p")
    chars = _chars(fields)
    n = J_prev.n
    q = p**e_j
    bound = regularity_bound(J_prev)
    if q <= bound:
        raise PreconditionError(f"{p}^{e_j} = {q} does not exceed the regularity bound {bound}")

    K = add_power(J_prev, j, q)
    sat = saturate_var(J_prev, j)
    report = VerificationReport(
        f"stage dichotomy at x{j + 1}, q={p}^{e_j}" + (" (literal threshold)" if literal else ""), chars
    )
    colon = colon_power(J_prev, j, q)
    report.add(0, "colon=sat", 0, (0,) * n, 1, int(colon == sat))

    shift = power(n, j, q)

    def low(b, i):
        return b[j] < i + q if literal else degree(b) < i + q

    degs_K = lcm_lattice(K) | lcm_lattice(J_prev)
    degs_K |= {tuple(x + y for x, y in zip(c, shift)) for c in lcm_lattice(sat) | {(0,) * n}}
    sat_degs = {tuple(x - y for x, y in zip(b, shift)) for b in degs_K if b[j] >= q}

    stretched = None
    if j + 1 < n:
        sspec = StretchSpec.arithmetic(j + 1, q)
        stretched = stretch_phi(K, sspec)
        contract = {}
        for b in lcm_lattice(stretched):
            if b[j + 1] % q == 0:
                contract[b] = b[:j + 1] + (b[j + 1] // q,) + b[j + 2:]
        for b in degs_K:
            contract[b[:j + 1] + (b[j + 1] * q,) + b[j + 2:]] = b
        extra = set(contract.values()) - degs_K
        degs_K |= extra
        sat_degs |= {tuple(x - y for x, y in zip(b, shift)) for b in extra if b[j] >= q}
        tab_st = betti_tables(stretched, chars, degrees=set(contract) | lcm_lattice(stretched))

    tab_K = betti_tables(K, chars, degrees=degs_K)
    tab_prev = betti_tables(J_prev, chars, degrees=degs_K)
    tab_sat = betti_tables(sat, chars, degrees=sat_degs)

    def sat_term(p, i, c):
        if c is None:
            return 0
        if literal:
            return tab_sat[p][i - 1, c] if i >= 1 else 0
        # quotient S/T: beta_0 = 1 at degree 0 unless T is the unit ideal
        if sat.is_unit:
            return 0
        if i == 0:
            return int(not any(c))
        return tab_sat[p][i - 1, c]

    def predicted(p, i, b):
        if low(b, i):
            return tab_prev[p][i, b]
        c = tuple(x - y for x, y in zip(b, shift)) if b[j] >= q else None
        return sat_term(p, i, c)

    for p in chars:
        for b in sorted(degs_K):
            for i in range(0, n + 1):
                report.add(p, "sum", i, b, predicted(p, i, b), tab_K[p][i, b])
        if stretched is None:
            continue
        for b in sorted(set(contract) | lcm_lattice(stretched)):
            bp = contract.get(b)
            for i in range(0, n + 1):
                actual = tab_st[p][i, b]
                expected = predicted(p, i, bp) if bp is not None else 0
                report.add(p, "stretched", i, b, expected, actual)
                if actual and bp is not None:
                    same = int(actual == tab_prev[p][i, bp])
                    report.add(p, "iff", i, b, int(low(bp, i)), same)
    return report


def verify_construction_stages(
    trace: ConstructionTrace, fields: Iterable[FieldSpec | int], stages: Sequence[int] | None = None
) -> list[VerificationReport]:
    chosen = range(len(trace.stages)) if stages is None else stages
    return [
        verify_stage_dichotomy(trace.stages[k].before, trace.stages[k].i, trace.stages[k].e, trace.p, fields)
        for k in chosen
    ]


# -- field-independent summaries ---------------------------------------------

def verify_char_independence_props(
    J: MonomialIdeal,
    p: int,
    fields: Iterable[FieldSpec | int],
) -> VerificationReport:
    """Regularity and projective dimension agree across fields.

    Only judged when J is p-Borel-fixed; otherwise the values are reported
    as notes and the verdict is vacuous.
    """
    chars = _chars(fields)
    report = VerificationReport("regularity and projective dimension independent of the field", chars)
    tables = betti_tables(J, chars)
    borel = is_p_borel_fixed(J, p) is True
    if not borel:
        report.notes.append(f"ideal is not {p}-Borel-fixed; values reported, not judged")
    ref = chars[0]
    zero = (0,) * J.n
    for c in chars:
        reg, pd = tables[c].regularity(), tables[c].projective_dimension()
        report.notes.append(f"{'QQ' if c == 0 else f'GF({c})'}: regularity {reg}, projective dimension {pd}")
        if borel:
            report.add(c, "regularity", 0, zero, tables[ref].regularity(), reg)
            report.add(c, "projdim", 0, zero, tables[ref].projective_dimension(), pd)
    if borel:
        top = max((k for g in J.gens for k in range(J.n) if g[k]), default=-1)
        report.notes.append(f"largest variable index in a generator: x{top + 1}")
    return report


def corrupt(J: MonomialIdeal, index: int = 0, var: int = 0, by: int = 1) -> MonomialIdeal:
    """Bump one exponent of one non-pure-power generator (negative control)."""
    from .ideals import minimalize

    mixed = [g for g in J.gens if sum(1 for a in g if a) > 1]
    g = list(mixed[index % len(mixed)])
    g[var] += by
    gens = [x for x in J.gens if x != mixed[index % len(mixed)]] + [tuple(g)]
    return minimalize(J.n, gens)
