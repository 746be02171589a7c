"""Coefficient ideals, the stretch operator and the p-Borel construction.

``stretch_phi`` re-places the z-degree slices of an ideal at the degrees of
an increasing sequence ``d``. ``pardue_construct`` alternates adding a large
p-power of x_i with stretching x_{i+1} by that same power, which yields a
p-Borel-fixed ideal whose Betti table contains a copy of the input's table.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Callable, Sequence

from .borel import check_characteristic, is_p_borel_fixed
from .ideals import (
    MonomialIdeal,
    add_power,
    colon_power,
    format_ideal,
    lcm_degree,
    minimalize,
    saturate_var,
)

log = logging.getLogger(__name__)


class ConstructionError(ValueError):
    """An exponent override breaks the construction's requirements."""


@dataclass(frozen=True)
class StretchSpec:
    """The distinguished variable and an increasing sequence d_0 < d_1 < ...

    Give either ``step`` (d_l = l * step) or an explicit ``sequence`` prefix.
    """

    z: int
    step: int | None = None
    sequence: tuple[int, ...] | None = None

    def __post_init__(self):
        if (self.step is None) == (self.sequence is None):
            raise ValueError("give exactly one of step or sequence")
        if self.step is not None and self.step < 1:
            raise ValueError("step must be positive")
        if self.sequence is not None:
            seq = tuple(self.sequence)
            object.__setattr__(self, "sequence", seq)
            if any(a < 0 for a in seq) or any(a >= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"d must be strictly increasing naturals, got {seq}")

    @classmethod
    def arithmetic(cls, z: int, step: int) -> "StretchSpec":
        return cls(z, step=step)

    @classmethod
    def explicit(cls, z: int, seq: Sequence[int]) -> "StretchSpec":
        return cls(z, sequence=tuple(seq))

    def __call__(self, l: int) -> int:
        if self.step is not None:
            return l * self.step
        if l >= len(self.sequence):
            raise ValueError(f"d_{l} requested but only {len(self.sequence)} terms given")
        return self.sequence[l]


def coefficient_ideal(I: MonomialIdeal, k: int, i: int) -> MonomialIdeal:
    """The coefficient ideal ((I : x_k^i) intersected with the ring without x_k).

    Returned in the same n variables; x_k does not occur in its generators.
    """
    return minimalize(
        I.n, (g[:k] + (0,) + g[k + 1:] for g in I.gens if g[k] <= i)
    )


def stretch_phi(I: MonomialIdeal, spec: StretchSpec) -> MonomialIdeal:
    k = spec.z
    return minimalize(I.n, (g[:k] + (spec(g[k]),) + g[k + 1:] for g in I.gens))


def stretch_phi_by_definition(I: MonomialIdeal, spec: StretchSpec) -> MonomialIdeal:
    """Generate the sum of I_<i> * z^{d_i} over i up to stabilization.

    Slower than :func:`stretch_phi`; kept as an independent route.
    """
    k = spec.z
    top = max((g[k] for g in I.gens), default=0)
    gens = []
    for i in range(top + 1):
        for g in coefficient_ideal(I, k, i).gens:
            gens.append(g[:k] + (spec(i),) + g[k + 1:])
    return minimalize(I.n, gens)


def regularity_bound(I: MonomialIdeal) -> int:
    """A field-independent upper bound on reg(I): the degree of the lcm of
    the minimal generators (Taylor resolution)."""
    return lcm_degree(I)


def choose_exponent(r: int, p: int, e_prev: int = 0) -> int:
    """Smallest e > e_prev with p^e > r."""
    check_characteristic(p)
    if p == 0:
        raise ValueError("the construction needs a prime p")
    e = e_prev + 1
    while p**e <= r:
        e += 1
    return e


@dataclass(frozen=True)
class StageRecord:
    i: int  # 0-based variable receiving the power; x_{i+1} is stretched
    r: int
    e: int
    before: MonomialIdeal
    after: MonomialIdeal

    def as_dict(self, ideals: bool = False) -> dict:
        out = {"stage": self.i + 1, "r": self.r, "e": self.e, "generators": len(self.after)}
        if ideals:
            out["ideal"] = format_ideal(self.after)
        return out


@dataclass(frozen=True)
class ConstructionTrace:
    input: MonomialIdeal
    p: int
    stages: tuple[StageRecord, ...]
    output: MonomialIdeal
    bound: str = "lcm-degree"

    @property
    def r(self) -> tuple[int, ...]:
        return tuple(s.r for s in self.stages)

    @property
    def e(self) -> tuple[int, ...]:
        return tuple(s.e for s in self.stages)

    def to_json(self, ideals: bool = False) -> str:
        return json.dumps(
            {
                "p": self.p,
                "n": self.input.n,
                "bound": self.bound,
                "stages": [s.as_dict(ideals) for s in self.stages],
                "output_generators": len(self.output),
            },
            indent=2,
        )


def pardue_construct(
    I: MonomialIdeal,
    p: int,
    e_override: Sequence[int] | None = None,
    early_exit: bool = False,
    bound: Callable[[MonomialIdeal], int] = regularity_bound,
) -> tuple[MonomialIdeal, ConstructionTrace]:
    """Build a p-Borel-fixed ideal J from the monomial ideal ``I``.

    Stage i (0-based, i < n-1) picks r >= reg(J_prev) via ``bound`` and the
    least e above the previous one with p^e > r (or takes it from
    ``e_override``), then sets J = stretch of (J_prev + x_i^{p^e}) along
    x_{i+1} with d_l = l * p^e.
    """
    check_characteristic(p)
    if p == 0:
        raise ValueError("the construction needs a prime p")
    if I.is_zero:
        raise ValueError("the construction needs a nonzero ideal")
    n = I.n
    if e_override is not None:
        e_override = [int(e) for e in e_override]
        if len(e_override) < n - 1 and not early_exit:
            raise ConstructionError(f"need {n - 1} exponents, got {len(e_override)}")
    stages = []
    J = I
    e_prev = 0
    for i in range(n - 1):
        if early_exit and is_p_borel_fixed(J, p) is True:
            break
        r = bound(J)
        if e_override is None:
            e = choose_exponent(r, p, e_prev)
        else:
            if i >= len(e_override):
                raise ConstructionError(f"no exponent given for stage {i + 1}")
            e = e_override[i]
            if e <= e_prev:
                raise ConstructionError(
                    f"stage {i + 1}: exponents must strictly increase ({e} after {e_prev})"
                )
            if p**e <= r:
                raise ConstructionError(f"stage {i + 1}: {p}^{e} does not exceed bound {r}")
        q = p**e
        before = J
        J = stretch_phi(add_power(J, i, q), StretchSpec.arithmetic(i + 1, q))
        log.debug("stage %d: r=%d e=%d, %d generators", i + 1, r, e, len(J))
        stages.append(StageRecord(i, r, e, before, J))
        e_prev = e
    label = "lcm-degree" if bound is regularity_bound else getattr(bound, "__name__", "custom")
    trace = ConstructionTrace(I, p, tuple(stages), J, label)
    return J, trace


def saturation_identity_holds(stage: StageRecord, p: int) -> bool:
    """(J_prev : x_i^{p^e}) equals (J_prev : x_i^infinity) at this stage."""
    q = p**stage.e
    return colon_power(stage.before, stage.i, q) == saturate_var(stage.before, stage.i)
