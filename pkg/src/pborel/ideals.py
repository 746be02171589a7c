"""Monomials and monomial ideals over the integers.

A monomial is a tuple of natural exponents; a monomial ideal is stored by its
minimal generators. Variable indices are 0-based throughout the library, so
``x1`` in printed output is index 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Monomial = tuple[int, ...]


class IdealFormatError(ValueError):
    """Raised when an ideal file cannot be parsed."""


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def degree(a: Monomial) -> int:
    return sum(a)


def unit(n: int) -> Monomial:
    return (0,) * n


def power(n: int, j: int, t: int) -> Monomial:
    """The monomial x_j^t in n variables."""
    m = [0] * n
    m[j] = t
    return tuple(m)


def monomial_str(m: Monomial) -> str:
    parts = []
    for j, a in enumerate(m):
        if a == 1:
            parts.append(f"x{j + 1}")
        elif a > 1:
            parts.append(f"x{j + 1}^{a}")
    return "*".join(parts) if parts else "1"


def _canonical_key(m: Monomial) -> tuple[int, ...]:
    # descending lexicographic order with x1 > x2 > ... > xn
    return tuple(-a for a in m)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators in canonical order.

    Build instances with :func:`minimalize` (or :meth:`from_generators`);
    the constructor trusts its input.
    """

    n: int
    gens: tuple[Monomial, ...]

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return minimalize(n, gens)

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def unit_ideal(cls, n: int) -> "MonomialIdeal":
        return cls(n, (unit(n),))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (unit(self.n),)

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"


def minimalize(n: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Reduce ``gens`` to the divisibility antichain they generate."""
    cands = set()
    for g in gens:
        g = tuple(int(a) for a in g)
        if len(g) != n:
            raise ValueError(f"generator {g} has length {len(g)}, expected {n}")
        if any(a < 0 for a in g):
            raise ValueError(f"negative exponent in {g}")
        cands.add(g)
    kept: list[Monomial] = []
    # a divisor has total degree no larger than its multiple
    for g in sorted(cands, key=lambda m: (sum(m), m)):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    kept.sort(key=_canonical_key)
    return MonomialIdeal(n, tuple(kept))


def _check_index(I: MonomialIdeal, j: int) -> None:
    if not 0 <= j < I.n:
        raise IndexError(f"variable index {j} out of range for n={I.n}")


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    if len(m) != I.n:
        raise ValueError(f"monomial {m} has length {len(m)}, expected {I.n}")
    return any(divides(g, m) for g in I.gens)


def colon_power(I: MonomialIdeal, j: int, t: int) -> MonomialIdeal:
    """The colon ideal (I : x_j^t)."""
    _check_index(I, j)
    if t < 0:
        raise ValueError("t must be non-negative")
    if t == 0:
        return I
    gens = []
    for g in I.gens:
        g = list(g)
        g[j] -= min(t, g[j])
        gens.append(g)
    return minimalize(I.n, gens)


def saturate_var(I: MonomialIdeal, j: int) -> MonomialIdeal:
    """The saturation (I : x_j^infinity)."""
    _check_index(I, j)
    return minimalize(I.n, (g[:j] + (0,) + g[j + 1:] for g in I.gens))


def add_power(I: MonomialIdeal, j: int, t: int) -> MonomialIdeal:
    """I + (x_j^t)."""
    _check_index(I, j)
    if t < 1:
        raise ValueError("t must be at least 1 (x_j^0 would give the unit ideal)")
    return minimalize(I.n, I.gens + (power(I.n, j, t),))


def ideal_sum(I: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    if I.n != K.n:
        raise ValueError("ideals live in different rings")
    return minimalize(I.n, I.gens + K.gens)


def lcm_multidegree(I: MonomialIdeal) -> Monomial:
    if I.is_zero:
        raise ValueError("the zero ideal has no lcm")
    out = I.gens[0]
    for g in I.gens[1:]:
        out = lcm(out, g)
    return out


def lcm_degree(I: MonomialIdeal) -> int:
    return degree(lcm_multidegree(I))


# -- text format -------------------------------------------------------------

def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the shared ideal format.

    The first non-comment line is ``n=<int>``; each further line holds one
    generator as ``n`` whitespace-separated exponents. ``#`` starts a
    comment line.
    """
    n = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            key, sep, val = line.partition("=")
            if key.strip() != "n" or not sep:
                raise IdealFormatError(f"line {lineno}: expected 'n=<int>', got {line!r}")
            try:
                n = int(val)
            except ValueError:
                raise IdealFormatError(f"line {lineno}: bad variable count {val!r}") from None
            if n < 1:
                raise IdealFormatError(f"line {lineno}: variable count must be positive")
            continue
        try:
            g = [int(tok) for tok in line.split()]
        except ValueError:
            raise IdealFormatError(f"line {lineno}: non-integer exponent in {line!r}") from None
        if len(g) != n or any(a < 0 for a in g):
            raise IdealFormatError(f"line {lineno}: expected {n} natural exponents, got {line!r}")
        gens.append(g)
    if n is None:
        raise IdealFormatError("missing 'n=<int>' header")
    return minimalize(n, gens)


def format_ideal(I: MonomialIdeal, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    lines.append(f"n={I.n}")
    lines.extend(" ".join(map(str, g)) for g in I.gens)
    return "\n".join(lines) + "\n"


def read_ideal(path) -> MonomialIdeal:
    with open(path) as fh:
        return parse_ideal(fh.read())


def write_ideal(path, I: MonomialIdeal, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_ideal(I, comment))
