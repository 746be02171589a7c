"""The digit-dominance order and the combinatorial p-Borel criterion."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .ideals import Monomial, MonomialIdeal, contains, monomial_str


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_characteristic(p: int) -> int:
    """Return ``p`` if it is 0 or a prime, else raise ValueError."""
    if p != 0 and not is_prime(p):
        raise ValueError(f"characteristic must be 0 or a prime, got {p}")
    return p


def _digits(a: int, p: int) -> list[int]:
    out = []
    while a:
        a, r = divmod(a, p)
        out.append(r)
    return out


def precedes_p(a: int, b: int, p: int) -> bool:
    """True iff binom(b, a) is nonzero mod p (for p = 0: iff a <= b).

    For prime p this is Lucas' theorem: every base-p digit of ``a`` is at
    most the matching digit of ``b``.
    """
    check_characteristic(p)
    if a < 0 or b < 0:
        raise ValueError("arguments must be natural numbers")
    if p == 0:
        return a <= b
    while a:
        if a % p > b % p:
            return False
        a //= p
        b //= p
    return True


def dominated(t: int, p: int) -> list[int]:
    """All s with 1 <= s <= t and s precedes_p t, ascending."""
    check_characteristic(p)
    if p == 0:
        return list(range(1, t + 1))
    digits = _digits(t, p)
    out = []
    for choice in product(*(range(d + 1) for d in digits)):
        s = sum(c * p**k for k, c in enumerate(choice))
        if s:
            out.append(s)
    out.sort()
    return out


@dataclass(frozen=True)
class BorelWitness:
    """A swap (x_i/x_j)^s * generator that leaves the ideal."""

    generator: Monomial
    i: int
    j: int
    s: int
    t: int
    missing: Monomial

    def __str__(self) -> str:
        return (
            f"generator {monomial_str(self.generator)}: "
            f"(x{self.i + 1}/x{self.j + 1})^{self.s} gives {monomial_str(self.missing)} "
            f"(t={self.t}), which is not in the ideal"
        )


def is_p_borel_fixed(I: MonomialIdeal, p: int) -> bool | BorelWitness:
    """Return True if ``I`` is p-Borel-fixed, otherwise the first witness.

    Generators are scanned in canonical order; for each one, target
    variables j from last to first, then sources i < j ascending, then
    s ascending.
    """
    check_characteristic(p)
    for m in I.gens:
        for j in range(I.n - 1, 0, -1):
            t = m[j]
            if t == 0:
                continue
            steps = dominated(t, p)
            for i in range(j):
                for s in steps:
                    cand = list(m)
                    cand[j] -= s
                    cand[i] += s
                    cand = tuple(cand)
                    if not contains(I, cand):
                        return BorelWitness(m, i, j, s, t, cand)
    return True
