"""Multigraded Betti numbers of monomial ideals via upper Koszul complexes.

For an ideal I and a multidegree b, the upper Koszul complex K^b(I) has as
faces the squarefree vectors t <= b with x^(b - t) in I, and
beta_{i,b}(I) = dim H~_{i-1}(K^b(I)). Nonzero values only occur at degrees
of the lcm lattice, so tables are assembled over that lattice.

Tables use the ideal convention: beta_i(I) = beta_{i+1}(S/I).
"""
from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .homology import FieldSpec, SimplicialComplex, reduced_homology_dims, _char
from .ideals import Monomial, MonomialIdeal, contains, degree, lcm, monomial_str


def koszul_subcomplex(I: MonomialIdeal, b: Monomial) -> SimplicialComplex:
    """The upper Koszul complex of I at degree b, on vertices 0..n-1.

    Only variables in the support of b can occur in faces.
    """
    if len(b) != I.n or any(a < 0 for a in b):
        raise ValueError(f"bad multidegree {b}")
    support = [j for j in range(I.n) if b[j] > 0]
    faces = []
    for mask in range(1 << len(support)):
        tau = tuple(support[k] for k in range(len(support)) if mask >> k & 1)
        m = list(b)
        for j in tau:
            m[j] -= 1
        if contains(I, tuple(m)):
            faces.append(tau)
    return SimplicialComplex(I.n, faces, check=False)


@lru_cache(maxsize=65536)
def _homology(K: SimplicialComplex, p: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(reduced_homology_dims(K, p).items()))


def _betti_vector(K: SimplicialComplex, p: int) -> dict[int, int]:
    # beta_i = dim H~_{i-1}
    return {d + 1: h for d, h in _homology(K, p) if h}


def betti_at(I: MonomialIdeal, i: int, b: Monomial, F: FieldSpec | int) -> int:
    if i < 0:
        return 0
    p = _char(F)
    return _betti_vector(koszul_subcomplex(I, tuple(b)), p).get(i, 0)


def lcm_lattice(I: MonomialIdeal) -> set[Monomial]:
    """All lcms of nonempty sets of minimal generators, by join closure."""
    if I.is_zero:
        raise ValueError("the zero ideal has an empty lcm lattice")
    gens = I.gens
    seen = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = lcm(a, g)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers beta_{i,b}(I) over one field."""

    characteristic: int
    entries: dict[tuple[int, Monomial], int] = field(default_factory=dict)
    convention: str = "ideal"

    def __getitem__(self, key: tuple[int, Monomial]) -> int:
        i, b = key
        return self.entries.get((i, tuple(b)), 0)

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (i, b), v in self.entries.items():
            out[i, degree(b)] += v
        return dict(sorted(out.items()))

    def totals(self) -> tuple[int, ...]:
        """(beta_0, beta_1, ...) summed over all degrees."""
        if not self.entries:
            return ()
        top = max(i for i, _ in self.entries)
        tot = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            tot[i] += v
        return tuple(tot)

    def regularity(self) -> int:
        if not self.entries:
            raise ValueError("regularity of the zero ideal is undefined")
        return max(degree(b) - i for i, b in self.entries)

    def projective_dimension(self) -> int:
        if not self.entries:
            raise ValueError("projective dimension of the zero ideal is undefined")
        return max(i for i, _ in self.entries)

    def records(self) -> list[dict]:
        return [
            {"characteristic": self.characteristic, "i": i, "multidegree": list(b), "value": v}
            for (i, b), v in sorted(self.entries.items())
        ]

    def format_records(self) -> str:
        return "".join(
            f"{self.characteristic}\t{i}\t{' '.join(map(str, b))}\t{v}\n"
            for (i, b), v in sorted(self.entries.items())
        )

    def format_grid(self) -> str:
        """Macaulay2-style table: column i, row j holds beta_{i, i+j}."""
        g = self.graded()
        label = "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"
        if not g:
            return f"{label}: zero ideal\n"
        cols = range(max(i for i, _ in g) + 1)
        rows = sorted({d - i for i, d in g})
        tot = self.totals()
        cells = [[""] + [str(i) for i in cols], ["total:"] + [str(tot[i]) for i in cols]]
        for r in rows:
            cells.append([f"{r}:"] + [str(g.get((i, i + r), ".")) for i in cols])
        widths = [max(len(row[c]) for row in cells) for c in range(len(cells[0]))]
        lines = [f"{label} (ideal convention)"]
        lines += [" ".join(s.rjust(w) for s, w in zip(row, widths)) for row in cells]
        return "\n".join(lines) + "\n"


def _vectors_at(args):
    I, b, chars = args
    K = koszul_subcomplex(I, b)
    return b, [_betti_vector(K, p) for p in chars]


def betti_tables(
    I: MonomialIdeal,
    fields: Iterable[FieldSpec | int],
    degrees: Iterable[Monomial] | None = None,
    workers: int | None = None,
) -> dict[int, BettiTable]:
    """Betti tables of I over several fields, keyed by characteristic.

    Each Koszul complex is built once and shared by all fields. ``degrees``
    restricts the evaluation (default: the whole lcm lattice). With
    ``workers`` > 1 the degrees are spread over worker processes; the
    result does not depend on the schedule.
    """
    chars = [_char(F) for F in fields]
    tables = {p: BettiTable(p) for p in chars}
    if I.is_zero:
        return tables
    degs = sorted(lcm_lattice(I) if degrees is None else {tuple(b) for b in degrees})
    if workers is None:
        workers = int(os.environ.get("PBOREL_WORKERS", "1"))
    jobs = [(I, b, chars) for b in degs]
    if workers > 1 and len(jobs) > 256:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_vectors_at, jobs, chunksize=64))
    else:
        results = map(_vectors_at, jobs)
    for b, vecs in results:
        for p, vec in zip(chars, vecs):
            for i, v in vec.items():
                tables[p].entries[i, b] = v
    for t in tables.values():
        t.entries = dict(sorted(t.entries.items()))
    return tables


def betti_table(I: MonomialIdeal, F: FieldSpec | int, workers: int | None = None) -> BettiTable:
    p = _char(F)
    return betti_tables(I, [p], workers=workers)[p]


def betti_graded(T: BettiTable) -> dict[tuple[int, int], int]:
    return T.graded()


def regularity(I: MonomialIdeal, F: FieldSpec | int) -> int:
    if I.is_zero:
        raise ValueError("regularity of the zero ideal is undefined")
    return betti_table(I, F).regularity()


def diff_tables(A: BettiTable, B: BettiTable) -> list[tuple[int, Monomial, int, int]]:
    """Entries where two tables disagree, as (i, b, value in A, value in B)."""
    keys = sorted(set(A.entries) | set(B.entries))
    return [(i, b, A[i, b], B[i, b]) for i, b in keys if A[i, b] != B[i, b]]


def describe_degree(b: Monomial) -> str:
    return f"{monomial_str(b)} (|b|={degree(b)})"
