"""Reduced simplicial homology over Q or GF(p), by exact elimination."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .borel import check_characteristic

MAX_VERTICES = 64

Face = tuple[int, ...]


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        check_characteristic(self.characteristic)

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


def _char(F: FieldSpec | int) -> int:
    return F.characteristic if isinstance(F, FieldSpec) else check_characteristic(F)


class SimplicialComplex:
    """A finite simplicial complex on vertices 0..v-1.

    Faces are sorted tuples. A complex with no faces at all is the void
    complex; otherwise the empty face () is always present.
    """

    def __init__(self, v: int, faces: Iterable[Sequence[int]], check: bool = True):
        if v > MAX_VERTICES:
            raise ValueError(f"at most {MAX_VERTICES} vertices supported")
        self.v = v
        fs = {tuple(sorted(f)) for f in faces}
        for f in fs:
            if any(not 0 <= x < v for x in f) or len(set(f)) != len(f):
                raise ValueError(f"bad face {f} for {v} vertices")
        if check:
            for f in fs:
                for k in range(len(f)):
                    if f[:k] + f[k + 1:] not in fs:
                        raise ValueError(f"not closed under subsets: {f}")
        self.faces = frozenset(fs)
        by_dim: dict[int, list[Face]] = {}
        for f in fs:
            by_dim.setdefault(len(f) - 1, []).append(f)
        self._by_dim = {d: sorted(lst) for d, lst in by_dim.items()}

    @classmethod
    def from_facets(cls, v: int, facets: Iterable[Sequence[int]]) -> "SimplicialComplex":
        faces = set()
        for f in facets:
            f = tuple(sorted(f))
            for k in range(len(f) + 1):
                faces.update(combinations(f, k))
        return cls(v, faces, check=False)

    @classmethod
    def void(cls, v: int = 0) -> "SimplicialComplex":
        return cls(v, ())

    @property
    def dim(self) -> int:
        """Dimension; -1 for {()} and -2 for the void complex."""
        return max(self._by_dim, default=-2)

    def faces_of_dim(self, i: int) -> list[Face]:
        return self._by_dim.get(i, [])

    def f_vector(self) -> dict[int, int]:
        return {d: len(fs) for d, fs in sorted(self._by_dim.items())}

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and (self.v, self.faces) == (other.v, other.faces)

    def __hash__(self):
        return hash((self.v, self.faces))

    def __repr__(self):
        return f"SimplicialComplex(v={self.v}, faces={len(self.faces)})"


def boundary_matrix(K: SimplicialComplex, i: int) -> list[list[int]]:
    """Matrix of the boundary map from i-faces to (i-1)-faces.

    Rows index (i-1)-faces and columns i-faces, both in lexicographic order.
    Removing the k-th vertex of a face carries sign (-1)^k. In dimension 0
    the target is the empty face.
    """
    cols = K.faces_of_dim(i)
    rows = K.faces_of_dim(i - 1)
    index = {f: r for r, f in enumerate(rows)}
    M = [[0] * len(cols) for _ in rows]
    for c, f in enumerate(cols):
        for k in range(len(f)):
            M[index[f[:k] + f[k + 1:]]][c] = -1 if k % 2 else 1
    return M


def _rank_mod_p(M: list[list[int]], p: int) -> int:
    rows = [[x % p for x in row] for row in M]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[c], -1, p)
        for r in range(rank + 1, len(rows)):
            f = rows[r][c]
            if f:
                f = f * inv % p
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _rank_rational(M: list[list[int]]) -> int:
    # fraction-free (Bareiss) elimination on integer entries
    rows = [list(row) for row in M if any(row)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        a = prow[c]
        for r in range(rank + 1, len(rows)):
            row = rows[r]
            b = row[c]
            rows[r] = [(a * x - b * y) // prev for x, y in zip(row, prow)]
        prev = a
        rank += 1
        if rank == len(rows):
            break
    return rank


def field_rank(M: Sequence[Sequence[int]], F: FieldSpec | int) -> int:
    """Rank of an integer matrix over Q (characteristic 0) or GF(p)."""
    p = _char(F)
    M = [list(map(int, row)) for row in M]
    if p:
        return _rank_mod_p(M, p)
    return _rank_rational(M)


def reduced_homology_dims(K: SimplicialComplex, F: FieldSpec | int) -> dict[int, int]:
    """Map dimension i (from -1 to dim K) to dim of reduced H_i(K; F).

    The void complex has no faces and all homology zero, giving {}.
    """
    top = K.dim
    if top < -1:
        return {}
    ranks = {i: field_rank(boundary_matrix(K, i), F) for i in range(0, top + 1)}
    out = {}
    for i in range(-1, top + 1):
        out[i] = len(K.faces_of_dim(i)) - ranks.get(i, 0) - ranks.get(i + 1, 0)
    return out
