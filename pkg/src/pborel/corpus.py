"""Named builtin ideals."""
from __future__ import annotations

from .ideals import MonomialIdeal, minimalize

# non-faces of the 6-vertex triangulation of the real projective plane
RP2_TRIPLES = (
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 5), (3, 4, 5),
    (2, 3, 6), (1, 4, 6), (3, 4, 6), (1, 5, 6), (2, 5, 6),
)

# the ideal J printed for RP2, p = 2, e = (3, 5, 7, 9, 11)
RP2_PARDUE_J = (
    (8, 0, 0, 0, 0, 0),
    (0, 32, 0, 0, 0, 0),
    (1, 8, 32, 0, 0, 0),
    (0, 0, 128, 0, 0, 0),
    (1, 8, 0, 128, 0, 0),
    (0, 0, 0, 512, 0, 0),
    (1, 0, 32, 0, 512, 0),
    (0, 8, 0, 128, 512, 0),
    (0, 0, 32, 128, 512, 0),
    (0, 0, 0, 0, 2048, 0),
    (0, 8, 32, 0, 0, 2048),
    (1, 0, 0, 128, 0, 2048),
    (0, 0, 32, 128, 0, 2048),
    (1, 0, 0, 0, 512, 2048),
    (0, 8, 0, 0, 512, 2048),
)


def squarefree(n: int, supports) -> MonomialIdeal:
    """Ideal generated by the squarefree monomials on 1-based supports."""
    return minimalize(n, ([1 if j + 1 in s else 0 for j in range(n)] for s in supports))


def rp2() -> MonomialIdeal:
    return squarefree(6, RP2_TRIPLES)


def rp2_pardue_j() -> MonomialIdeal:
    return minimalize(6, RP2_PARDUE_J)


BUILTINS = {
    "rp2": rp2,
    "rp2-j": rp2_pardue_j,
    "max2-in-3": lambda: squarefree(3, [(1,), (2,)]),
    "path3": lambda: squarefree(3, [(1, 2), (2, 3)]),
    "cycle4": lambda: squarefree(4, [(1, 2), (2, 3), (3, 4), (1, 4)]),
    "powers2": lambda: minimalize(2, [(2, 0), (1, 1), (0, 2)]),
    "mixed3": lambda: minimalize(3, [(1, 0, 2), (0, 3, 0), (2, 1, 0)]),
}


def builtin(name: str) -> MonomialIdeal:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown builtin ideal {name!r}; choose from {sorted(BUILTINS)}") from None
