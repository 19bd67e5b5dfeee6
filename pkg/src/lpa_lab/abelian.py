"""Finitely generated abelian groups presented as cokernels of integer matrices."""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .errors import NotSquare, ShapeMismatch
from .linalg import IntMatrix, smith_normal_form

INFINITE = math.inf

DEFAULT_GROUP_BUDGET = 64


@dataclass(frozen=True)
class FgAbelianGroup:
    """``Z_{d1} x ... x Z_{dk} x Z^rank`` with ``d1 | d2 | ...`` and every ``di >= 2``."""

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in t):
            raise ShapeMismatch(f"invariant factors must be >= 2, got {t}")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ShapeMismatch(f"invariant factors must form a divisibility chain, got {t}")
        if self.free_rank < 0:
            raise ShapeMismatch("free rank must be non-negative")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_diagonal(cls, diag: Sequence[int]) -> "FgAbelianGroup":
        return cls(tuple(d for d in diag if d > 1), sum(1 for d in diag if d == 0))

    @property
    def order(self):
        return INFINITE if self.free_rank else math.prod(self.torsion)

    @property
    def betti(self) -> int:
        return self.free_rank

    def zero(self) -> "GroupElement":
        return GroupElement((0,) * len(self.torsion), (0,) * self.free_rank)

    def element(self, torsion_coords: Sequence[int], free_coords: Sequence[int] = ()) -> "GroupElement":
        if len(torsion_coords) != len(self.torsion) or len(free_coords) != self.free_rank:
            raise ShapeMismatch("coordinates do not match the group shape")
        return GroupElement(
            tuple(c % d for c, d in zip(torsion_coords, self.torsion)), tuple(free_coords)
        )

    def to_json(self) -> dict:
        return {"torsion": list(self.torsion), "rank": self.free_rank}

    def __str__(self) -> str:
        parts = [f"Z_{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " x ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupElement:
    torsion_coords: tuple[int, ...]
    free_coords: tuple[int, ...]

    def to_json(self) -> list[int]:
        return [*self.torsion_coords, *self.free_coords]


@dataclass(frozen=True)
class CokernelProjection:
    """Maps an integer vector to its class in ``Z^n / column-lattice``."""

    P: IntMatrix
    diagonal: tuple[int, ...]
    group: FgAbelianGroup

    def __call__(self, x: Sequence[int]) -> GroupElement:
        if len(x) != self.P.cols:
            raise ShapeMismatch(f"expected a vector of length {self.P.cols}")
        y = self.P.apply(x)
        tors = tuple(v % d for v, d in zip(y, self.diagonal) if d > 1)
        free = tuple(v for v, d in zip(y, self.diagonal) if d == 0)
        return GroupElement(tors, free)


def cokernel(m, precision: str = "auto") -> tuple[FgAbelianGroup, CokernelProjection]:
    """``Z^n / m Z^n`` in invariant-factor form, plus the quotient map."""
    m = m if isinstance(m, IntMatrix) else IntMatrix.of(m)
    if m.rows != m.cols:
        raise NotSquare(f"cokernel expects a square matrix, got {m.rows}x{m.cols}")
    snf = smith_normal_form(m, precision)
    diag = snf.diagonal
    group = FgAbelianGroup.from_diagonal(diag)
    return group, CokernelProjection(snf.P, diag, group)


def _check_shape(g: FgAbelianGroup, e: GroupElement) -> None:
    if len(e.torsion_coords) != len(g.torsion) or len(e.free_coords) != g.free_rank:
        raise ShapeMismatch("element does not belong to this group")


def element_order(g: FgAbelianGroup, e: GroupElement):
    """Least ``k >= 1`` with ``k e = 0``, or ``INFINITE``."""
    _check_shape(g, e)
    if any(e.free_coords):
        return INFINITE
    return reduce(
        math.lcm, (d // math.gcd(d, c) for d, c in zip(g.torsion, e.torsion_coords)), 1
    )


# -- pointed isomorphism ------------------------------------------------------


class PointedAnswer(enum.Enum):
    YES = "yes"
    NO = "no"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class PointedWitness:
    """An automorphism given by generator images.

    ``torsion_images[i]`` is the image of the i-th cyclic generator (torsion
    coordinates only; torsion never maps into the free part).  When the free
    rank is one, the free generator goes to ``(free_torsion, free_sign)``.
    """

    torsion_images: tuple[tuple[int, ...], ...]
    free_torsion: tuple[int, ...] = ()
    free_sign: int = 1

    def apply(self, g: FgAbelianGroup, e: GroupElement) -> GroupElement:
        k = len(g.torsion)
        out = [0] * k
        for c, img in zip(e.torsion_coords, self.torsion_images):
            for i in range(k):
                out[i] += c * img[i]
        free = ()
        if g.free_rank:
            n = e.free_coords[0]
            for i in range(k):
                out[i] += n * self.free_torsion[i]
            free = (self.free_sign * n,)
        return GroupElement(tuple(v % d for v, d in zip(out, g.torsion)), free)

    def to_json(self) -> dict:
        return {
            "torsion_images": [list(x) for x in self.torsion_images],
            "free_torsion": list(self.free_torsion),
            "free_sign": self.free_sign,
        }


def _minors_gcd(cols: list[tuple[int, ...]]) -> int:
    k = len(cols[0])
    g = 0
    for idx in itertools.combinations(range(len(cols)), k):
        sub = [cols[j] for j in idx]
        if k == 1:
            g = math.gcd(g, sub[0][0])
        else:
            g = math.gcd(g, sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0])
        if g == 1:
            return 1
    return g


def _is_automorphism(torsion: tuple[int, ...], images: Sequence[tuple[int, ...]]) -> bool:
    """Relations hold and the images generate the whole torsion group."""
    for d, img in zip(torsion, images):
        if any((d * c) % m for c, m in zip(img, torsion)):
            return False
    k = len(torsion)
    cols = list(images) + [tuple(d if i == j else 0 for i in range(k)) for j, d in enumerate(torsion)]
    return _minors_gcd(cols) == 1


def verify_pointed_witness(g: FgAbelianGroup, a: GroupElement, b: GroupElement, w: PointedWitness) -> bool:
    if len(w.torsion_images) != len(g.torsion):
        return False
    if g.torsion and not _is_automorphism(g.torsion, w.torsion_images):
        return False
    if g.free_rank and (w.free_sign not in (1, -1) or len(w.free_torsion) != len(g.torsion)):
        return False
    return w.apply(g, a) == b


def _solutions(coef: int, rhs: int, d: int, modulus: int):
    """All ``y`` in ``[0, d)`` with ``coef * y == rhs`` modulo ``modulus``."""
    return [y for y in range(d) if (coef * y - rhs) % modulus == 0]


def _search(g: FgAbelianGroup, a: GroupElement, b: GroupElement):
    t = g.torsion
    k = len(t)
    if g.free_rank:
        n_a, n_b = a.free_coords[0], b.free_coords[0]
        signs = [s for s in (1, -1) if s * n_a == n_b]
    else:
        n_a, signs = 0, [1]
    # moduli of the subgroup n_a * T, coordinatewise
    mods = [math.gcd(n_a, d) if n_a else d for d in t]
    c = a.torsion_coords

    def solve_tau(r):
        tau = []
        for ri, d in zip(r, t):
            h = math.gcd(n_a, d)
            if ri % h:
                return None
            dd = d // h
            tau.append((ri // h) * pow(n_a // h, -1, dd) % d if dd > 1 else 0)
        return tuple(tau)

    for sign in signs:
        if k == 0:
            return PointedWitness((), (), sign)
        if k == 1:
            (d,) = t
            for x in _solutions(c[0], b.torsion_coords[0], d, mods[0]):
                if math.gcd(x, d) == 1:
                    r = ((b.torsion_coords[0] - c[0] * x) % d,)
                    tau = solve_tau(r) if n_a else (0,)
                    if tau is not None:
                        return PointedWitness(((x,),), tau if g.free_rank else (), sign)
            continue
        d1, d2 = t
        step = d2 // d1
        for x1 in range(d1):
            for x2 in range(0, d2, step):
                x = (x1, x2)
                rhs = [(bt - c[0] * xi) for bt, xi in zip(b.torsion_coords, x)]
                cands = [_solutions(c[1], rhs[i], t[i], mods[i]) for i in range(2)]
                for y in itertools.product(*cands):
                    if not _is_automorphism(t, [x, y]):
                        continue
                    if g.free_rank:
                        r = tuple((bt - c[0] * xi - c[1] * yi) % d for bt, xi, yi, d in zip(b.torsion_coords, x, y, t))
                        tau = solve_tau(r) if n_a else (0, 0)
                        if tau is None:
                            continue
                        return PointedWitness((x, tuple(y)), tau, sign)
                    return PointedWitness((x, tuple(y)))
    return None


def search_pointed_isomorphism(a, b, budget: int = DEFAULT_GROUP_BUDGET):
    """Decide whether an isomorphism carries marked element ``a`` to ``b``.

    ``a`` and ``b`` are ``(group, element)`` pairs.  Returns
    ``(PointedAnswer, PointedWitness | None)``.  The search is exhaustive for
    free rank <= 1 and at most two invariant factors each <= ``budget``.
    """
    (ga, ea), (gb, eb) = a, b
    _check_shape(ga, ea)
    _check_shape(gb, eb)
    if ga != gb:
        return PointedAnswer.NO, None
    g = ga
    if ea == eb:
        ident = tuple(tuple(int(i == j) for j in range(len(g.torsion))) for i in range(len(g.torsion)))
        return PointedAnswer.YES, PointedWitness(ident, (0,) * len(g.torsion) if g.free_rank else (), 1)
    if element_order(g, ea) != element_order(g, eb):
        return PointedAnswer.NO, None
    if g.free_rank > 1 or len(g.torsion) > 2 or (g.torsion and g.torsion[-1] > budget):
        return PointedAnswer.EXHAUSTED, None
    w = _search(g, ea, eb)
    if w is None:
        return PointedAnswer.NO, None
    return PointedAnswer.YES, w


def pointed_isomorphic(a, b, budget: int = DEFAULT_GROUP_BUDGET) -> PointedAnswer:
    return search_pointed_isomorphism(a, b, budget)[0]
