"""Unit complex numbers as rotations of the circle, and walk values.

A rotation of ``t`` turns stands for ``exp(2*pi*i*t)``.  Rational rotations
are kept as exact ``Fraction`` values so products, powers, conjugates and
divisibility questions carry no floating point error; an arbitrary angle is
kept as a float rotation and compared with tolerance ``1e-9``.  Floats are
never promoted back to rationals, so an angle-built phase is treated as
having infinite multiplicative order even if the float happens to look
rational.

The value of a walk is the product of its matrix entries: a digon step
contributes 1, an arc contributes the chosen phase when traversed with its
direction and the conjugate against it.  The product therefore equals the
phase raised to the walk's arc balance.  The signed variant multiplies by
(-1) per edge.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .errors import InvalidWalkError
from .graphs import MixedGraph, Walk

__all__ = [
    "Rotation",
    "Phase",
    "UnitPhase",
    "ALPHA_ONE",
    "ALPHA_I",
    "ALPHA_GAMMA",
    "ALPHA_OMEGA",
    "ROTATION_TOL",
    "make_alpha",
    "order_of",
    "rotation_cos",
    "rotation_sin",
    "ArcBalance",
    "arc_balance",
    "walk_value_h",
    "walk_value_g",
]

Rotation = Union[Fraction, float]

ROTATION_TOL = 1e-9

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)

# rotations whose cosine is exact in binary floating point
_COS_TABLE = {
    Fraction(0): 1.0,
    Fraction(1, 2): -1.0,
    Fraction(1, 4): 0.0,
    Fraction(3, 4): 0.0,
    Fraction(1, 3): -0.5,
    Fraction(2, 3): -0.5,
    Fraction(1, 6): 0.5,
    Fraction(5, 6): 0.5,
}


def rotation_cos(rotation: Rotation) -> float:
    """cos(2*pi*rotation) with exact values at the common table rotations.

    Other arguments are folded into [0, 1/4] first, so the cosine is taken of
    a small angle and the only float error is the final cosine itself.
    """
    r = rotation % 1
    if isinstance(r, Fraction):
        hit = _COS_TABLE.get(r)
        if hit is not None:
            return hit
    if r > 0.5:
        r = 1 - r
    if r > 0.25:
        return -math.cos(2.0 * math.pi * float(_HALF - r))
    return math.cos(2.0 * math.pi * float(r))


def rotation_sin(rotation: Rotation) -> float:
    """sin(2*pi*rotation), via the quarter-turn shift of the cosine."""
    return rotation_cos(rotation - _QUARTER)


def _cyclic_distance(rotation: float) -> float:
    r = rotation % 1.0
    return min(r, 1.0 - r)


@dataclass(frozen=True)
class Phase:
    """A point on the unit circle, stored as its rotation mod 1.

    Arithmetic stays exact while the rotation is a Fraction; mixing with a
    float rotation demotes the result to float.  Equality and hashing are by
    numeric rotation value (a Fraction equals the float of the same value);
    use :meth:`isclose` for tolerant comparison of float-built phases.
    """

    rotation: Rotation

    def __post_init__(self) -> None:
        object.__setattr__(self, "rotation", self.rotation % 1)

    @classmethod
    def one(cls) -> "Phase":
        return cls(Fraction(0))

    @classmethod
    def minus_one(cls) -> "Phase":
        return cls(_HALF)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.rotation, Fraction)

    def __mul__(self, other: "Phase") -> "Phase":
        return Phase(self.rotation + other.rotation)

    def __pow__(self, k: int) -> "Phase":
        return Phase(self.rotation * k)

    def conjugate(self) -> "Phase":
        return Phase(-self.rotation)

    @property
    def value(self) -> complex:
        return complex(rotation_cos(self.rotation), rotation_sin(self.rotation))

    @property
    def real(self) -> float:
        return rotation_cos(self.rotation)

    def is_identity(self, tol: float = ROTATION_TOL) -> bool:
        if self.is_exact:
            return self.rotation == 0
        return _cyclic_distance(float(self.rotation)) <= tol

    def isclose(self, other: "Phase", tol: float = ROTATION_TOL) -> bool:
        if self.is_exact and other.is_exact:
            return self.rotation == other.rotation
        return _cyclic_distance(float(self.rotation) - float(other.rotation)) <= tol

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.rotation)
        return format(float(self.rotation), ".12g")


@dataclass(frozen=True)
class UnitPhase:
    """The unit number chosen to weight arcs, stored as a rotation mod 1.

    Build exact roots of unity with :meth:`from_root` (gcd reduction is
    automatic through Fraction) and arbitrary angles with
    :meth:`from_angle`.  Angle-built instances have float rotations and are
    treated as having infinite order.
    """

    rotation: Rotation

    def __post_init__(self) -> None:
        object.__setattr__(self, "rotation", self.rotation % 1)

    @classmethod
    def from_root(cls, k: int, n: int) -> "UnitPhase":
        """exp(2*pi*i*k/n) for integer k and positive n."""
        if n <= 0:
            raise ValueError("root denominator must be positive")
        return cls(Fraction(k, n))

    @classmethod
    def from_angle(cls, theta: float) -> "UnitPhase":
        """exp(i*theta); the rotation is kept as a float."""
        return cls(float(theta) / (2.0 * math.pi))

    @property
    def is_exact(self) -> bool:
        return isinstance(self.rotation, Fraction)

    @property
    def order(self) -> int | float:
        """Multiplicative order: the reduced denominator, or inf for angles."""
        if self.is_exact:
            return self.rotation.denominator if self.rotation != 0 else 1
        return math.inf

    @property
    def value(self) -> complex:
        return complex(rotation_cos(self.rotation), rotation_sin(self.rotation))

    def as_phase(self) -> Phase:
        return Phase(self.rotation)

    def __str__(self) -> str:
        if self.is_exact:
            q = self.rotation
            return f"root:{q.numerator}/{q.denominator}"
        return f"angle:{format(float(self.rotation) * 2.0 * math.pi, '.12g')}"


ALPHA_ONE = UnitPhase(Fraction(0))
ALPHA_I = UnitPhase(Fraction(1, 4))
ALPHA_GAMMA = UnitPhase(Fraction(1, 3))
ALPHA_OMEGA = UnitPhase(Fraction(1, 6))

_NAMED_ALPHAS = {
    "1": Fraction(0),
    "i": Fraction(1, 4),
    "gamma": Fraction(1, 3),
    "omega": Fraction(1, 6),
}


def make_alpha(spec: str) -> UnitPhase:
    """Parse an alpha spec: ``i``, ``gamma``, ``omega``, ``1``, ``root:k/n``
    or ``angle:<radians>``."""
    s = spec.strip()
    if s in _NAMED_ALPHAS:
        return UnitPhase(_NAMED_ALPHAS[s])
    if s.startswith("root:"):
        body = s[len("root:") :]
        m = re.match(r"^(-?\d+)/(\d+)$", body)
        if not m:
            raise ValueError(f"bad root spec {spec!r}, expected root:k/n")
        k, n = int(m.group(1)), int(m.group(2))
        if n == 0:
            raise ValueError("root denominator must be positive")
        return UnitPhase.from_root(k, n)
    if s.startswith("angle:"):
        body = s[len("angle:") :]
        try:
            theta = float(body)
        except ValueError:
            raise ValueError(f"bad angle spec {spec!r}") from None
        if not math.isfinite(theta):
            raise ValueError("angle must be finite")
        return UnitPhase.from_angle(theta)
    raise ValueError(f"unrecognized alpha spec {spec!r}")


def order_of(alpha: UnitPhase) -> int | float:
    return alpha.order


class ArcBalance(NamedTuple):
    balance: int
    edge_count: int


def arc_balance(graph: MixedGraph, walk: Walk) -> ArcBalance:
    """Forward arcs minus backward arcs along the walk, plus the step count.

    Raises InvalidWalkError when a step is not an edge of the graph.
    """
    verts = walk.vertices
    if any(v < 0 or v >= graph.n for v in verts):
        raise InvalidWalkError(f"walk {verts} leaves the vertex range of n={graph.n}")
    balance = 0
    for a, b in walk.steps():
        code = graph.pair_code(a, b)
        if code is None:
            raise InvalidWalkError(f"walk step ({a}, {b}) is not an edge")
        balance += code
    return ArcBalance(balance, walk.edge_count)


def walk_value_h(graph: MixedGraph, alpha: UnitPhase, walk: Walk) -> Phase:
    """Product of matrix entries along the walk; equals alpha**balance."""
    bal, _ = arc_balance(graph, walk)
    return Phase(alpha.rotation * bal)


def walk_value_g(graph: MixedGraph, alpha: UnitPhase, walk: Walk) -> Phase:
    """The signed walk value: (-1) per edge times the plain walk value."""
    bal, edges = arc_balance(graph, walk)
    rot = alpha.rotation * bal
    if edges % 2:
        rot = rot + _HALF
    return Phase(rot)
