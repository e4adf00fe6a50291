"""The shipped corpus of curves, point sets and monomial diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, Optional, Tuple

from .fileformat import Ideal, format_ideal, parse_ideal
from .generic import ideal_of_points, random_points
from .polynomials import DEFAULT_PRIME, Ring

POINT_COUNTS = range(3, 11)

# lambda of n points with the generic Hilbert function min(n, binom(d + 2, 2))
GENERIC_POINTS_LAMBDA = {
    3: (2, 1), 4: (3, 1), 5: (3, 2), 6: (3, 2, 1),
    7: (4, 2, 1), 8: (4, 3, 1), 9: (4, 3, 2), 10: (4, 3, 2, 1),
}


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str  # "curve", "points" or "diagram"
    source: str
    expected_gin: Optional[Tuple[str, ...]]
    expected_lambda: Optional[Tuple[int, ...]]
    notes: str

    def ideal(self) -> Ideal:
        return parse_ideal(self.source)


def _data(name: str) -> str:
    return resources.files("gincurve").joinpath("data", name + ".ideal").read_text(encoding="utf-8")


def staircase(lam) -> Tuple[str, ...]:
    """Generators ``x1^s, x1^i x2^lambda_i`` of the saturated shape with invariants ``lam``."""
    gens = [f"x1^{len(lam)}" if len(lam) > 1 else "x1"]
    for i, v in reversed(list(enumerate(lam))):
        parts = ([f"x1^{i}" if i > 1 else "x1"] if i else []) + ([f"x2^{v}" if v > 1 else "x2"])
        gens.append("*".join(parts))
    return tuple(gens)


_CURVES = [
    ("twisted-cubic", ("x1^2", "x1*x2", "x2^2"), (2, 1),
     "gin forced: the only Borel-fixed ideal with the Hilbert function 3d + 1 generated in degree 2"),
    ("rational-quartic", ("x1^2", "x1*x2^2", "x2^3", "x1*x2*x3"), (3, 1),
     "engine result, checked against the echelon-form initial ideal and the Hilbert function 4d + 1"),
    ("ci-2-2", ("x1^2", "x1*x2", "x2^3"), (3, 1),
     "lambda follows the complete-intersection pattern of type (2, 2); no sporadic zeros"),
    ("ci-2-3", ("x1^2", "x1*x2^2", "x2^4"), (4, 2),
     "lambda follows the complete-intersection pattern of type (2, 3); no sporadic zeros"),
]

_DIAGRAMS = [
    ("connected-example", (4, 2, 1), "worked example with connected invariants at every level"),
    ("disconnected", (4, 2), "mu(2) = (5, 2, 1) breaks connectedness at i = 0"),
    ("disconnected-colon", (4, 2), "colon of 'disconnected' by x3^2"),
    ("strano-obstructed", (5, 3, 2), "connected, yet the sporadic zero x1^3 fails the syzygy test"),
    ("strano-colon", (5, 3, 2), "colon of 'strano-obstructed' by x3"),
    ("ci-tail", (6, 5, 3, 1), "last three invariants in arithmetic progression; no sporadic zeros"),
    ("ci-tail-sporadic", (6, 5, 3, 1), "as 'ci-tail' with a sporadic zero in column 0, the only one allowed"),
]


def points_fixture(count: int, seed: Optional[int] = None, p: int = DEFAULT_PRIME) -> Fixture:
    seed = count if seed is None else seed
    ring = Ring(3, p)
    ideal = ideal_of_points(random_points(count, seed, p), ring)
    lam = GENERIC_POINTS_LAMBDA.get(count)
    return Fixture(
        f"points-{count}", "points", format_ideal(ideal),
        staircase(lam) if lam else None, lam,
        f"{count} random points of P^2 (seed {seed}); lambda from the generic Hilbert function",
    )


def corpus() -> List[Fixture]:
    out = []
    for name, gin_gens, lam, notes in _CURVES:
        out.append(Fixture(name, "curve", _data(name), gin_gens, lam, notes))
    for n in POINT_COUNTS:
        out.append(points_fixture(n))
    for name, lam, notes in _DIAGRAMS:
        out.append(Fixture(name, "diagram", _data(name), None, lam, notes))
    return out


def by_name() -> Dict[str, Fixture]:
    return {f.name: f for f in corpus()}


def fixture(name: str) -> Fixture:
    table = by_name()
    if name not in table:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(table)}")
    return table[name]
