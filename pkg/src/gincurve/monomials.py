"""Exponent vectors, graded reverse lex, elementary moves and Borel closure.

A monomial in ``n`` variables is a plain tuple of ``n`` non-negative ints;
entry ``m`` (0-based) is the exponent of ``x_{m+1}``.  Every public function
that takes a variable index speaks 1-based indices, like the notation
``x1 > x2 > ... > x_{n+1}``.
"""

from __future__ import annotations

import enum
import re
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

Monomial = Tuple[int, ...]

# degrees in scope are far below this; anything larger is treated as overflow
MAX_EXPONENT = 2**31 - 1


class DimensionError(ValueError):
    """Monomials of different lengths were combined."""


class ExponentOverflowError(OverflowError):
    pass


class UndefinedSupportError(ValueError):
    pass


class Order(enum.IntEnum):
    PRECEDES = -1
    EQUALS = 0
    SUCCEEDS = 1


def monomial(exps: Iterable[int]) -> Monomial:
    """Validate and freeze an exponent vector."""
    m = tuple(int(e) for e in exps)
    if len(m) < 2:
        raise DimensionError("an exponent vector needs at least two variables")
    for e in m:
        if e < 0:
            raise ValueError(f"negative exponent in {m}")
        if e > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
    return m


def degree(m: Monomial) -> int:
    return sum(m)


@lru_cache(maxsize=1 << 18)
def degrevlex_key(m: Monomial) -> tuple:
    """Sort key with ``key(a) > key(b)`` exactly when ``a`` succeeds ``b``."""
    return (sum(m), tuple(-e for e in reversed(m)))


def compare_degrevlex(a: Monomial, b: Monomial) -> Order:
    if len(a) != len(b):
        raise DimensionError(f"cannot compare monomials of lengths {len(a)} and {len(b)}")
    ka, kb = degrevlex_key(a), degrevlex_key(b)
    if ka > kb:
        return Order.SUCCEEDS
    if ka < kb:
        return Order.PRECEDES
    return Order.EQUALS


def mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) != len(b):
        raise DimensionError("length mismatch")
    m = tuple(x + y for x, y in zip(a, b))
    if any(e > MAX_EXPONENT for e in m):
        raise ExponentOverflowError("exponent overflow in monomial product")
    return m


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def quotient(b: Monomial, a: Monomial) -> Monomial:
    """``b / a``; caller guarantees ``a`` divides ``b``."""
    return tuple(y - x for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def variable(index: int, num_vars: int) -> Monomial:
    """The monomial ``x_index`` (1-based)."""
    if not 1 <= index <= num_vars:
        raise IndexError(f"variable index {index} outside 1..{num_vars}")
    return tuple(1 if m == index - 1 else 0 for m in range(num_vars))


def elementary_move(j: Monomial, k: int) -> Optional[Monomial]:
    """Apply ``e_k``: move one unit of exponent from ``x_{k+1}`` to ``x_k``.

    Returns ``None`` when ``x_{k+1}`` does not divide the monomial (the
    ``x^J = 0`` convention).
    """
    if not 1 <= k <= len(j) - 1:
        raise IndexError(f"elementary move e_{k} undefined for {len(j)} variables")
    if j[k] == 0:
        return None
    out = list(j)
    out[k - 1] += 1
    out[k] -= 1
    return tuple(out)


def support_extrema(j: Monomial) -> Tuple[int, int]:
    """(min(J), max(J)) as 1-based variable indices."""
    idx = [m + 1 for m, e in enumerate(j) if e > 0]
    if not idx:
        raise UndefinedSupportError("the unit monomial has empty support")
    return idx[0], idx[-1]


def max_index(j: Monomial) -> int:
    return support_extrema(j)[1]


def min_index(j: Monomial) -> int:
    return support_extrema(j)[0]


def in_monomial_ideal(m: Monomial, gens: Iterable[Monomial]) -> bool:
    return any(divides(g, m) for g in gens)


def _check_uniform(gens: Sequence[Monomial]) -> int:
    lengths = {len(g) for g in gens}
    if len(lengths) > 1:
        raise DimensionError(f"mixed monomial lengths {sorted(lengths)}")
    return lengths.pop() if lengths else 0


def minimal_generators(gens: Iterable[Monomial]) -> list:
    """Drop every monomial divisible by another one; sorted by degree, then ≻ descending."""
    uniq = sorted(set(gens), key=lambda g: (sum(g), tuple(reversed(g))))
    _check_uniform(uniq)
    kept: list = []
    for g in uniq:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return sort_monomials(kept)


def sort_monomials(gens: Iterable[Monomial]) -> list:
    """Ascending degree; within a degree the ≻-largest first."""
    return sorted(gens, key=lambda g: (sum(g), [-x for x in degrevlex_key(g)[1]]))


def is_borel_fixed(gens: Sequence[Monomial]) -> Tuple[bool, Optional[Tuple[Monomial, int]]]:
    """Check closure under every elementary move.

    Returns ``(True, None)`` or ``(False, (J, k))`` for the first generator ``J``
    and move ``e_k`` whose image leaves the ideal.
    """
    gens = list(gens)
    n = _check_uniform(gens)
    for g in sort_monomials(gens):
        for k in range(1, n):
            moved = elementary_move(g, k)
            if moved is not None and not in_monomial_ideal(moved, gens):
                return False, (g, k)
    return True, None


def borel_closure(gens: Iterable[Monomial]) -> list:
    """Minimal generators of the smallest Borel-fixed ideal containing ``gens``."""
    current = minimal_generators(gens)
    n = _check_uniform(current)
    while True:
        extra = []
        for g in current:
            for k in range(1, n):
                moved = elementary_move(g, k)
                if moved is not None and not in_monomial_ideal(moved, current):
                    extra.append(moved)
        if not extra:
            return current
        current = minimal_generators(current + extra)


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, num_vars: int) -> Monomial:
    """Parse ``x1^3*x2*x3^2`` (or ``1``) into an exponent vector."""
    text = text.strip()
    exps = [0] * num_vars
    if text == "1":
        return monomial(exps)
    if not text:
        raise ValueError("empty monomial")
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if m is None:
            raise ValueError(f"bad monomial factor {factor!r}")
        idx = int(m.group(1))
        if not 1 <= idx <= num_vars:
            raise ValueError(f"variable x{idx} outside x1..x{num_vars}")
        e = int(m.group(2)) if m.group(2) is not None else 1
        exps[idx - 1] += e
    return monomial(exps)


def format_monomial(m: Monomial, names: Optional[Sequence[str]] = None) -> str:
    if names is None:
        names = [f"x{i + 1}" for i in range(len(m))]
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"
