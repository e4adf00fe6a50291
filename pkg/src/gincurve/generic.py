"""Generic initial ideals by random change of coordinates."""

from __future__ import annotations

import logging
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from . import linalg
from . import monomials as mono
from .groebner import buchberger, initial_ideal
from .ideals import MonomialIdeal, monomials_of_degree
from .polynomials import (Polynomial, PolynomialIdeal, Ring, is_linear, linear_form,
                          substitute_linear)

log = logging.getLogger(__name__)


class GinWarning(UserWarning):
    pass


class DegenerateInputError(ValueError):
    pass


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed) % 2**64)


def random_coordinate_change(seed: int, n: int, p: int) -> np.ndarray:
    """Dense invertible ``n x n`` matrix over F_p, a pure function of ``seed``."""
    rng = _rng(seed)
    while True:
        m = rng.integers(0, p, size=(n, n), dtype=np.int64)
        if linalg.is_invertible(m, p):
            return m


def apply_change(ideal: PolynomialIdeal, matrix) -> PolynomialIdeal:
    """Substitute ``x_i -> sum_k M[i, k] x_k`` in every generator."""
    ring = ideal.ring
    matrix = np.asarray(matrix, dtype=np.int64) % ring.p
    if matrix.shape != (ring.num_vars, ring.num_vars):
        raise ValueError(f"matrix shape {matrix.shape} does not match {ring.num_vars} variables")
    if not linalg.is_invertible(matrix, ring.p):
        raise ValueError("coordinate change must be invertible")
    forms = [linear_form(ring, row) for row in matrix.tolist()]
    return PolynomialIdeal(ring, tuple(substitute_linear(g, forms, ring) for g in ideal.gens))


def compare_monomial_ideals(a: MonomialIdeal, b: MonomialIdeal) -> int:
    """Compare degree by degree through the ≻-sorted degree parts; 1 means ``a`` is larger.

    Among initial ideals with one Hilbert function this is the order in which
    the generic initial ideal is the maximum.
    """
    if a == b:
        return 0
    top = max(a.max_degree, b.max_degree)
    for d in range(top + 1):
        pa = [mono.degrevlex_key(m) for m in a.degree_part(d)]
        pb = [mono.degrevlex_key(m) for m in b.degree_part(d)]
        if pa != pb:
            return 1 if pa > pb else -1
    return 0


@dataclass
class GinReport:
    result: MonomialIdeal
    trials: int
    agreements: int
    seeds: List[int]
    prime: int
    borel_fixed: bool = True
    warnings: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "result": [mono.format_monomial(g) for g in self.result.gens],
            "num_vars": self.result.num_vars,
            "trials": self.trials,
            "agreements": self.agreements,
            "seeds": [int(s) for s in self.seeds],
            "prime": self.prime,
            "borel_fixed": self.borel_fixed,
            "warnings": list(self.warnings),
        }

    def to_text(self) -> str:
        lines = [
            f"gin: {self.result}",
            f"prime: {self.prime}",
            f"trials: {self.trials}",
            f"agreements: {self.agreements}",
            "seeds: " + " ".join(str(s) for s in self.seeds),
            f"borel-fixed: {'yes' if self.borel_fixed else 'no'}",
        ]
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines) + "\n"


def trial_seeds(seed: int, trials: int) -> List[int]:
    state = np.random.SeedSequence(int(seed) % 2**64).generate_state(trials, dtype=np.uint64)
    return [int(s) for s in state]


def _trial(ideal: PolynomialIdeal, seed: int) -> MonomialIdeal:
    m = random_coordinate_change(seed, ideal.num_vars, ideal.ring.p)
    return initial_ideal(apply_change(ideal, m))


def gin(ideal: PolynomialIdeal, trials: int = 3, seed: int = 0, parallel: bool = False) -> GinReport:
    """Largest initial ideal over ``trials`` random coordinate changes."""
    if trials < 1:
        raise ValueError("need at least one trial")
    seeds = trial_seeds(seed, trials)
    if parallel and trials > 1:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_trial, [ideal] * trials, seeds))
    else:
        results = [_trial(ideal, s) for s in seeds]

    best = results[0]
    for r in results[1:]:
        if compare_monomial_ideals(r, best) > 0:
            best = r
    agreements = sum(1 for r in results if r == best)
    borel, witness = best.is_borel_fixed()
    notes = []
    if not borel:
        g, k = witness
        notes.append(f"result is not Borel-fixed: e_{k}({mono.format_monomial(g)}) leaves the ideal")
    if agreements < trials:
        notes.append(f"only {agreements} of {trials} trials agree")
    for note in notes:
        warnings.warn(note, GinWarning, stacklevel=2)
        log.warning(note)
    return GinReport(best, trials, agreements, seeds, ideal.ring.p, borel, notes)


def generic_hyperplane_section(ideal: PolynomialIdeal, seed: int) -> PolynomialIdeal:
    """Restrict to a random hyperplane, solving it for the last variable."""
    ring = ideal.ring
    n = ring.num_vars
    if n < 3:
        raise ValueError("hyperplane sections need at least three variables")
    for g in ideal.gens:
        if is_linear(g) and g.terms.get(mono.variable(n, n)):
            raise DegenerateInputError(
                f"generator {g} is a hyperplane through the eliminated coordinate")
    rng = _rng(seed)
    p = ring.p
    while True:
        h = rng.integers(0, p, size=n, dtype=np.int64)
        if h[-1] % p:
            break
    inv = pow(int(h[-1]), -1, p)
    target = ring.drop_last()
    forms = [target.var(i + 1) for i in range(n - 1)]
    forms.append(linear_form(target, [(-int(c) * inv) % p for c in h[:-1]]))
    gens = [substitute_linear(g, forms, target) for g in ideal.gens]
    return PolynomialIdeal(target, tuple(g for g in gens if g))


def _change_sending_to_last(h: Polynomial, seed: int) -> Tuple[np.ndarray, np.ndarray]:
    """Matrices ``(A, B)`` with ``A B = 1`` and ``h(A x) = x_n``."""
    ring = h.ring
    n, p = ring.num_vars, ring.p
    coeffs = [h.terms.get(mono.variable(i + 1, n), 0) for i in range(n)]
    rng = _rng(seed)
    while True:
        b = rng.integers(0, p, size=(n, n), dtype=np.int64)
        b[-1] = coeffs
        if linalg.is_invertible(b, p):
            return linalg.inverse(b, p), b


def colon_by_form_power(ideal: PolynomialIdeal, h: Polynomial, a: int, seed: int = 0) -> PolynomialIdeal:
    """``(I : h^a)`` for a linear form ``h``.

    Coordinates are changed so that ``h`` becomes the last variable; there, a
    reverse-lex Groebner basis with every element divided by the largest
    power of ``x_n`` it admits generates ``(I : x_n)``.  The colon is taken
    ``a`` times and the result moved back.
    """
    if a < 0:
        raise ValueError("colon exponent must be non-negative")
    if not h:
        raise ValueError("cannot take a colon by the zero form")
    if not is_linear(h):
        raise ValueError("colon_by_form_power needs a linear form")
    if a == 0:
        return ideal
    fwd, back = _change_sending_to_last(h, seed)
    current = apply_change(ideal, fwd)
    ring = ideal.ring
    last = mono.variable(ring.num_vars, ring.num_vars)
    for _ in range(a):
        gb = buchberger(current)
        quotients = []
        for g in gb:
            quotients.append(g.divide_by_monomial(last) if g.common_power_of_last() else g)
        current = PolynomialIdeal(ring, tuple(quotients))
    out = apply_change(current, back)
    return PolynomialIdeal(ring, tuple(buchberger(out)))


def ideal_of_points(points: Sequence[Sequence[int]], ring: Ring) -> PolynomialIdeal:
    """All forms of degree ``<= r + 1`` vanishing on the given projective points.

    ``r`` is the first degree where the points impose independent conditions,
    so ``r + 1`` is the regularity and these forms generate the ideal.
    """
    p = ring.p
    pts = np.asarray(points, dtype=np.int64) % p
    count = len(pts)
    gens: List[Polynomial] = []
    d = 0
    reached = None
    while True:
        d += 1
        mons = list(monomials_of_degree(ring.num_vars, d))
        ev = np.ones((count, len(mons)), dtype=np.int64)
        for c, m in enumerate(mons):
            for v, e in enumerate(m):
                if e:
                    ev[:, c] = ev[:, c] * pow_mod_vec(pts[:, v], e, p) % p
        kernel = linalg.nullspace(ev, p)
        for row in kernel:
            gens.append(Polynomial(ring, {m: int(c) for m, c in zip(mons, row) if c}))
        if reached is None and linalg.rank(ev, p) == count:
            reached = d
        if reached is not None and d == reached + 1:
            break
    return PolynomialIdeal(ring, tuple(gens))


def pow_mod_vec(v: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(v)
    for _ in range(e):
        out = out * v % p
    return out


def random_points(count: int, seed: int, p: int, dim: int = 2) -> List[List[int]]:
    rng = _rng(seed)
    pts = rng.integers(0, p, size=(count, dim + 1), dtype=np.int64)
    for row in pts:
        while not row.any():
            row[:] = rng.integers(0, p, size=dim + 1, dtype=np.int64)
    return pts.tolist()
