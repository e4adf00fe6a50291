"""Monomial ideals kept by their minimal generators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Tuple

from . import monomials as mono
from .monomials import Monomial

# inclusion-exclusion over generator lcms is used up to this many generators
INCLUSION_EXCLUSION_LIMIT = 12


class NotSaturatedError(ValueError):
    """A generator involves the variable that was supposed to be absent."""


def monomials_of_degree(num_vars: int, d: int) -> Iterator[Monomial]:
    """All exponent vectors of total degree ``d``."""
    if num_vars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(num_vars - 1, d - first):
            yield (first,) + rest


@dataclass(frozen=True)
class MonomialIdeal:
    num_vars: int
    gens: Tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.num_vars:
                raise mono.DimensionError(f"generator {g} is not in {self.num_vars} variables")

    @classmethod
    def from_gens(cls, gens: Iterable[Iterable[int]], num_vars: int | None = None) -> "MonomialIdeal":
        gens = [mono.monomial(g) for g in gens]
        if num_vars is None:
            if not gens:
                raise ValueError("num_vars is required for the zero ideal")
            num_vars = len(gens[0])
        return minimalize(gens, num_vars)

    @classmethod
    def parse(cls, lines: Iterable[str], num_vars: int) -> "MonomialIdeal":
        return minimalize([mono.parse_monomial(s, num_vars) for s in lines], num_vars)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(mono.format_monomial(g) for g in self.gens) + ")"

    def __len__(self) -> int:
        return len(self.gens)

    @property
    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def contains(self, m: Monomial) -> bool:
        if len(m) != self.num_vars:
            raise mono.DimensionError(f"{m} is not in {self.num_vars} variables")
        return mono.in_monomial_ideal(m, self.gens)

    def is_borel_fixed(self):
        if not self.gens:
            return True, None
        return mono.is_borel_fixed(self.gens)

    def degree_part(self, d: int) -> list:
        """Monomials of degree ``d`` in the ideal, ≻-largest first."""
        found = [m for m in monomials_of_degree(self.num_vars, d) if self.contains(m)]
        return sorted(found, key=mono.degrevlex_key, reverse=True)

    def hilbert_function(self, d: int) -> int:
        """Number of degree-``d`` monomials outside the ideal."""
        if d < 0:
            raise ValueError("degree must be non-negative")
        if len(self.gens) <= INCLUSION_EXCLUSION_LIMIT:
            return self._hilbert_inclusion_exclusion(d)
        return self._hilbert_by_counting(d)

    def _hilbert_inclusion_exclusion(self, d: int) -> int:
        n = self.num_vars
        total = comb(d + n - 1, n - 1)
        inside = 0
        for r in range(1, len(self.gens) + 1):
            for subset in itertools.combinations(self.gens, r):
                top = subset[0]
                for g in subset[1:]:
                    top = mono.lcm(top, g)
                rest = d - sum(top)
                if rest >= 0:
                    inside += (-1) ** (r + 1) * comb(rest + n - 1, n - 1)
        return total - inside

    def _hilbert_by_counting(self, d: int) -> int:
        return sum(1 for m in monomials_of_degree(self.num_vars, d) if not self.contains(m))

    def colon_last_var_power(self, a: int) -> "MonomialIdeal":
        """``(I : x_n^a)`` where ``x_n`` is the last variable."""
        if a < 0:
            raise ValueError("colon exponent must be non-negative")
        out = [g[:-1] + (g[-1] - min(a, g[-1]),) for g in self.gens]
        return minimalize(out, self.num_vars)

    def saturate_last_var(self) -> "MonomialIdeal":
        return minimalize([g[:-1] + (0,) for g in self.gens], self.num_vars)

    def restrict_drop_last_var(self) -> "MonomialIdeal":
        """Read an ideal free of the last variable in one variable fewer."""
        bad = [g for g in self.gens if g[-1] > 0]
        if bad:
            raise NotSaturatedError(
                f"generator {mono.format_monomial(bad[0])} involves x{self.num_vars}")
        return MonomialIdeal(self.num_vars - 1, tuple(g[:-1] for g in self.gens))

    def extend_vars(self, extra: int = 1) -> "MonomialIdeal":
        return MonomialIdeal(self.num_vars + extra, tuple(g + (0,) * extra for g in self.gens))

    def f_table(self, max_row: int | None = None):
        from .ftable import f_table
        return f_table(self, max_row)


def minimalize(gens: Iterable[Monomial], num_vars: int) -> MonomialIdeal:
    gens = list(gens)
    for g in gens:
        if len(g) != num_vars:
            raise mono.DimensionError(f"generator {g} is not in {num_vars} variables")
    return MonomialIdeal(num_vars, tuple(mono.minimal_generators(gens)))
