"""Syzygies of Borel-fixed ideals and the necessary conditions on the gin of a space curve.

Each check returns a :class:`RuleRecord`; :func:`admissibility` runs them all
in a fixed order.  Rule identifiers are part of the JSON output and never change.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from . import monomials as mono
from .ftable import INF, FTable
from .ideals import MonomialIdeal
from .invariants import (UndefinedInvariantError, check_connected, ci_prefix_length,
                         invariant_table)
from .monomials import Monomial

RULE_IDS = ("borel", "mu-decrease", "connected", "strano", "tail", "ci-restriction")

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"


class NotBorelFixedError(ValueError):
    pass


class MalformedTableError(ValueError):
    pass


@dataclass(frozen=True)
class SyzygyGenerator:
    """The relation ``x_i * x^{J_j} = x^L * x^{J_l}`` (indices into the generator list)."""

    i: int
    j: int
    L: Monomial
    l: int
    degree: int

    def format(self, gens) -> str:
        return (f"x{self.i} (x) {mono.format_monomial(gens[self.j])} - "
                f"{mono.format_monomial(self.L)} (x) {mono.format_monomial(gens[self.l])}")


def _require_borel(ideal: MonomialIdeal):
    ok, witness = ideal.is_borel_fixed()
    if not ok:
        g, k = witness
        raise NotBorelFixedError(f"e_{k}({mono.format_monomial(g)}) is not in the ideal")


def canonical_divisor(m: Monomial, gens) -> int:
    """Index of the generator ``u | m`` with ``max(u) <= min(m / u)``.

    For a Borel-fixed ideal exactly one generator qualifies; if several did,
    the ≻-largest is taken.
    """
    best = None
    for idx, g in enumerate(gens):
        if not mono.divides(g, m):
            continue
        rest = mono.quotient(m, g)
        if not any(rest):
            continue
        if mono.max_index(g) <= mono.min_index(rest):
            if best is None or mono.degrevlex_key(g) > mono.degrevlex_key(gens[best]):
                best = idx
    if best is None:
        raise NotBorelFixedError(f"no canonical divisor for {mono.format_monomial(m)}")
    return best


def ek_syzygies(ideal: MonomialIdeal) -> List[SyzygyGenerator]:
    """One relation per generator ``x^{J_j}`` and per ``1 <= i < max(J_j)``."""
    _require_borel(ideal)
    gens = ideal.gens
    n = ideal.num_vars
    out = []
    for j, g in enumerate(gens):
        if not any(g):
            continue
        for i in range(1, mono.max_index(g)):
            m = mono.mul(mono.variable(i, n), g)
            l = canonical_divisor(m, gens)
            out.append(SyzygyGenerator(i, j, mono.quotient(m, gens[l]), l, sum(g) + 1))
    return out


def first_syzygy_degrees(ideal: MonomialIdeal) -> List[int]:
    return sorted(s.degree for s in ek_syzygies(ideal))


@dataclass(frozen=True)
class SporadicZero:
    i: int
    j: int
    k: int
    generator: Monomial
    colon_level: int

    @property
    def degree(self) -> int:
        return self.i + self.j + self.k


def sporadic_zeros(table: FTable) -> List[SporadicZero]:
    """``x1^i x2^j x3^k`` for ``k < f(i, j)`` under each generator with positive x3-exponent."""
    out = []
    for a, b, c in table.to_ideal().gens:
        if c == 0:
            continue
        for k in range(c):
            out.append(SporadicZero(a, b, k, (a, b, c), c - k))
    out.sort(key=lambda z: (z.degree, -z.i, z.k))
    return out


@dataclass
class RuleRecord:
    rule: str
    status: str
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"rule": self.rule, "status": self.status, "witness": self.witness}


def check_strano(table: FTable) -> RuleRecord:
    """Each sporadic zero of degree ``m`` at colon level ``a`` needs the colon ideal to have a
    syzygy in degree ``<= m + 2``.

    Only two situations rule that out arithmetically: at most one generator of
    degree ``<= m + 1``, or exactly two whose degrees sum past ``m + 2`` (their
    only syzygy is the Koszul one).
    """
    zeros = sporadic_zeros(table)
    if not zeros:
        return RuleRecord("strano", VACUOUS)
    checked = []
    for z in zeros:
        m, a = z.degree, z.colon_level
        colon = table.colon(a).to_ideal()
        small = sorted(sum(g) for g in colon.gens if sum(g) <= m + 1)
        record = {"sporadic_zero": [z.i, z.j, z.k], "degree": m, "colon_level": a,
                  "small_generator_degrees": small}
        if len(small) <= 1 or (len(small) == 2 and small[0] + small[1] > m + 2):
            return RuleRecord("strano", FAIL, record)
        checked.append(record)
    return RuleRecord("strano", PASS, {"checked": len(checked)})


def check_tail_rule(table: FTable) -> RuleRecord:
    """If ``s < s_0`` and ``lambda_{s-1} = 2`` then ``f(s-2, 3) <= f(s, 0)``."""
    inv = invariant_table(table)
    lam = inv.lam
    s = len(lam)
    s0 = inv.s.get(0)
    if s0 is None or not (s < s0) or not lam or lam[-1] != 2 or s < 2:
        return RuleRecord("tail", VACUOUS, {"s": s, "s0": s0, "lambda_last": lam[-1] if lam else None})
    left, right = table(s - 2, 3), table(s, 0)
    witness = {"s": s, "s0": s0, "f(s-2,3)": _json_value(left), "f(s,0)": _json_value(right)}
    # INF compares above every integer
    if left > right:
        return RuleRecord("tail", FAIL, witness)
    return RuleRecord("tail", PASS, witness)


def allowed_sporadic_columns(lam) -> Optional[List[int]]:
    """Columns that may carry sporadic zeros, or ``None`` when unrestricted."""
    k = ci_prefix_length(lam)
    if k < 3:
        return None
    return list(range(len(lam) - k))


def check_ci_restriction(table: FTable) -> RuleRecord:
    lam = invariant_table(table).lam
    k = ci_prefix_length(lam)
    s = len(lam)
    if k < 3:
        return RuleRecord("ci-restriction", VACUOUS, {"ci_prefix_length": k})
    for z in sporadic_zeros(table):
        if z.i >= s - k:
            return RuleRecord("ci-restriction", FAIL,
                              {"ci_prefix_length": k, "column": z.i, "bound": s - k,
                               "sporadic_zero": [z.i, z.j, z.k]})
    return RuleRecord("ci-restriction", PASS,
                      {"ci_prefix_length": k, "allowed_columns": list(range(s - k))})


def check_newgen_bound(ideal: MonomialIdeal, n: int) -> RuleRecord:
    """Every degree-``n+1`` minimal generator must precede some ``x_i x^J`` with ``|J| = n``, ``i < max(J)``."""
    num = ideal.num_vars
    candidates = []
    for g in ideal.gens:
        if sum(g) == n and any(g):
            for i in range(1, mono.max_index(g)):
                candidates.append(mono.mul(mono.variable(i, num), g))
    tops = [g for g in ideal.gens if sum(g) == n + 1]
    if not tops:
        return RuleRecord("newgen", VACUOUS)
    bad = [g for g in tops
           if not any(mono.compare_degrevlex(g, c) == mono.Order.PRECEDES for c in candidates)]
    if bad:
        return RuleRecord("newgen", FAIL, {"offending": [mono.format_monomial(g) for g in bad]})
    return RuleRecord("newgen", PASS)


def _json_value(v):
    return None if v == INF else int(v)


@dataclass
class AdmissibilityReport:
    records: List[RuleRecord]

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    @property
    def failing(self) -> List[str]:
        return [r.rule for r in self.records if r.status == FAIL]

    def record(self, rule: str) -> RuleRecord:
        return next(r for r in self.records if r.rule == rule)

    def to_json(self) -> dict:
        return {"overall": PASS if self.passed else FAIL,
                "rules": [r.to_json() for r in self.records]}

    def to_text(self) -> str:
        lines = []
        for r in self.records:
            line = f"{r.rule:<15} {r.status}"
            if r.status == FAIL:
                line += "  " + ", ".join(f"{k}={v}" for k, v in r.witness.items())
            lines.append(line)
        lines.append(f"overall: {PASS if self.passed else FAIL}")
        return "\n".join(lines) + "\n"


def _validate(table: FTable):
    bad = table.monotonicity_violations()
    if bad:
        i, j = bad[0]
        raise MalformedTableError(f"f({i},{j}) = {table(i, j)} is exceeded by the value at one of its multiples")
    try:
        invariant_table(table)
    except UndefinedInvariantError as exc:
        raise MalformedTableError(str(exc)) from exc


def admissibility(table: FTable, tail_rule: bool = True) -> AdmissibilityReport:
    _validate(table)
    records = []

    ok, witness = table.to_ideal().is_borel_fixed()
    if ok:
        records.append(RuleRecord("borel", PASS))
    else:
        g, k = witness
        records.append(RuleRecord("borel", FAIL, {"generator": mono.format_monomial(g), "move": k}))

    inv = invariant_table(table)
    bad = [(k, i) for k, mus in inv.mu.items() for i in range(len(mus) - 1) if mus[i] <= mus[i + 1]]
    if bad:
        k, i = bad[0]
        records.append(RuleRecord("mu-decrease", FAIL, {"k": k, "i": i, "mu": inv.mu[k]}))
    else:
        records.append(RuleRecord("mu-decrease", PASS))

    conn = check_connected(table)
    records.append(RuleRecord("connected", PASS if conn.passed else FAIL,
                              {"violations": conn.violations} if conn.violations else {}))
    records.append(check_strano(table))
    if tail_rule:
        records.append(check_tail_rule(table))
    else:
        records.append(RuleRecord("tail", VACUOUS, {"disabled": True}))
    records.append(check_ci_restriction(table))
    return AdmissibilityReport(records)
