"""The invariants ``s_k``, ``mu_i(k)`` and ``lambda_i`` of an f-table, and connectedness checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .ftable import FTable


class UndefinedInvariantError(ValueError):
    pass


class MalformedInvariantsError(ValueError):
    pass


def compute_s(table: FTable, k: int) -> int:
    """``s_k = min{i : f(i, 0) <= k}``."""
    # past max_row, f(i, 0) is constant
    for i in range(table.max_row + 1):
        if table(i, 0) <= k:
            return i
    raise UndefinedInvariantError(f"no f(i, 0) <= {k}: the ideal has no x1-power at level {k}")


def compute_mu(table: FTable, k: int) -> List[int]:
    """``(mu_0(k), ..., mu_{s_k - 1}(k))`` with ``mu_i(k) = min{j : f(i, j) <= k}``."""
    s = compute_s(table, k)
    out = []
    for i in range(s):
        for j in range(max(table.max_row - i, 0) + 2):
            if table(i, j) <= k:
                out.append(j)
                break
        else:
            raise UndefinedInvariantError(f"mu_{i}({k}) is undefined: no x2-power reaches column {i}")
    return out


def stabilization(table: FTable) -> int:
    return max(table.finite_values(), default=0)


def lambda_invariants(table: FTable) -> Tuple[List[int], int]:
    """The stable invariants and the level ``K`` from which nothing changes."""
    top = stabilization(table)
    return compute_mu(table, top), top


@dataclass
class InvariantTable:
    s: Dict[int, int]
    mu: Dict[int, List[int]]
    lam: List[int]
    stabilization: int
    first_defined: int = 0

    def to_json(self) -> dict:
        return {
            "s": {str(k): v for k, v in self.s.items()},
            "mu": {str(k): list(v) for k, v in self.mu.items()},
            "lambda": list(self.lam),
            "stabilization": self.stabilization,
        }

    def to_text(self) -> str:
        lines = []
        for k, mus in self.mu.items():
            cells = "  ".join(f"mu_{i}({k}) = {v}" for i, v in enumerate(mus))
            lines.append(f"k={k}  s_{k} = {self.s[k]}  {cells}")
        lines.append(f"mu_i(k) = mu_i({self.stabilization}) for k >= {self.stabilization}")
        lines.append("lambda = (" + ", ".join(str(v) for v in self.lam) + ")")
        return "\n".join(lines) + "\n"


def invariant_table(table: FTable) -> InvariantTable:
    """All ``s_k`` and ``mu(k)`` for ``k = 0..K``; levels where ``s_k`` is undefined are skipped."""
    top = stabilization(table)
    s: Dict[int, int] = {}
    mu: Dict[int, List[int]] = {}
    first = None
    for k in range(top + 1):
        try:
            s[k] = compute_s(table, k)
        except UndefinedInvariantError:
            continue
        mu[k] = compute_mu(table, k)
        if first is None:
            first = k
    if first is None:
        raise UndefinedInvariantError("s_k is undefined at every level")
    return InvariantTable(s, mu, mu[top], top, first)


@dataclass
class ConnectednessReport:
    passed: bool
    violations: List[dict] = field(default_factory=list)
    first_defined: int = 0

    def to_json(self) -> dict:
        return {"passed": self.passed, "violations": self.violations, "first_defined": self.first_defined}


def check_connected(table: FTable) -> ConnectednessReport:
    inv = invariant_table(table)
    s0 = inv.s.get(0)
    violations = []
    for k, mus in inv.mu.items():
        for i in range(len(mus) - 1):
            a, b = mus[i], mus[i + 1]
            if not (b + 2 >= a >= b + 1):
                violations.append({"kind": "gap", "k": k, "i": i, "mu_i": a, "mu_next": b})
        sk = inv.s[k]
        if s0 is not None and sk < s0 and sk >= 1 and mus[sk - 1] > 2:
            violations.append({"kind": "tail", "k": k, "i": sk - 1, "mu_i": mus[sk - 1]})
    return ConnectednessReport(not violations, violations, inv.first_defined)


def _check_decreasing(lam: Sequence[int]):
    if any(v <= 0 for v in lam) or any(a <= b for a, b in zip(lam, lam[1:])):
        raise MalformedInvariantsError(f"invariants {tuple(lam)} are not strictly decreasing positive integers")


def check_gruson_peskine(lam: Sequence[int]) -> Tuple[bool, Optional[int]]:
    """``lambda_{i+1} + 2 >= lambda_i >= lambda_{i+1} + 1``; returns the first failing ``i``."""
    _check_decreasing(lam)
    for i in range(len(lam) - 1):
        if not (lam[i + 1] + 2 >= lam[i] >= lam[i + 1] + 1):
            return False, i
    return True, None


def ci_pattern(lam: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Complete-intersection type ``(k, d/k)`` when ``lambda_i = lambda_0 - 2i`` throughout."""
    _check_decreasing(lam)
    k = len(lam)
    if all(v == lam[0] - 2 * i for i, v in enumerate(lam)):
        return k, lam[0] - k + 1
    return None


def ci_prefix_length(lam: Sequence[int]) -> int:
    """Largest ``k`` with ``lambda_{s-i} = lambda_{s-1} + 2(i-1)`` for ``1 <= i <= k``."""
    _check_decreasing(lam)
    s = len(lam)
    k = 0
    while k < s and lam[s - 1 - k] == lam[s - 1] + 2 * k:
        k += 1
    return k


def shape_exponents(table: FTable) -> List[int]:
    """Read ``lambda`` straight off the saturation ``(x1^s, x1^{s-1} x2^{lambda_{s-1}}, ..., x2^{lambda_0})``."""
    sat = table.to_ideal().saturate_last_var()
    gens = {(a, b) for a, b, _ in sat.gens}
    s = min((a for a, b in gens if b == 0), default=None)
    if s is None:
        raise UndefinedInvariantError("saturation has no pure x1-power")
    lam = []
    for i in range(s):
        below = [b for a, b in gens if a <= i]
        if not below:
            raise UndefinedInvariantError(f"column {i} of the saturation never closes")
        lam.append(min(below))
    return lam
