"""Sparse multivariate polynomials over a prime field.

The modulus lives in a :class:`Ring` value that every polynomial carries;
there is no module-level field state.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import monomials as mono
from .monomials import Monomial, degrevlex_key

DEFAULT_PRIME = 32003
MAX_PRIME = 2**31 - 1


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else (f"column {column}: " if column else "")
        super().__init__(where + message)


class NonHomogeneousError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Ring:
    """``F_p[x_1, ..., x_n]`` with graded reverse lex."""

    num_vars: int
    p: int = DEFAULT_PRIME
    names: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.num_vars < 2:
            raise ValueError("need at least two variables")
        if not is_prime(self.p) or self.p > MAX_PRIME:
            raise ValueError(f"modulus {self.p} is not a prime below 2^31")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i + 1}" for i in range(self.num_vars)))
        if len(self.names) != self.num_vars or len(set(self.names)) != self.num_vars:
            raise ValueError("variable names must be distinct, one per variable")

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.num_vars: 1})

    def var(self, index: int) -> "Polynomial":
        """``x_index`` with a 1-based index."""
        return Polynomial(self, {mono.variable(index, self.num_vars): 1})

    def monomial(self, m: Monomial, c: int = 1) -> "Polynomial":
        return Polynomial(self, {tuple(m): c})

    def drop_last(self) -> "Ring":
        return Ring(self.num_vars - 1, self.p, self.names[:-1])

    def parse(self, text: str, line: int = 0) -> "Polynomial":
        return parse_polynomial(text, self, line)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to residues in ``[1, p)``."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: Ring, terms: Dict[Monomial, int]):
        p = ring.p
        self.ring = ring
        self.terms = {m: c % p for m, c in terms.items() if c % p}
        self._lead = None

    # --- structure -----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self) -> str:
        return format_polynomial(self)

    @property
    def lead(self) -> Monomial:
        """Leading monomial under graded reverse lex."""
        if self._lead is None:
            if not self.terms:
                raise ValueError("the zero polynomial has no leading monomial")
            self._lead = max(self.terms, key=degrevlex_key)
        return self._lead

    @property
    def lead_coeff(self) -> int:
        return self.terms[self.lead]

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)

    # --- arithmetic ----------------------------------------------------
    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return Polynomial(self.ring, out)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        p = self.ring.p
        out: Dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int) -> "Polynomial":
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def shift(self, m: Monomial, c: int = 1) -> "Polynomial":
        """``c * x^m * self``."""
        return Polynomial(self.ring, {tuple(a + b for a, b in zip(k, m)): v * c
                                      for k, v in self.terms.items()})

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(pow(self.lead_coeff, -1, self.ring.p))

    def divide_by_monomial(self, m: Monomial) -> "Polynomial":
        """Exact division by a monomial dividing every term."""
        out = {}
        for k, v in self.terms.items():
            if not mono.divides(m, k):
                raise ValueError(f"{mono.format_monomial(m)} does not divide every term")
            out[mono.quotient(k, m)] = v
        return Polynomial(self.ring, out)

    def common_power_of_last(self) -> int:
        """Largest ``e`` with ``x_n^e`` dividing every term."""
        return min((m[-1] for m in self.terms), default=0)

    def in_ring(self, ring: Ring) -> "Polynomial":
        if ring.num_vars != self.ring.num_vars:
            raise mono.DimensionError("variable counts differ")
        return Polynomial(ring, self.terms)


def linear_form(ring: Ring, coeffs: Sequence[int]) -> Polynomial:
    if len(coeffs) != ring.num_vars:
        raise mono.DimensionError("one coefficient per variable expected")
    return Polynomial(ring, {mono.variable(i + 1, ring.num_vars): int(c) for i, c in enumerate(coeffs)})


def is_linear(f: Polynomial) -> bool:
    return bool(f) and all(sum(m) == 1 for m in f.terms)


def substitute_linear(f: Polynomial, forms: Sequence[Polynomial], target: Ring) -> Polynomial:
    """Replace ``x_i`` by ``forms[i]`` (polynomials in ``target``)."""
    cache: Dict[Tuple[int, int], Polynomial] = {}

    def power(i: int, e: int) -> Polynomial:
        if (i, e) not in cache:
            cache[(i, e)] = target.one() if e == 0 else power(i, e - 1) * forms[i]
        return cache[(i, e)]

    out: Dict[Monomial, int] = {}
    p = target.p
    for m, c in f.terms.items():
        term = target.monomial((0,) * target.num_vars, c)
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        for k, v in term.terms.items():
            out[k] = (out.get(k, 0) + v) % p
    return Polynomial(target, out)


# --- text format -------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\^)|(\*)|([+-])|(\S))")


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        col = m.start(m.lastindex) + 1
        kind = ("int", "name", "pow", "mul", "sign", "bad")[m.lastindex - 1]
        yield kind, m.group(m.lastindex), col
        pos = m.end()
    yield "end", "", len(text.rstrip()) + 1


def parse_polynomial(text: str, ring: Ring, line: int = 0) -> Polynomial:
    """Parse ``3*x1^2 - x2*x3 + 5`` style text; coefficients are reduced mod ``p``."""
    index = {name: i for i, name in enumerate(ring.names)}
    toks = list(_tokens(text))
    pos = 0

    def peek():
        return toks[pos]

    def take(kind):
        nonlocal pos
        tok = toks[pos]
        if tok[0] != kind:
            what = "end of line" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", line, tok[2])
        pos += 1
        return tok

    def exponent():
        tok = take("int")
        e = int(tok[1])
        if e > mono.MAX_EXPONENT:
            raise mono.ExponentOverflowError(
                f"line {line}, column {tok[2]}: exponent {e} exceeds {mono.MAX_EXPONENT}")
        return e

    def factor(exps):
        tok = take("name")
        if tok[1] not in index:
            raise ParseError(f"unknown variable {tok[1]!r}", line, tok[2])
        e = 1
        if peek()[0] == "pow":
            take("pow")
            e = exponent()
        exps[index[tok[1]]] += e

    out: Dict[Monomial, int] = {}
    if peek()[0] == "end":
        raise ParseError("empty polynomial", line, peek()[2])
    first = True
    while peek()[0] != "end":
        sign = 1
        if peek()[0] == "sign":
            sign = -1 if take("sign")[1] == "-" else 1
        elif not first:
            tok = peek()
            raise ParseError(f"expected '+' or '-', found {tok[1]!r}", line, tok[2])
        first = False
        coeff = 1
        exps = [0] * ring.num_vars
        if peek()[0] == "int":
            coeff = int(take("int")[1])
            if peek()[0] == "mul":
                take("mul")
                factor(exps)
        else:
            factor(exps)
        while peek()[0] == "mul":
            take("mul")
            factor(exps)
        if peek()[0] not in ("sign", "end"):
            tok = peek()
            raise ParseError(f"unexpected {tok[1]!r}", line, tok[2])
        m = tuple(exps)
        out[m] = out.get(m, 0) + sign * coeff
    return Polynomial(ring, out)


def format_polynomial(f: Polynomial) -> str:
    """Terms ≻-descending; coefficients printed in the symmetric range around zero."""
    if not f.terms:
        return "0"
    p = f.ring.p
    parts = []
    for m, c in f.sorted_terms():
        if c > p // 2:
            c -= p
        sign = "-" if c < 0 else "+"
        c = abs(c)
        body = mono.format_monomial(m, f.ring.names)
        if body == "1":
            text = str(c)
        elif c == 1:
            text = body
        else:
            text = f"{c}*{body}"
        parts.append((sign, text))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, text in parts[1:]:
        out += f" {sign} {text}"
    return out


@dataclass(frozen=True)
class PolynomialIdeal:
    ring: Ring
    gens: Tuple[Polynomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if g.ring != self.ring:
                raise ValueError("generator from a different ring")
            if not g.is_homogeneous():
                raise NonHomogeneousError(f"generator {g} is not homogeneous")

    @classmethod
    def from_strings(cls, lines: Iterable[str], ring: Ring) -> "PolynomialIdeal":
        return cls(ring, tuple(g for g in (ring.parse(s) for s in lines) if g))

    @property
    def num_vars(self) -> int:
        return self.ring.num_vars

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def from_monomial_ideal(ideal, ring: Optional[Ring] = None) -> PolynomialIdeal:
    """View a monomial ideal as a polynomial ideal."""
    ring = ring or Ring(ideal.num_vars)
    return PolynomialIdeal(ring, tuple(ring.monomial(g) for g in ideal.gens))
