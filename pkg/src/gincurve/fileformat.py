"""Reading and writing ideal files.

Two layouts share one header syntax::

    # comment
    vars: 3              # an integer: monomial ideal in x1..x3
    x1^3*x3
    x1^4

    vars: x1 x2 x3 x4    # names: polynomial ideal
    prime: 32003         # optional
    x1*x3 - x2^2

A line ``monomials:`` (after the header) forces the monomial reading when the
variables are given by name.
"""

from __future__ import annotations

from typing import List, Tuple, Union

from . import monomials as mono
from .ideals import MonomialIdeal, minimalize
from .polynomials import (DEFAULT_PRIME, MAX_PRIME, NonHomogeneousError, ParseError,
                          PolynomialIdeal, Ring, format_polynomial, is_prime, parse_polynomial)

Ideal = Union[MonomialIdeal, PolynomialIdeal]


def _strip(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _header(lines: List[Tuple[int, str]]):
    header = {}
    body = []
    monomial_section = False
    for number, text in lines:
        key, sep, value = text.partition(":")
        key = key.strip()
        if sep and key in ("vars", "prime", "monomials") and not body:
            if key in header:
                raise ParseError(f"duplicate header {key!r}", number, 1)
            header[key] = (number, value.strip())
            if key == "monomials":
                if value.strip():
                    raise ParseError("'monomials:' takes no value", number, text.index(":") + 2)
                monomial_section = True
            continue
        body.append((number, text))
    return header, body, monomial_section


def _parse_vars(number: int, value: str):
    if not value:
        raise ParseError("'vars:' needs a count or variable names", number, 1)
    if value.isdigit():
        return int(value), None
    names = value.split()
    return len(names), tuple(names)


def _column_of(raw: str, value: str) -> int:
    return raw.index(value) + 1 if value and value in raw else 1


def parse_ideal(text: str, prime: int | None = None) -> Ideal:
    """Parse an ideal file; the header decides between monomial and polynomial ideals.

    ``prime`` overrides the file's ``prime:`` line.
    """
    raw_lines = text.splitlines()
    lines = [(n, _strip(s)) for n, s in enumerate(raw_lines, start=1)]
    lines = [(n, s) for n, s in lines if s.strip()]
    header, body, monomial_section = _header(lines)
    if "vars" not in header:
        where = lines[0][0] if lines else 1
        raise ParseError("missing 'vars:' header", where, 1)
    number, value = header["vars"]
    try:
        num_vars, names = _parse_vars(number, value)
        p = DEFAULT_PRIME
        if "prime" in header:
            pline, pvalue = header["prime"]
            if not pvalue.isdigit():
                raise ParseError(f"prime must be an integer, found {pvalue!r}", pline,
                                 _column_of(raw_lines[pline - 1], pvalue))
            p = int(pvalue)
            if not is_prime(p) or p > MAX_PRIME:
                raise ParseError(f"modulus {p} is not a prime below 2^31", pline,
                                 _column_of(raw_lines[pline - 1], pvalue))
        if prime is not None:
            if not is_prime(prime) or prime > MAX_PRIME:
                raise ValueError(f"modulus {prime} is not a prime below 2^31")
            p = prime
        ring = Ring(num_vars, p, names or ())
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), number, 1) from exc

    polys = [(n, parse_polynomial(s, ring, n)) for n, s in body]
    if names is None or monomial_section:
        gens = []
        for n, f in polys:
            if len(f.terms) != 1 or next(iter(f.terms.values())) != 1:
                raise ParseError("expected a single monomial with coefficient 1", n, 1)
            gens.append(f.lead)
        return minimalize(gens, num_vars)
    for n, f in polys:
        if not f.is_homogeneous():
            raise NonHomogeneousError(f"line {n}: generator {format_polynomial(f)} is not homogeneous")
    return PolynomialIdeal(ring, tuple(f for _, f in polys if f))


def read_ideal(path, prime: int | None = None) -> Ideal:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read(), prime)


def format_ideal(ideal: Ideal) -> str:
    """Inverse of :func:`parse_ideal` (up to comments and generator order)."""
    if isinstance(ideal, MonomialIdeal):
        lines = [f"vars: {ideal.num_vars}"]
        lines += [mono.format_monomial(g) for g in ideal.gens]
    else:
        ring = ideal.ring
        lines = ["vars: " + " ".join(ring.names)]
        if ring.p != DEFAULT_PRIME:
            lines.append(f"prime: {ring.p}")
        lines += [format_polynomial(g) for g in ideal.gens]
    return "\n".join(lines) + "\n"
