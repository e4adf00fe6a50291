"""Buchberger's algorithm under graded reverse lex."""

from __future__ import annotations

import heapq
from typing import Dict, List, Sequence, Set, Tuple

from . import monomials as mono
from .ideals import MonomialIdeal, minimalize
from .monomials import Monomial, degrevlex_key
from .polynomials import Polynomial, PolynomialIdeal


def _heap_key(m: Monomial):
    # min-heap order that pops the ≻-largest monomial first
    return (-sum(m), tuple(reversed(m)))


def normal_form(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Full reduction of ``f`` by ``G``.

    Always rewrites the ≻-largest reducible term, using the first element of
    ``G`` (in the given order) whose leading monomial divides it.
    """
    ring = f.ring
    p = ring.p
    reducers = []
    for g in G:
        if not g:
            raise ValueError("cannot reduce by the zero polynomial")
        if g.ring != ring:
            raise ValueError("polynomials live in different rings")
        lm = g.lead
        inv = pow(g.terms[lm], -1, p)
        tail = [(k, v) for k, v in g.terms.items() if k != lm]
        reducers.append((lm, inv, tail))

    work: Dict[Monomial, int] = dict(f.terms)
    heap = [(_heap_key(m), m) for m in work]
    heapq.heapify(heap)
    rem: Dict[Monomial, int] = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        for lm, inv, tail in reducers:
            if all(a <= b for a, b in zip(lm, m)):
                q = tuple(b - a for a, b in zip(lm, m))
                factor = c * inv % p
                for k, v in tail:
                    t = tuple(a + b for a, b in zip(k, q))
                    old = work.get(t)
                    nv = ((old or 0) - factor * v) % p
                    if nv:
                        work[t] = nv
                        if old is None:
                            heapq.heappush(heap, (_heap_key(t), t))
                    elif old is not None:
                        del work[t]
                break
        else:
            rem[m] = c
    return Polynomial(ring, rem)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, lg = f.lead, g.lead
    top = mono.lcm(lf, lg)
    p = f.ring.p
    a = f.shift(mono.quotient(top, lf), pow(f.lead_coeff, -1, p))
    b = g.shift(mono.quotient(top, lg), pow(g.lead_coeff, -1, p))
    return a - b


def _update(leads: List[Monomial], pairs: Set[Tuple[int, int]], new: int) -> Set[Tuple[int, int]]:
    """Gebauer-Moeller pair update (product and chain criteria)."""
    lm_new = leads[new]
    lcm = mono.lcm

    def strictly_divides(a, b):
        return mono.divides(a, b) and a != b

    # drop old pairs whose lcm is strictly divisible by the new pair lcms
    kept = set()
    for i, j in pairs:
        top = lcm(leads[i], leads[j])
        if (mono.divides(lm_new, top)
                and lcm(leads[i], lm_new) != top
                and lcm(leads[j], lm_new) != top):
            continue
        kept.add((i, j))

    by_lcm: Dict[Monomial, List[int]] = {}
    for i in range(new):
        by_lcm.setdefault(lcm(leads[i], lm_new), []).append(i)
    survivors = []
    for top in sorted(by_lcm, key=degrevlex_key):
        if not any(strictly_divides(other, top) for other in survivors):
            survivors.append(top)
    for top in survivors:
        idx = by_lcm[top]
        # product criterion: one coprime pair in the class kills the whole class
        if any(mono.mul(leads[i], lm_new) == top for i in idx):
            continue
        kept.add((min(idx), new))
    return kept


def buchberger(ideal: PolynomialIdeal) -> List[Polynomial]:
    """Reduced Groebner basis (monic, auto-reduced) in ≻-ascending order of leading monomials."""
    basis: List[Polynomial] = []
    leads: List[Monomial] = []
    pairs: Set[Tuple[int, int]] = set()

    def add(h: Polynomial):
        nonlocal pairs
        h = h.monic()
        basis.append(h)
        leads.append(h.lead)
        pairs = _update(leads, pairs, len(basis) - 1)

    for g in sorted((g for g in ideal.gens if g), key=lambda g: degrevlex_key(g.lead)):
        r = normal_form(g, basis)
        if r:
            add(r)

    while pairs:
        i, j = min(pairs, key=lambda ij: (degrevlex_key(mono.lcm(leads[ij[0]], leads[ij[1]])), ij))
        pairs.discard((i, j))
        r = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if r:
            add(r)

    return _interreduce(_minimal(basis))


def _minimal(G: List[Polynomial]) -> List[Polynomial]:
    out: List[Polynomial] = []
    for g in sorted(G, key=lambda g: degrevlex_key(g.lead)):
        if not any(mono.divides(h.lead, g.lead) for h in out):
            out.append(g)
    return out


def _interreduce(G: List[Polynomial]) -> List[Polynomial]:
    out = []
    for k, g in enumerate(G):
        others = G[:k] + G[k + 1:]
        lead_part = Polynomial(g.ring, {g.lead: g.lead_coeff})
        tail = normal_form(g - lead_part, others)
        out.append((lead_part + tail).monic())
    return out


def initial_ideal(ideal: PolynomialIdeal) -> MonomialIdeal:
    gb = buchberger(ideal)
    return minimalize([g.lead for g in gb], ideal.num_vars)


def is_groebner_basis(G: Sequence[Polynomial]) -> bool:
    """Every S-polynomial reduces to zero."""
    G = list(G)
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            if normal_form(s_polynomial(G[a], G[b]), G):
                return False
    return True
