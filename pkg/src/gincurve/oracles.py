"""Dense linear-algebra cross-checks, independent of the Buchberger path.

Everything here works one degree at a time on coefficient matrices over F_p.
"""

from __future__ import annotations

from collections import Counter
from typing import Dict, List, Sequence

import numpy as np

from . import linalg
from . import monomials as mono
from .ideals import MonomialIdeal, minimalize, monomials_of_degree
from .polynomials import Polynomial, PolynomialIdeal


def _columns(num_vars: int, d: int) -> List[mono.Monomial]:
    # ≻-descending so pivots of the echelon form are leading monomials
    return sorted(monomials_of_degree(num_vars, d), key=mono.degrevlex_key, reverse=True)


def degree_matrix(ideal: PolynomialIdeal, d: int):
    """Rows span ``I_d``: every ``m * g`` with ``deg m + deg g = d``."""
    n = ideal.num_vars
    cols = _columns(n, d)
    where = {m: c for c, m in enumerate(cols)}
    rows = []
    for g in ideal.gens:
        e = g.degree()
        if e > d:
            continue
        for m in monomials_of_degree(n, d - e):
            row = np.zeros(len(cols), dtype=np.int64)
            for k, v in g.terms.items():
                row[where[tuple(a + b for a, b in zip(k, m))]] = v
            rows.append(row)
    mat = np.array(rows, dtype=np.int64).reshape(len(rows), len(cols))
    return mat, cols


def ideal_dimension(ideal: PolynomialIdeal, d: int) -> int:
    mat, _ = degree_matrix(ideal, d)
    return linalg.rank(mat, ideal.ring.p)


def quotient_hilbert_function(ideal: PolynomialIdeal, d: int) -> int:
    return len(list(monomials_of_degree(ideal.num_vars, d))) - ideal_dimension(ideal, d)


def truncated_initial_ideal(ideal: PolynomialIdeal, max_degree: int) -> MonomialIdeal:
    """Leading monomials of ``I_d`` for ``d <= max_degree``, from echelon forms."""
    leads = []
    for d in range(max_degree + 1):
        mat, cols = degree_matrix(ideal, d)
        if mat.shape[0] == 0:
            continue
        _, pivots = linalg.rref(mat, ideal.ring.p)
        leads.extend(cols[c] for c in pivots)
    return minimalize(leads, ideal.num_vars)


def colon_degree_part(ideal: PolynomialIdeal, h: Polynomial, d: int) -> int:
    """``dim (I : h)_d`` as the dimension of ``{f in S_d : h f in I_{d+1}}``."""
    n, p = ideal.num_vars, ideal.ring.p
    mat, cols = degree_matrix(ideal, d + 1)
    ech, pivots = linalg.rref(mat, p) if mat.shape[0] else (mat, [])
    where = {m: c for c, m in enumerate(cols)}
    src = list(monomials_of_degree(n, d))
    # column t of ``images`` is h * src[t]
    images = np.zeros((len(cols), len(src)), dtype=np.int64)
    for t, m in enumerate(src):
        for k, v in h.terms.items():
            images[where[tuple(a + b for a, b in zip(k, m))], t] = v
    # h f lies in I_{d+1} iff its residue modulo the echelon basis vanishes
    residue = images.copy() % p
    for row, c in enumerate(pivots):
        coeff = residue[c].copy()
        residue = (residue - np.outer(ech[row], coeff)) % p
    return len(src) - linalg.rank(residue, p)


def _syzygy_map(gens: Sequence[mono.Monomial], d: int):
    n = len(gens[0])
    cols = _columns(n, d)
    where = {m: c for c, m in enumerate(cols)}
    domain = []
    for j, g in enumerate(gens):
        e = sum(g)
        if e <= d:
            for m in monomials_of_degree(n, d - e):
                domain.append((j, m))
    mat = np.zeros((len(cols), len(domain)), dtype=np.int64)
    for t, (j, m) in enumerate(domain):
        mat[where[mono.mul(m, gens[j])], t] = 1
    return mat, domain


def minimal_first_syzygy_degrees(ideal: MonomialIdeal, p: int = 32003, top: int | None = None) -> Dict[int, int]:
    """Number of minimal first syzygies per degree, from kernels of the presentation map.

    Minimal generators in degree ``d`` are ``dim Syz_d - dim(S_1 Syz_{d-1})``.
    """
    gens = list(ideal.gens)
    if not gens:
        return {}
    n = ideal.num_vars
    if top is None:
        top = ideal.max_degree + 2
    counts: Dict[int, int] = {}
    prev_kernel = None
    prev_domain = None
    for d in range(min(sum(g) for g in gens), top + 1):
        mat, domain = _syzygy_map(gens, d)
        kernel = linalg.nullspace(mat, p) if domain else np.zeros((0, 0), dtype=np.int64)
        dim_syz = kernel.shape[0]
        lifted_rank = 0
        if prev_kernel is not None and prev_kernel.shape[0]:
            index = {key: t for t, key in enumerate(domain)}
            lifted = []
            for vec in prev_kernel:
                for v in range(n):
                    x = mono.variable(v + 1, n)
                    row = np.zeros(len(domain), dtype=np.int64)
                    for t, c in enumerate(vec):
                        if c:
                            j, m = prev_domain[t]
                            row[index[(j, mono.mul(m, x))]] = c
                    lifted.append(row)
            lifted_rank = linalg.rank(np.array(lifted), p)
        extra = dim_syz - lifted_rank
        if extra:
            counts[d] = extra
        prev_kernel, prev_domain = kernel, domain
    return counts


def degree_multiset(counts: Dict[int, int]) -> List[int]:
    return sorted(Counter(counts).elements())
