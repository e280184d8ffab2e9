"""Division with quotient tracking, S-polynomials, Buchberger's algorithm,
reduced Groebner bases, initial ideals and minimalization of homogeneous
generating sets.

Everything here is deliberately plain: the normal selection strategy plus
the coprimality and chain criteria, nothing else.  This module doubles as
the independent oracle for the rest of the package, so auditability beats
cleverness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisionByZero, NotHomogeneous
from .poly import (
    Poly,
    drl_key,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


@dataclass(frozen=True)
class DivisionResult:
    """f = sum(quotients[i] * divisors[i]) + remainder, exactly."""

    quotients: tuple
    remainder: Poly


def divide(f: Poly, divisors) -> DivisionResult:
    """Multivariate division; ties always go to the leftmost divisor."""
    divisors = list(divisors)
    field = f.field
    for g in divisors:
        if g.is_zero():
            raise DivisionByZero("division by a zero polynomial")
        f._check_compatible(g)
    lts = [(g.leading_monomial(), g.leading_coeff()) for g in divisors]

    work = dict(f.terms)
    quots = [dict() for _ in divisors]
    rem: dict = {}
    while work:
        mono = max(work, key=drl_key)
        coeff = work[mono]
        for k, (gm, gc) in enumerate(lts):
            if mono_divides(gm, mono):
                qm = mono_div(mono, gm)
                qc = coeff / gc
                q = quots[k]
                prev = q.get(qm)
                q[qm] = qc if prev is None else prev + qc
                for m2, c2 in divisors[k].terms.items():
                    mm = mono_mul(qm, m2)
                    prev = work.get(mm)
                    nc = -(qc * c2) if prev is None else prev - qc * c2
                    if nc:
                        work[mm] = nc
                    else:
                        work.pop(mm, None)
                break
        else:
            rem[mono] = coeff
            del work[mono]

    nvars = f.nvars
    return DivisionResult(
        tuple(Poly(field, nvars, q) for q in quots),
        Poly(field, nvars, rem),
    )


def s_polynomial(f: Poly, g: Poly) -> Poly:
    """The leading-term-cancelling combination of f and g."""
    f._check_compatible(g)
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = mono_lcm(lf, lg)
    one = f.field.one
    return f.mul_term(mono_div(lcm, lf), one / f.leading_coeff()) - g.mul_term(
        mono_div(lcm, lg), one / g.leading_coeff()
    )


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced DRL Groebner basis: monic, interreduced, sorted by
    descending leading monomial."""

    elements: tuple
    field: object


def buchberger(gens) -> GroebnerBasis:
    """Buchberger's algorithm with the coprimality and chain criteria,
    followed by interreduction to the unique reduced basis."""
    G = [g.monic() for g in gens if not g.is_zero()]
    if not G:
        raise ValueError("need at least one nonzero generator")
    field = G[0].field
    for g in G:
        G[0]._check_compatible(g)

    def pair_key(i, j):
        lcm = mono_lcm(G[i].leading_monomial(), G[j].leading_monomial())
        return (sum(lcm), drl_key(lcm), i, j)

    pending = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    treated: set = set()
    while pending:
        i, j = min(pending, key=lambda p: pair_key(*p))
        pending.discard((i, j))
        treated.add((i, j))
        li, lj = G[i].leading_monomial(), G[j].leading_monomial()
        lcm = mono_lcm(li, lj)
        if lcm == mono_mul(li, lj):
            continue  # coprime leading terms
        chained = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(G[k].leading_monomial(), lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in treated and pjk in treated:
                    chained = True
                    break
        if chained:
            continue
        r = divide(s_polynomial(G[i], G[j]), G).remainder
        if not r.is_zero():
            G.append(r.monic())
            new = len(G) - 1
            pending.update((k, new) for k in range(new))

    # Minimalize: keep only elements whose leading monomial no other kept
    # leading monomial divides.
    G.sort(key=lambda g: drl_key(g.leading_monomial()))
    minimal = []
    for g in G:
        lm = g.leading_monomial()
        if not any(mono_divides(h.leading_monomial(), lm) for h in minimal):
            minimal.append(g)

    # Tail-reduce to a fixpoint; leading monomials never change here.
    changed = True
    while changed:
        changed = False
        for idx, g in enumerate(minimal):
            others = minimal[:idx] + minimal[idx + 1 :]
            r = divide(g, others).remainder if others else g
            if r != g:
                minimal[idx] = r.monic()
                changed = True

    minimal.sort(key=lambda g: drl_key(g.leading_monomial()), reverse=True)
    return GroebnerBasis(tuple(minimal), field)


def is_groebner(polys) -> bool:
    """Check every S-polynomial reduces to zero (no shortcuts: this is the
    oracle-grade definition)."""
    G = [g for g in polys if not g.is_zero()]
    if not G:
        raise ValueError("need at least one nonzero polynomial")
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if not divide(s_polynomial(G[i], G[j]), G).remainder.is_zero():
                return False
    return True


def minimal_monomial_generators(monos) -> tuple:
    """Drop monomials divisible by another; sort DRL-descending."""
    monos = sorted(set(monos), key=drl_key)
    kept = []
    for m in monos:
        if not any(mono_divides(k, m) for k in kept):
            kept.append(m)
    kept.sort(key=drl_key, reverse=True)
    return tuple(kept)


def initial_ideal(gb) -> tuple:
    """Minimal monomial generators of the ideal of leading terms."""
    elements = gb.elements if isinstance(gb, GroebnerBasis) else list(gb)
    return minimal_monomial_generators(g.leading_monomial() for g in elements)


def minimalize_homogeneous(gens) -> dict:
    """Per-degree counts of a minimal homogeneous generating set.

    Generators are eliminated degree-ascending: a candidate is redundant
    exactly when it reduces to zero against a Groebner basis of the ideal
    generated by everything kept so far.
    """
    polys = [g for g in gens if not g.is_zero()]
    if not polys:
        raise ValueError("need at least one nonzero generator")
    for g in polys:
        if not g.is_homogeneous():
            raise NotHomogeneous(f"generator {g} is not homogeneous")

    order = sorted(range(len(polys)), key=lambda k: (polys[k].degree(), k))
    kept: list = []
    kept_gb: tuple = ()
    counts: dict = {}
    for k in order:
        g = polys[k]
        if kept:
            r = divide(g, kept_gb).remainder
            if r.is_zero():
                continue
        kept.append(g)
        kept_gb = buchberger(kept).elements
        d = int(g.degree())
        counts[d] = counts.get(d, 0) + 1
    return dict(sorted(counts.items()))
