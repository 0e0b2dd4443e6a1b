"""Buchberger engine and ideal-theoretic queries.

The basis computation is plain Buchberger with the Gebauer-Moeller pair
eliminations and normal (smallest-lcm-first) selection; bases are always
interreduced, so the result is the unique reduced basis for (ideal, order).
Dimension comes from maximal independent variable sets of the leading-term
ideal; intersections use the single-auxiliary-variable elimination trick,
and quotients divide an intersection through by the quotienting element.
"""

from __future__ import annotations

import heapq

from itertools import combinations

from .orders import DEGREVLEX, elimination
from .poly import (
    Poly,
    Ring,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class GroebnerError(RuntimeError):
    pass


class GroebnerBasis:
    """Reduced Groebner basis: monic elements, descending leading terms."""

    __slots__ = ("ring", "order", "elements", "lead_monomials", "reduced")

    def __init__(self, ring, order, elements):
        self.ring = ring
        self.order = order
        self.elements = list(elements)
        self.lead_monomials = [g.leading_monomial(order) for g in self.elements]
        self.reduced = True

    def is_unit(self):
        return len(self.elements) == 1 and not any(self.lead_monomials[0])

    def is_zero(self):
        return not self.elements

    def contains(self, f):
        return not normal_form(f, self).terms

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self.elements == other.elements
        )

    def __repr__(self):
        return f"GroebnerBasis({len(self.elements)} elements, {self.order!r})"


def _memo_key(order):
    cache = {}
    rawkey = order.key

    def key(m):
        k = cache.get(m)
        if k is None:
            k = cache[m] = rawkey(m)
        return k

    return key


def _reduce_terms(terms, lms, tails, key, dom):
    """Full normal form of a term dict against monic reducers."""
    zero = dom.zero
    sub, mul = dom.sub, dom.mul
    work = dict(terms)
    remainder = {}
    nred = len(lms)
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for i in range(nred):
            if mono_divides(lms[i], m):
                q = mono_div(m, lms[i])
                for gm, gc in tails[i].items():
                    mm = mono_mul(gm, q)
                    s = sub(work.get(mm, zero), mul(c, gc))
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
    return remainder


def normal_form(f: Poly, basis: GroebnerBasis) -> Poly:
    """Remainder of f on division by the basis; zero iff f is a member."""
    if f.ring != basis.ring:
        raise ValueError("polynomial and basis live in different rings")
    if not f.terms or not basis.elements:
        return f
    key = _memo_key(basis.order)
    dom = f.ring.domain
    lms = basis.lead_monomials
    tails = [
        {m: c for m, c in g.terms.items() if m != lm}
        for g, lm in zip(basis.elements, lms)
    ]
    rem = _reduce_terms(f.terms, lms, tails, key, dom)
    return Poly(f.ring, rem, _clean=False)


def _spair_terms(gi, gj, lmi, lmj, lcmij, dom):
    """S-polynomial of two monic elements, as a raw term dict."""
    qi = mono_div(lcmij, lmi)
    qj = mono_div(lcmij, lmj)
    res = {}
    zero = dom.zero
    add, sub = dom.add, dom.sub
    for m, c in gi.items():
        mm = mono_mul(m, qi)
        s = add(res.get(mm, zero), c)
        if s:
            res[mm] = s
        else:
            res.pop(mm, None)
    for m, c in gj.items():
        mm = mono_mul(m, qj)
        s = sub(res.get(mm, zero), c)
        if s:
            res[mm] = s
        else:
            res.pop(mm, None)
    return res


def groebner_basis(gens, order=DEGREVLEX, ring=None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens if g.terms]
    if ring is None:
        if not gens:
            raise ValueError("cannot infer the ring of an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
    if not gens:
        return GroebnerBasis(ring, order, [])

    dom = ring.domain
    key = _memo_key(order)

    lms = []          # leading monomials of current elements
    tails = []        # tail term dicts (element minus its lead, monic)
    full = []         # full monic term dicts
    pairs = {}        # (i, j) -> lcm, i < j
    heap = []

    def push_pairs(t):
        lmt = lms[t]
        # candidate new pairs, Gebauer-Moeller pruned
        cand = [(i, mono_lcm(lms[i], lmt)) for i in range(t)]
        kept = []
        while cand:
            i, l = cand.pop()
            coprime = l == mono_mul(lms[i], lmt)
            if coprime:
                kept.append((i, l, True))
                continue
            dominated = any(
                mono_divides(l2, l) and l2 != l for _, l2 in cand
            ) or any(
                mono_divides(l2, l) for _, l2, _ in kept
            )
            if not dominated:
                kept.append((i, l, False))
        # drop old pairs whose lcm is a proper multiple of lm(t)
        for (i, j), l in list(pairs.items()):
            if (
                mono_divides(lmt, l)
                and mono_lcm(lms[i], lmt) != l
                and mono_lcm(lms[j], lmt) != l
            ):
                del pairs[(i, j)]
        for i, l, coprime in kept:
            if coprime:
                continue  # product criterion
            pairs[(i, t)] = l
            heapq.heappush(heap, (key(l), i, t))

    def add_element(terms):
        lm = max(terms, key=key)
        lc = terms[lm]
        if lc != dom.one:
            inv = dom.inv(lc)
            terms = {m: dom.mul(c, inv) for m, c in terms.items()}
        t = len(full)
        lms.append(lm)
        tails.append({m: c for m, c in terms.items() if m != lm})
        full.append(terms)
        push_pairs(t)

    for g in sorted(gens, key=lambda p: key(p.leading_monomial(order))):
        reduced = _reduce_terms(g.terms, lms, tails, key, dom)
        if reduced:
            add_element(reduced)

    while heap:
        _, i, j = heapq.heappop(heap)
        l = pairs.pop((i, j), None)
        if l is None:
            continue
        s = _spair_terms(full[i], full[j], lms[i], lms[j], l, dom)
        if not s:
            continue
        reduced = _reduce_terms(s, lms, tails, key, dom)
        if reduced:
            add_element(reduced)

    # minimalize: drop elements whose lead is divisible by another lead
    order_idx = sorted(range(len(full)), key=lambda t: key(lms[t]))
    minimal = []
    for t in order_idx:
        if not any(mono_divides(lms[u], lms[t]) for u in minimal if u != t):
            minimal.append(t)
    # interreduce tails
    min_lms = [lms[t] for t in minimal]
    result = []
    min_tails = [dict(tails[t]) for t in minimal]
    for pos in range(len(minimal)):
        others_lms = min_lms[:pos] + min_lms[pos + 1 :]
        others_tails = min_tails[:pos] + min_tails[pos + 1 :]
        rem = _reduce_terms(min_tails[pos], others_lms, others_tails, key, dom)
        min_tails[pos] = rem
    for lm, tail in zip(min_lms, min_tails):
        terms = dict(tail)
        terms[lm] = dom.one
        result.append(Poly(ring, terms, _clean=False))
    result.sort(key=lambda p: key(p.leading_monomial(order)), reverse=True)
    return GroebnerBasis(ring, order, result)


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """Finitely generated ideal of a polynomial ring."""

    __slots__ = ("ring", "gens", "_bases")

    def __init__(self, ring, gens):
        gens = [g for g in gens if g.terms]
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator outside the ambient ring")
        self.ring = ring
        self.gens = list(gens)
        self._bases = {}

    def groebner(self, order=DEGREVLEX) -> GroebnerBasis:
        basis = self._bases.get(order)
        if basis is None:
            basis = _cached_basis(self.ring, self.gens, order)
            self._bases[order] = basis
        return basis

    def contains(self, f, order=DEGREVLEX):
        if not self.gens:
            return not f.terms
        return self.groebner(order).contains(f)

    def contains_ideal(self, other, order=DEGREVLEX):
        return all(self.contains(g, order) for g in other.gens)

    def equals(self, other, order=DEGREVLEX):
        """Ideal equality by mutual generator membership."""
        return self.contains_ideal(other, order) and other.contains_ideal(self, order)

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def is_unit(self, order=DEGREVLEX):
        return bool(self.gens) and self.groebner(order).is_unit()

    def __repr__(self):
        return f"Ideal({len(self.gens)} generators in {self.ring!r})"


_BASIS_CACHE: dict = {}


def _cached_basis(ring, gens, order):
    cache_key = (
        ring.nvars,
        ring.domain,
        ring.names,
        order,
        tuple(sorted(g.key() for g in gens)),
    )
    basis = _BASIS_CACHE.get(cache_key)
    if basis is None:
        basis = groebner_basis(gens, order, ring=ring)
        _BASIS_CACHE[cache_key] = basis
    return basis


def dimension(ideal: Ideal, order=DEGREVLEX) -> int:
    """Krull dimension of R/I via independent variable sets of the
    leading-term ideal; -1 for the unit ideal."""
    n = ideal.ring.nvars
    if not ideal.gens:
        return n
    basis = ideal.groebner(order)
    if basis.is_unit():
        return -1
    supports = [frozenset(i for i, e in enumerate(lm) if e) for lm in basis.lead_monomials]
    for size in range(n, 0, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def codimension(ideal: Ideal, order=DEGREVLEX) -> int:
    """n - dim for homogeneous ideals (n + 1 for the unit ideal)."""
    if ideal.gens and not ideal.is_homogeneous():
        raise ValueError("codimension requires homogeneous generators")
    return ideal.ring.nvars - dimension(ideal, order)


def _shift_poly(f, ext_ring):
    terms = {(0,) + m: c for m, c in f.terms.items()}
    return Poly(ext_ring, terms, _clean=False)


def _unshift_poly(f, ring):
    terms = {m[1:]: c for m, c in f.terms.items()}
    return Poly(ring, terms, _clean=False)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via the auxiliary-variable construction: eliminate t from
    t*I + (1-t)*J."""
    ring = I.ring
    if ring != J.ring:
        raise ValueError("ideals live in different rings")
    if not I.gens or not J.gens:
        return Ideal(ring, [])
    if len(I.gens) == 1 and len(J.gens) == 1:
        # principal case: <f> n <g> = <f g / gcd(f, g)>
        from .polygcd import multivariate_gcd

        f, g = I.gens[0], J.gens[0]
        d = multivariate_gcd(f, g)
        quot = exact_divide(f * g, d)
        return Ideal(ring, [quot.monic()])
    ext = Ring(ring.nvars + 1, ring.domain, ("t0",) + ring.names)
    t = ext.var(0)
    one = ext.one()
    gens = [t * _shift_poly(g, ext) for g in I.gens]
    gens += [(one - t) * _shift_poly(g, ext) for g in J.gens]
    basis = groebner_basis(gens, elimination(1), ring=ext)
    kept = [g for g in basis if not any(m[0] for m in g.terms)]
    return Ideal(ring, [_unshift_poly(g, ring) for g in kept])


def exact_divide(f: Poly, g: Poly, order=DEGREVLEX) -> Poly:
    """Quotient f/g when g divides f exactly; raises otherwise."""
    if not g.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    dom = f.ring.domain
    key = _memo_key(order)
    lm_g = g.leading_monomial(order)
    lc_g = g.terms[lm_g]
    rest = dict(f.terms)
    quot = {}
    while rest:
        m = max(rest, key=key)
        if not mono_divides(lm_g, m):
            raise GroebnerError("exact division failed (internal invariant)")
        c = dom.div(rest[m], lc_g)
        q = mono_div(m, lm_g)
        quot[q] = c
        for gm, gc in g.terms.items():
            mm = mono_mul(gm, q)
            s = dom.sub(rest.get(mm, dom.zero), dom.mul(c, gc))
            if s:
                rest[mm] = s
            else:
                rest.pop(mm, None)
    return Poly(f.ring, quot, _clean=False)


def ideal_quotient(I: Ideal, f: Poly) -> Ideal:
    """(I : f) computed as (I ∩ <f>) / f."""
    if not f.terms:
        raise ValueError("ideal quotient by the zero polynomial")
    ring = I.ring
    if not I.gens:
        return Ideal(ring, [])
    inter = ideal_intersection(I, Ideal(ring, [f]))
    return Ideal(ring, [exact_divide(g, f).monic() for g in inter.gens])


# ---------------------------------------------------------------------------
# regular-sequence tests


def _check_regseq_input(fs):
    if not fs:
        raise ValueError("empty sequence")
    for f in fs:
        if not f.terms:
            raise ValueError("zero polynomial in the sequence (strength -1)")
        if not f.is_homogeneous() or f.degree() < 1:
            raise ValueError("regular-sequence tests need homogeneous forms of positive degree")


def is_regular_sequence_codim(fs, order=DEGREVLEX) -> bool:
    """Codimension criterion: the forms are regular iff codim equals their
    number."""
    _check_regseq_input(fs)
    ideal = Ideal(fs[0].ring, fs)
    return codimension(ideal, order) == len(fs)


def is_regular_sequence_direct(fs, order=DEGREVLEX) -> bool:
    """Definition-based test: each form a nonzerodivisor modulo its
    predecessors, via ideal quotients."""
    _check_regseq_input(fs)
    ring = fs[0].ring
    if Ideal(ring, fs).is_unit(order):
        return False
    for i in range(1, len(fs)):
        prefix = Ideal(ring, fs[:i])
        quotient = ideal_quotient(prefix, fs[i])
        if not prefix.contains_ideal(quotient, order):
            return False
    return True


class PairReport:
    """Outcome of the two-form regularity check: gcd route vs codim route."""

    __slots__ = ("gcd", "gcd_route_regular", "codim_route_regular", "agree")

    def __init__(self, gcd, gcd_route_regular, codim_route_regular):
        self.gcd = gcd
        self.gcd_route_regular = gcd_route_regular
        self.codim_route_regular = codim_route_regular
        self.agree = gcd_route_regular == codim_route_regular

    def to_dict(self):
        return {
            "gcd": str(self.gcd),
            "gcd_route_regular": self.gcd_route_regular,
            "codim_route_regular": self.codim_route_regular,
            "agree": self.agree,
        }


def regular_pair_gcd_check(f1: Poly, f2: Poly) -> PairReport:
    """Two independent verdicts on a pair of forms: a pair is regular exactly
    when its gcd is constant."""
    from .polygcd import multivariate_gcd

    for f in (f1, f2):
        if not f.terms or not f.is_homogeneous():
            raise ValueError("gcd pair check needs nonzero homogeneous forms")
    g = multivariate_gcd(f1, f2)
    gcd_regular = g.is_constant()
    codim_regular = is_regular_sequence_codim([f1, f2])
    return PairReport(g, gcd_regular, codim_regular)


def spolynomial(f: Poly, g: Poly, order=DEGREVLEX) -> Poly:
    """S-polynomial of two nonzero polynomials (test oracle helper)."""
    dom = f.ring.domain
    fm = f.monic(order)
    gm = g.monic(order)
    lmf = fm.leading_monomial(order)
    lmg = gm.leading_monomial(order)
    l = mono_lcm(lmf, lmg)
    terms = _spair_terms(fm.terms, gm.terms, lmf, lmg, l, dom)
    return Poly(f.ring, terms, _clean=False)
