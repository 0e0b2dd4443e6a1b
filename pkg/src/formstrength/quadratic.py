"""Quadratic forms as Gram matrices: rank, strength, pencils and minrank.

A form q lives as a symmetric matrix G with q(x) = x^t G x (cross terms
halved), over a domain of characteristic other than 2.  The minrank of a
diagonal pair comes both from the block-multiplicity formula and from an
exhaustive projective-line scan over a prime field; the two routes are
mutual oracles.
"""

from __future__ import annotations

from fractions import Fraction

from .domains import GF, QQ, PrimeField
from .groebner import Ideal, codimension, ideal_intersection, normal_form
from .linalg import (
    congruence_diagonalize,
    is_symmetric,
    kernel_basis,
    mat_mul,
    mat_rank,
    transpose,
)
from .minors import determinant_laplace
from .poly import Poly, Ring


class DegenerateFormError(ValueError):
    """Raised where a construction needs a nondegenerate base form.

    When both forms share a kernel vector, eliminate that variable first and
    retry in fewer variables.
    """


def _check_char(domain):
    if domain.characteristic == 2:
        raise ValueError("quadratic-form operations need characteristic != 2")


class QuadraticForm:
    """Symmetric Gram-matrix representation of a degree-2 form."""

    __slots__ = ("ring", "gram")

    def __init__(self, ring, gram):
        _check_char(ring.domain)
        n = ring.nvars
        if len(gram) != n or any(len(row) != n for row in gram):
            raise ValueError("Gram matrix shape does not match the ring")
        if not is_symmetric(gram):
            raise ValueError("Gram matrix must be symmetric")
        self.ring = ring
        self.gram = [list(row) for row in gram]

    @property
    def n(self):
        return self.ring.nvars

    @property
    def domain(self):
        return self.ring.domain

    @classmethod
    def from_poly(cls, f: Poly) -> "QuadraticForm":
        """Gram matrix of a homogeneous degree-2 polynomial (or zero)."""
        ring = f.ring
        _check_char(ring.domain)
        dom = ring.domain
        n = ring.nvars
        half = dom.inv(dom.from_int(2))
        gram = [[dom.zero] * n for _ in range(n)]
        for m, c in f.terms.items():
            support = [(i, e) for i, e in enumerate(m) if e]
            degs = sum(e for _, e in support)
            if degs != 2:
                raise ValueError("not a homogeneous quadratic form")
            if len(support) == 1:
                i = support[0][0]
                gram[i][i] = dom.add(gram[i][i], c)
            else:
                i, j = support[0][0], support[1][0]
                ch = dom.mul(c, half)
                gram[i][j] = dom.add(gram[i][j], ch)
                gram[j][i] = dom.add(gram[j][i], ch)
        return cls(ring, gram)

    @classmethod
    def diagonal(cls, ring, diag):
        dom = ring.domain
        entries = [dom.from_int(d) if isinstance(d, int) else d for d in diag]
        n = ring.nvars
        gram = [[entries[i] if i == j else dom.zero for j in range(n)] for i in range(n)]
        return cls(ring, gram)

    def to_poly(self) -> Poly:
        dom = self.domain
        n = self.n
        terms = {}
        two = dom.from_int(2)
        for i in range(n):
            if self.gram[i][i]:
                mono = tuple(2 if k == i else 0 for k in range(n))
                terms[mono] = self.gram[i][i]
            for j in range(i + 1, n):
                if self.gram[i][j]:
                    mono = tuple(1 if k in (i, j) else 0 for k in range(n))
                    terms[mono] = dom.mul(two, self.gram[i][j])
        return Poly(self.ring, terms, _clean=False)

    def rank(self) -> int:
        return mat_rank(self.gram, self.domain)

    def is_zero(self):
        return all(not v for row in self.gram for v in row)

    def scaled(self, c):
        dom = self.domain
        return QuadraticForm(self.ring, [[dom.mul(v, c) for v in row] for row in self.gram])

    def __add__(self, other):
        if self.ring != other.ring:
            raise ValueError("forms live in different rings")
        dom = self.domain
        gram = [
            [dom.add(a, b) for a, b in zip(ra, rb)]
            for ra, rb in zip(self.gram, other.gram)
        ]
        return QuadraticForm(self.ring, gram)

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticForm)
            and self.ring == other.ring
            and self.gram == other.gram
        )

    def __repr__(self):
        return f"QuadraticForm({self.to_poly()})"


def combine(forms, coeffs) -> QuadraticForm:
    """Linear combination of quadratic forms with the given coefficients."""
    ring = forms[0].ring
    dom = ring.domain
    n = ring.nvars
    gram = [[dom.zero] * n for _ in range(n)]
    for q, c in zip(forms, coeffs):
        if not c:
            continue
        for i in range(n):
            row = q.gram[i]
            gi = gram[i]
            for j in range(n):
                if row[j]:
                    gi[j] = dom.add(gi[j], dom.mul(c, row[j]))
    return QuadraticForm(ring, gram)


def rank(q: QuadraticForm) -> int:
    """Gram rank; equals the number of squares in any diagonalization."""
    return q.rank()


def strength_from_rank(k: int) -> int:
    """Closed-field strength of a rank-k quadric: ceil(k/2) - 1, with the
    zero form at -1."""
    if k < 0:
        raise ValueError("rank cannot be negative")
    if k == 0:
        return -1
    return (k + 1) // 2 - 1


class Pencil:
    """A nonempty tuple of quadratic forms in one ring."""

    __slots__ = ("forms",)

    def __init__(self, forms):
        forms = list(forms)
        if not forms:
            raise ValueError("empty pencil")
        ring = forms[0].ring
        for q in forms:
            if q.ring != ring:
                raise ValueError("pencil members live in different rings")
        self.forms = forms

    @property
    def ring(self):
        return self.forms[0].ring

    def __len__(self):
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)


class DiagonalPair:
    """Simultaneously diagonal pair of forms.

    a and b are the diagonals of the two forms; the derived data normalizes
    the first form to all ones arithmetically: the ratios b_i/a_i are
    grouped into blocks of equal value (alphas), with multiplicities
    (lambdas) and partial sums (mus).
    """

    __slots__ = ("n", "a", "b", "domain", "transform", "ratios", "alphas", "lambdas", "mus", "blocks")

    def __init__(self, a, b, domain=QQ, transform=None):
        _check_char(domain)
        if len(a) != len(b):
            raise ValueError("diagonal length mismatch")
        conv = lambda v: domain.from_int(v) if isinstance(v, int) else v
        self.a = [conv(v) for v in a]
        self.b = [conv(v) for v in b]
        self.n = len(self.a)
        if self.n == 0:
            raise ValueError("empty diagonal pair")
        self.domain = domain
        self.transform = transform
        if any(not v for v in self.a):
            raise DegenerateFormError(
                "first form is degenerate; drop its kernel variables and retry"
            )
        self.ratios = [domain.div(bi, ai) for ai, bi in zip(self.a, self.b)]
        alphas = []
        blocks = []
        for i, r in enumerate(self.ratios):
            if r in alphas:
                blocks[alphas.index(r)].append(i)
            else:
                alphas.append(r)
                blocks.append([i])
        self.alphas = alphas
        self.blocks = blocks
        self.lambdas = [len(bl) for bl in blocks]
        self.mus = []
        total = 0
        for lam in self.lambdas:
            total += lam
            self.mus.append(total)

    @property
    def r(self):
        return len(self.alphas)

    def ring(self) -> Ring:
        return Ring.flat(self.n, self.domain)

    def forms(self):
        ring = self.ring()
        return (
            QuadraticForm.diagonal(ring, self.a),
            QuadraticForm.diagonal(ring, self.b),
        )

    def reduce_mod(self, p: int) -> "DiagonalPair":
        """Image over F_p; refuses reductions that collapse the block
        structure or kill a diagonal entry."""
        field = GF(p)
        _check_char(field)

        def cast(v):
            if isinstance(v, Fraction):
                return field(v.numerator, v.denominator)
            return field.from_int(int(v))

        a = [cast(v) for v in self.a]
        b = [cast(v) for v in self.b]
        if any(v == 0 for v in a):
            raise ValueError(f"diagonal entry vanishes mod {p}")
        image = DiagonalPair(a, b, field)
        if image.lambdas != self.lambdas:
            raise ValueError(f"block structure collapses mod {p}")
        return image

    def __repr__(self):
        return f"DiagonalPair(a={self.a}, b={self.b})"


class MinrankResult:
    """Minrank value with a reproducing coefficient witness."""

    __slots__ = ("value", "witness", "method")

    def __init__(self, value, witness, method):
        self.value = value
        self.witness = tuple(witness)
        self.method = method

    def to_dict(self):
        return {
            "value": self.value,
            "witness": [str(c) for c in self.witness],
            "method": self.method,
        }

    def __repr__(self):
        return f"MinrankResult({self.value}, witness={self.witness}, {self.method})"


def minrank_formula(dp: DiagonalPair) -> MinrankResult:
    """Minrank of a diagonal pair: n minus the largest block multiplicity.

    The witness combination f2 - alpha*f1 kills exactly the largest block.
    """
    lam_max = max(dp.lambdas)
    t_star = dp.lambdas.index(lam_max)
    alpha = dp.alphas[t_star]
    return MinrankResult(dp.n - lam_max, (dp.domain.neg(alpha), dp.domain.one), "formula")


def minrank_bruteforce(f1: QuadraticForm, f2: QuadraticForm, threads: int = 1) -> MinrankResult:
    """Exhaustive minrank over F_p: scan all p+1 points of the projective
    line of combinations."""
    dom = f1.domain
    if not isinstance(dom, PrimeField):
        raise ValueError("brute-force minrank needs a prime field")
    _check_char(dom)
    p = dom.p
    points = [(dom.one, dom.from_int(t)) for t in range(p)]
    points.append((dom.zero, dom.one))

    def rank_at(pt):
        return combine([f1, f2], pt).rank()

    best, witness = None, None
    for pt in _scan(points, rank_at, threads):
        if best is None or pt[1] < best:
            best = pt[1]
            witness = pt[0]
    return MinrankResult(best, witness, "finite-field-scan")


def _scan(points, fn, threads):
    """Deterministic (point, value) stream, optionally thread-partitioned."""
    if threads and threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        chunk = max(1, len(points) // threads)
        chunks = [points[i : i + chunk] for i in range(0, len(points), chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(lambda ch: [(pt, fn(pt)) for pt in ch], chunks)
            for part in results:
                yield from part
    else:
        for pt in points:
            yield (pt, fn(pt))


def projective_points(dom, r):
    """Representatives of P^(r-1) over F_p: first nonzero coordinate 1."""
    p = dom.p
    points = []
    for lead in range(r):
        head = [dom.zero] * lead + [dom.one]
        tails = [[]]
        for _ in range(r - lead - 1):
            tails = [t + [dom.from_int(v)] for t in tails for v in range(p)]
        points.extend(tuple(head + t) for t in tails)
    return points


def rank_scan_all_nonzero(forms, expect=None):
    """Gram rank of every combination over all nonzero coefficient tuples of
    F_p^r.  Returns (histogram, first offender) where the offender is the
    first tuple whose rank differs from ``expect`` (None when unused)."""
    dom = forms[0].domain
    if not isinstance(dom, PrimeField):
        raise ValueError("rank scan needs a prime field")
    p = dom.p
    r = len(forms)
    histogram = {}
    offender = None
    tuples = [[]]
    for _ in range(r):
        tuples = [t + [v] for t in tuples for v in range(p)]
    for t in tuples:
        if not any(t):
            continue
        value = combine(forms, [dom.from_int(v) for v in t]).rank()
        histogram[value] = histogram.get(value, 0) + 1
        if expect is not None and value != expect and offender is None:
            offender = {"point": list(t), "rank": value}
    return histogram, offender


def collective_strength_quadrics(pencil: Pencil, threads: int = 1) -> int:
    """Minimum closed-field strength over all nontrivial combinations of the
    pencil, by exhaustive projective scan over F_p."""
    dom = pencil.ring.domain
    if not isinstance(dom, PrimeField):
        raise ValueError("collective-strength scan needs a prime field")
    _check_char(dom)
    forms = pencil.forms
    points = projective_points(dom, len(forms))

    def strength_at(pt):
        return strength_from_rank(combine(forms, pt).rank())

    return min(v for _, v in _scan(points, strength_at, threads))


# ---------------------------------------------------------------------------
# simultaneous diagonalization


def _char_poly(m, dom):
    """det(t*I - M) as a univariate Poly over the domain."""
    n = len(m)
    ring = Ring(1, dom, names=("t",))
    t = ring.var(0)
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            e = ring.const(dom.neg(m[i][j]))
            if i == j:
                e = t + e
            row.append(e)
        grid.append(row)
    return determinant_laplace(grid, ring)


def _poly_coeffs(f, dom):
    deg = f.degree()
    coeffs = [dom.zero] * (deg + 1)
    for mono, c in f.terms.items():
        coeffs[mono[0]] = c
    return coeffs


def _divisors(n):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _eval_coeffs(coeffs, x, dom):
    acc = dom.zero
    for c in reversed(coeffs):
        acc = dom.add(dom.mul(acc, x), c)
    return acc


def _deflate(coeffs, root, dom):
    # synthetic division by (t - root); assumes root is exact
    out = [dom.zero] * (len(coeffs) - 1)
    acc = dom.zero
    for k in range(len(coeffs) - 1, 0, -1):
        acc = dom.add(dom.mul(acc, root), coeffs[k])
        out[k - 1] = acc
    return out

def _roots_with_multiplicity(coeffs, dom):
    """All roots in the domain, with multiplicities, plus the degree left
    unsplit."""
    roots = {}
    work = list(coeffs)
    while len(work) > 1 and not work[0]:
        roots[dom.zero] = roots.get(dom.zero, 0) + 1
        work = work[1:]
    if isinstance(dom, PrimeField):
        candidates = [dom.from_int(v) for v in range(dom.p)]
    else:
        lcm_den = 1
        for c in work:
            lcm_den = lcm_den * c.denominator // _gcd_int(lcm_den, c.denominator)
        ints = [int(c * lcm_den) for c in work]
        lead, const = ints[-1], ints[0]
        candidates = []
        if const == 0:
            candidates.append(Fraction(0))
        for pnum in _divisors(const) or [1]:
            for qden in _divisors(lead):
                candidates.append(Fraction(pnum, qden))
                candidates.append(Fraction(-pnum, qden))
    for cand in candidates:
        while len(work) > 1 and not _eval_coeffs(work, cand, dom):
            roots[cand] = roots.get(cand, 0) + 1
            work = _deflate(work, cand, dom)
    return roots, len(work) - 1


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def simultaneous_diagonalize(f1: QuadraticForm, f2: QuadraticForm):
    """Rational simultaneous diagonalization of a pencil.

    Returns a DiagonalPair carrying the congruence transform, or None when
    the pencil's characteristic polynomial does not split with full
    eigenspaces over the coefficient field (never a wrong answer).  The
    first form must be nondegenerate.
    """
    if f1.ring != f2.ring:
        raise ValueError("forms live in different rings")
    dom = f1.domain
    _check_char(dom)
    n = f1.n
    if mat_rank(f1.gram, dom) < n:
        raise DegenerateFormError(
            "first form is degenerate; drop its kernel variables and retry"
        )
    from .linalg import mat_inverse

    m = mat_mul(mat_inverse(f1.gram, dom), f2.gram, dom)
    chi = _char_poly(m, dom)
    roots, left = _roots_with_multiplicity(_poly_coeffs(chi, dom), dom)
    if left:
        return None  # characteristic polynomial does not split here
    ordered = sorted(roots.items(), key=lambda kv: _root_sort_key(kv[0]))
    columns = []
    a_diag = []
    b_diag = []
    for alpha, mult in ordered:
        shifted = [
            [dom.sub(m[i][j], alpha if i == j else dom.zero) for j in range(n)]
            for i in range(n)
        ]
        eig = kernel_basis(shifted, dom)
        if len(eig) != mult:
            return None  # defective eigenvalue: not simultaneously diagonalizable
        basis_cols = transpose(eig)  # n x mult
        restricted = mat_mul(mat_mul(transpose(basis_cols), f1.gram, dom), basis_cols, dom)
        s, diag = congruence_diagonalize(restricted, dom)
        if any(not d for d in diag):
            return None
        block = mat_mul(basis_cols, s, dom)
        for k in range(mult):
            columns.append([block[i][k] for i in range(n)])
            a_diag.append(diag[k])
            b_diag.append(dom.mul(alpha, diag[k]))
    t = transpose(columns)
    if mat_rank(t, dom) < n:
        return None
    for gram, expect in ((f1.gram, a_diag), (f2.gram, b_diag)):
        check = mat_mul(mat_mul(transpose(t), gram, dom), t, dom)
        for i in range(n):
            for j in range(n):
                want = expect[i] if i == j else dom.zero
                if check[i][j] != want:
                    return None
    return DiagonalPair(a_diag, b_diag, dom, transform=t)


def _root_sort_key(value):
    if isinstance(value, Fraction):
        return (value.numerator, value.denominator)
    return (int(value), 1)


# ---------------------------------------------------------------------------
# the Jacobian-minor ideal of a diagonal pair


def jacobian_minor_ideal(dp: DiagonalPair) -> Ideal:
    """Ideal of 2x2 Jacobian minors of the pair: (b_j/a_j - b_i/a_i) x_i x_j
    over all i < j, vanishing minors omitted.  Cuts out the singular locus of
    the pencil's base."""
    ring = dp.ring()
    dom = dp.domain
    gens = []
    for i in range(dp.n):
        for j in range(i + 1, dp.n):
            diff = dom.sub(dp.ratios[j], dp.ratios[i])
            if diff:
                mono = tuple(1 if k in (i, j) else 0 for k in range(dp.n))
                gens.append(Poly(ring, {mono: diff}, _clean=False))
    return Ideal(ring, gens)


def coordinate_primary_components(dp: DiagonalPair):
    """The coordinate ideals I_t, one per block: I_t omits exactly the
    variables of block t; their intersection is the Jacobian-minor ideal."""
    ring = dp.ring()
    comps = []
    for block in dp.blocks:
        inside = set(block)
        gens = [ring.var(i) for i in range(dp.n) if i not in inside]
        comps.append(Ideal(ring, gens))
    return comps


CERTIFIED_PRIME = "certified-prime"
INCONCLUSIVE = "inconclusive"


class PrimeCertificate:
    """One-sided primality certificate via singular-locus codimension."""

    __slots__ = ("status", "jacobian_codim")

    def __init__(self, status, jacobian_codim):
        self.status = status
        self.jacobian_codim = jacobian_codim

    @property
    def certified(self):
        return self.status == CERTIFIED_PRIME

    def to_dict(self):
        return {"status": self.status, "jacobian_codim": self.jacobian_codim}


def prime_certificate(dp: DiagonalPair) -> PrimeCertificate:
    """Certify that the pair generates a prime ideal when the singular locus
    has codimension above 4; otherwise report inconclusive (never 'not
    prime')."""
    codim = codimension(jacobian_minor_ideal(dp))
    status = CERTIFIED_PRIME if codim > 4 else INCONCLUSIVE
    return PrimeCertificate(status, codim)


class MinrankIdentityReport:
    """Machine check that the Jacobian ideal decomposes into coordinate
    ideals and that its codimension equals minrank both ways."""

    __slots__ = (
        "intersection_matches",
        "jacobian_codim",
        "formula_value",
        "bruteforce_value",
        "bruteforce_prime",
        "witness_rank_ok",
        "passed",
    )

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw[name])

    def to_dict(self):
        return {name: getattr(self, name) for name in self.__slots__}


def verify_minrank_identity(dp: DiagonalPair, prime: int = 101) -> MinrankIdentityReport:
    """Check (i) J equals the intersection of the coordinate ideals by
    mutual membership, (ii) codim J = n - max multiplicity, (iii) the same
    value comes out of the brute-force scan over F_prime."""
    jac = jacobian_minor_ideal(dp)
    comps = coordinate_primary_components(dp)
    inter = comps[0]
    for c in comps[1:]:
        inter = ideal_intersection(inter, c)
    matches = jac.equals(inter)
    codim = codimension(jac)
    formula = minrank_formula(dp)
    if isinstance(dp.domain, PrimeField):
        image = dp
    else:
        image = dp.reduce_mod(prime)
    q1, q2 = image.forms()
    brute = minrank_bruteforce(q1, q2)
    witness = minrank_formula(image).witness
    witness_ok = combine((q1, q2), witness).rank() == formula.value
    passed = matches and codim == formula.value and brute.value == formula.value and witness_ok
    return MinrankIdentityReport(
        intersection_matches=matches,
        jacobian_codim=codim,
        formula_value=formula.value,
        bruteforce_value=brute.value,
        bruteforce_prime=image.domain.p,
        witness_rank_ok=witness_ok,
        passed=passed,
    )


def _coerce(dom, value):
    if isinstance(value, Fraction):
        return dom(value.numerator, value.denominator)
    return dom.from_int(int(value))


# ---------------------------------------------------------------------------
# the full regularity chain for a quadric triple


class TripleRegularityReport:
    """Implication chain for three quadrics: collective strength evidence,
    minrank both ways, singular-locus codimension, primality certificate,
    and the independent codimension verdict."""

    __slots__ = (
        "scan_prime",
        "collective_strength_scan",
        "diagonalized",
        "pair_a",
        "pair_b",
        "minrank_formula_value",
        "minrank_scan_value",
        "jacobian_codim",
        "prime_status",
        "third_form_outside_pair_ideal",
        "regular_by_codim",
        "minrank_ge_5",
        "minrank_ge_4",
        "consistent",
    )

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw[name])

    def to_dict(self):
        out = {}
        for name in self.__slots__:
            v = getattr(self, name)
            if name in ("pair_a", "pair_b") and v is not None:
                v = [str(x) for x in v]
            out[name] = v
        return out


def quadric_triple_regularity_report(f1, f2, f3, scan_prime=11, threads=1):
    """Run the whole chain on a triple of quadratic forms.

    The certification path requires minrank >= 5 (a strength-2 combination
    forces rank >= 5); the weaker >= 4 reading is reported alongside rather
    than silently chosen.
    """
    ring = f1.ring
    dom = ring.domain
    if isinstance(dom, PrimeField):
        scan_forms = [f1, f2, f3]
        scan_dom = dom
    else:
        scan_dom = GF(scan_prime)
        scan_ring = Ring.flat(ring.nvars, scan_dom)
        scan_forms = [
            QuadraticForm(scan_ring, [[ _coerce(scan_dom, v) for v in row] for row in q.gram])
            for q in (f1, f2, f3)
        ]
    coll = collective_strength_quadrics(Pencil(scan_forms), threads=threads)

    dp = None
    try:
        dp = simultaneous_diagonalize(f1, f2)
    except DegenerateFormError:
        dp = None

    minrank_f = None
    jac_codim = None
    prime_status = None
    if dp is not None:
        minrank_f = minrank_formula(dp).value
        cert = prime_certificate(dp)
        jac_codim = cert.jacobian_codim
        prime_status = cert.status
    scan_pair = minrank_bruteforce(scan_forms[0], scan_forms[1], threads=threads)

    pair_ideal = Ideal(ring, [f1.to_poly(), f2.to_poly()])
    nf = normal_form(f3.to_poly(), pair_ideal.groebner())
    outside = bool(nf.terms)
    regular = None
    try:
        from .groebner import is_regular_sequence_codim

        regular = is_regular_sequence_codim([f1.to_poly(), f2.to_poly(), f3.to_poly()])
    except ValueError:
        regular = False

    reference = minrank_f if minrank_f is not None else scan_pair.value
    ge5 = reference >= 5
    ge4 = reference >= 4
    consistent = True
    if minrank_f is not None and scan_pair.value != minrank_f:
        consistent = False
    if ge5 and prime_status == CERTIFIED_PRIME and outside and regular is False:
        consistent = False
    return TripleRegularityReport(
        scan_prime=scan_dom.p,
        collective_strength_scan=coll,
        diagonalized=dp is not None,
        pair_a=dp.a if dp is not None else None,
        pair_b=dp.b if dp is not None else None,
        minrank_formula_value=minrank_f,
        minrank_scan_value=scan_pair.value,
        jacobian_codim=jac_codim,
        prime_status=prime_status,
        third_form_outside_pair_ideal=outside,
        regular_by_codim=regular,
        minrank_ge_5=ge5,
        minrank_ge_4=ge4,
        consistent=consistent,
    )
