"""Strength certification machinery over column-graded matrix rings.

Three ingredients rule out strength-1 combinations of a cubic minor family:
column-homogeneous decomposition bookkeeping (every off-(1,1,1) component of
a*b + c*d must vanish), classification of column-homogeneous linear pairs
into three normal forms, and per-class exclusion matrices whose exact kernel
over Q must be trivial.  A definitional brute-force strength search over
tiny prime fields serves as the independent oracle for quadrics.
"""

from __future__ import annotations

from .domains import PrimeField
from .groebner import Ideal, normal_form
from .linalg import kernel_basis, mat_inverse, mat_rank
from .orders import DEGREVLEX
from .poly import Grading, Poly, Ring

SAME_COLUMN = "same-column"
PARALLEL_ROWS = "parallel-rows"
SKEW = "skew"

_CLASS_REPRESENTATIVES = {
    SAME_COLUMN: ((1, 1), (2, 1)),
    PARALLEL_ROWS: ((1, 1), (1, 2)),
    SKEW: ((1, 1), (2, 2)),
}


class GradedLinearForm:
    """Linear form homogeneous in the column grading: it lives in a single
    column of the matrix ring."""

    __slots__ = ("poly", "column", "row_vector")

    def __init__(self, poly: Poly):
        ring = poly.ring
        if ring.matrix_shape is None:
            raise ValueError("graded linear forms need a matrix ring")
        if not poly.terms or poly.degree() != 1 or not poly.is_homogeneous():
            raise ValueError("expected a nonzero linear form")
        grading = Grading.by_columns(ring)
        deg = poly.multidegree(grading)
        if deg is None or sum(deg) != 1:
            raise ValueError("linear form is not column-homogeneous")
        self.poly = poly
        self.column = deg.index(1) + 1  # 1-based
        rows, cols = ring.matrix_shape
        dom = ring.domain
        vec = [dom.zero] * rows
        for m, c in poly.terms.items():
            var = m.index(1)
            vec[var // cols] = c
        self.row_vector = vec

    def __repr__(self):
        return f"GradedLinearForm({self.poly}, column {self.column})"


class LinearPairClass:
    """Class tag plus a GL witness normalizing the pair to its
    representative."""

    __slots__ = ("tag", "substitution", "representative")

    def __init__(self, tag, substitution, representative):
        self.tag = tag
        self.substitution = substitution
        self.representative = representative

    def apply(self, poly: Poly) -> Poly:
        return poly.substitute(self.substitution)

    def __repr__(self):
        return f"LinearPairClass({self.tag})"


def _complete_rows(vectors, n, dom):
    rows = [list(v) for v in vectors]
    for i in range(n):
        unit = [dom.one if j == i else dom.zero for j in range(n)]
        trial = rows + [unit]
        if mat_rank(trial, dom) == len(trial):
            rows = trial
        if len(rows) == n:
            break
    return rows


def classify_linear_pair(l1: GradedLinearForm, l2: GradedLinearForm) -> LinearPairClass:
    """Sort an independent column-homogeneous pair into one of the three
    normal forms (same column / parallel rows / skew) and build the witness
    substitution carrying it onto the representative pair."""
    ring = l1.poly.ring
    if ring != l2.poly.ring:
        raise ValueError("forms live in different rings")
    dom = ring.domain
    rows, cols = ring.matrix_shape
    if mat_rank([l1.row_vector, l2.row_vector], dom) < 2 and l1.column == l2.column:
        raise ValueError("forms are linearly dependent")

    parallel = mat_rank([l1.row_vector, l2.row_vector], dom) < 2
    if l1.column == l2.column:
        tag = SAME_COLUMN
    elif parallel:
        tag = PARALLEL_ROWS
    else:
        tag = SKEW

    # row transform: v1 -> e1 (and v2 -> e2 unless parallel)
    if tag == PARALLEL_ROWS:
        seed = [l1.row_vector]
    else:
        seed = [l1.row_vector, l2.row_vector]
    p = _complete_rows(seed, rows, dom)
    a = mat_inverse(p, dom)

    # column permutation c1 -> 1, c2 -> 2 (plus a scaling for parallel rows)
    c1, c2 = l1.column, l2.column
    col_map = {}
    if tag == SAME_COLUMN:
        col_map[c1] = 1
        nxt = 2
        for c in range(1, cols + 1):
            if c != c1:
                col_map[c] = nxt
                nxt += 1
    else:
        col_map[c1] = 1
        col_map[c2] = 2
        nxt = 3
        for c in range(1, cols + 1):
            if c not in (c1, c2):
                col_map[c] = nxt
                nxt += 1
    col_scale = {c: dom.one for c in range(1, cols + 1)}
    if tag == PARALLEL_ROWS:
        # l2 = s * (v1 in column c2); rescale that column so it lands on x1_2
        ratio = None
        for x, y in zip(l1.row_vector, l2.row_vector):
            if x:
                ratio = dom.div(y, x)
                break
        col_scale[c2] = dom.inv(ratio)

    substitution = {}
    for i in range(rows):
        for j0 in range(cols):
            src = i * cols + j0
            target_col = col_map[j0 + 1] - 1
            img_terms = {}
            for k in range(rows):
                coeff = dom.mul(a[i][k], col_scale[j0 + 1])
                if coeff:
                    mono = [0] * ring.nvars
                    mono[k * cols + target_col] = 1
                    img_terms[tuple(mono)] = coeff
            substitution[src] = Poly(ring, img_terms, _clean=False)

    rep = _CLASS_REPRESENTATIVES[tag]
    representative = tuple(
        ring.var(ring.entry_index(r, c)) for r, c in rep
    )
    return LinearPairClass(tag, substitution, representative)


# ---------------------------------------------------------------------------
# column-homogeneous decompositions of a (1,1,1)-cubic


_LINEAR_DEGREES = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
_QUADRIC_DEGREES = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))


class GradedDecomposition:
    """Column-homogeneous pieces of a candidate strength-1 decomposition
    a*b + c*d of a (1,1,1)-form: the linear factors split into three
    single-column pieces, the quadrics into six."""

    __slots__ = ("ring", "grading", "a", "b", "c", "d")

    def __init__(self, ring, a=None, b=None, c=None, d=None):
        if ring.matrix_shape is None or ring.matrix_shape[1] != 3:
            raise ValueError("decompositions live in a three-column matrix ring")
        self.ring = ring
        self.grading = Grading.by_columns(ring)
        self.a = self._typed(a or {}, _LINEAR_DEGREES, 1)
        self.c = self._typed(c or {}, _LINEAR_DEGREES, 1)
        self.b = self._typed(b or {}, _QUADRIC_DEGREES, 2)
        self.d = self._typed(d or {}, _QUADRIC_DEGREES, 2)

    def _typed(self, pieces, allowed, total_degree):
        out = {}
        for deg in allowed:
            out[deg] = self.ring.zero()
        for deg, f in pieces.items():
            deg = tuple(deg)
            if deg not in out:
                raise ValueError(f"multidegree {deg} is not allowed here")
            if not f.terms:
                continue
            if f.degree() != total_degree or f.multidegree(self.grading) != deg:
                raise ValueError(f"piece at {deg} is not homogeneous of that multidegree")
            out[deg] = f
        return out

    def linear_a(self):
        return _sum(self.ring, self.a.values())

    def linear_c(self):
        return _sum(self.ring, self.c.values())

    def quadric_b(self):
        return _sum(self.ring, self.b.values())

    def quadric_d(self):
        return _sum(self.ring, self.d.values())

    def product(self) -> Poly:
        return self.linear_a() * self.quadric_b() + self.linear_c() * self.quadric_d()

    def target_component(self) -> Poly:
        """The (1,1,1) part assembled from the six contributing pairs."""
        pairs = (
            (self.a[(1, 0, 0)], self.b[(0, 1, 1)]),
            (self.a[(0, 1, 0)], self.b[(1, 0, 1)]),
            (self.a[(0, 0, 1)], self.b[(1, 1, 0)]),
            (self.c[(1, 0, 0)], self.d[(0, 1, 1)]),
            (self.c[(0, 1, 0)], self.d[(1, 0, 1)]),
            (self.c[(0, 0, 1)], self.d[(1, 1, 0)]),
        )
        return _sum(self.ring, [g * h for g, h in pairs])


def _sum(ring, polys):
    total = ring.zero()
    for f in polys:
        total = total + f
    return total


class GradingCheck:
    __slots__ = ("ok", "violations", "product")

    def __init__(self, ok, violations, product):
        self.ok = ok
        self.violations = violations
        self.product = product


def grading_constraint_check(dec: GradedDecomposition) -> GradingCheck:
    """A decomposition is admissible when a*b + c*d is supported purely in
    multidegree (1,1,1); the violation list names every off-degree component
    that survives."""
    product = dec.product()
    violations = [
        d for d in product.multidegree_support(dec.grading) if d != (1, 1, 1)
    ]
    return GradingCheck(not violations, violations, product)


# ---------------------------------------------------------------------------
# exclusion matrices


class ExclusionReport:
    """Family reduced modulo one class ideal: surviving monomials, the exact
    coefficient matrix (rows = monomials, columns = family members) and its
    kernel."""

    __slots__ = ("ideal_gens", "monomials", "matrix", "kernel_dim", "kernel")

    def __init__(self, ideal_gens, monomials, matrix, kernel):
        self.ideal_gens = ideal_gens
        self.monomials = monomials
        self.matrix = matrix
        self.kernel = kernel
        self.kernel_dim = len(kernel)

    @property
    def trivial_kernel(self):
        return self.kernel_dim == 0

    def row_count(self):
        return len(self.monomials)

    def to_dict(self):
        return {
            "ideal": [str(g) for g in self.ideal_gens],
            "monomial_rows": len(self.monomials),
            "kernel_dim": self.kernel_dim,
        }


def exclusion_matrix(family, class_ideal: Ideal) -> ExclusionReport:
    """Reduce every family member modulo the class ideal and compute the
    exact kernel of the surviving-monomial coefficient matrix; a trivial
    kernel means no nontrivial combination of the family lies in the
    ideal."""
    ring = family[0].ring
    dom = ring.domain
    basis = class_ideal.groebner()
    reduced = [normal_form(f, basis) for f in family]
    monos = set()
    for f in reduced:
        monos.update(f.terms)
    monomials = sorted(monos, key=DEGREVLEX.key, reverse=True)
    matrix = [
        [f.terms.get(m, dom.zero) for f in reduced]
        for m in monomials
    ]
    if not matrix:
        # everything reduced to zero: full kernel
        kern = [
            [dom.one if i == j else dom.zero for j in range(len(family))]
            for i in range(len(family))
        ]
        return ExclusionReport(class_ideal.gens, [], [], kern)
    kern = kernel_basis(matrix, dom)
    return ExclusionReport(class_ideal.gens, monomials, matrix, kern)


def class_ideals(ring: Ring):
    """The three normal-form pair ideals, keyed by class tag."""
    out = {}
    for tag, ((r1, c1), (r2, c2)) in _CLASS_REPRESENTATIVES.items():
        gens = [
            ring.var(ring.entry_index(r1, c1)),
            ring.var(ring.entry_index(r2, c2)),
        ]
        out[tag] = Ideal(ring, gens)
    return out


def all_variable_pair_ideals(ring: Ring):
    """Exhaustive mode: every ideal generated by two distinct variables,
    with its class tag (belt-and-braces coverage of the symmetry argument)."""
    rows, cols = ring.matrix_shape
    out = []
    n = ring.nvars
    for u in range(n):
        for v in range(u + 1, n):
            ru, cu = divmod(u, cols)
            rv, cv = divmod(v, cols)
            if cu == cv:
                tag = SAME_COLUMN
            elif ru == rv:
                tag = PARALLEL_ROWS
            else:
                tag = SKEW
            out.append((tag, Ideal(ring, [ring.var(u), ring.var(v)])))
    return out


def strength_one_excluded(family, ideals) -> bool:
    """True when every class ideal's exclusion kernel is trivial: no
    nontrivial combination of the family falls into any class ideal, so no
    combination has an admissible strength-1 decomposition."""
    return all(exclusion_matrix(family, ideal).trivial_kernel for ideal in ideals)


# ---------------------------------------------------------------------------
# definitional brute-force strength for small quadrics


_PRODUCT_CACHE: dict = {}
_SUM_CACHE: dict = {}


def _poly_key(terms):
    return tuple(sorted(terms.items()))


def _linear_forms(ring):
    """Projective representatives of nonzero linear forms over F_p."""
    dom = ring.domain
    p = dom.p
    n = ring.nvars
    forms = []
    for lead in range(n):
        tails = [[]]
        for _ in range(n - lead - 1):
            tails = [t + [v] for t in tails for v in range(p)]
        for t in tails:
            vec = [0] * lead + [1] + t
            forms.append(vec)
    return forms


def _products(ring):
    """All nonzero quadrics of the shape scalar * l1 * l2 as term dicts."""
    cache_key = (ring.domain.p, ring.nvars)
    cached = _PRODUCT_CACHE.get(cache_key)
    if cached is not None:
        return cached
    dom = ring.domain
    p = dom.p
    n = ring.nvars
    lins = _linear_forms(ring)

    def mul_vecs(u, v):
        terms = {}
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                if not v[j]:
                    continue
                mono = [0] * n
                mono[i] += 1
                mono[j] += 1
                mono = tuple(mono)
                terms[mono] = (terms.get(mono, 0) + u[i] * v[j]) % p
        return {m: c for m, c in terms.items() if c}

    polys = []
    keys = set()
    for i, u in enumerate(lins):
        for v in lins[i:]:
            base = mul_vecs(u, v)
            for s in range(1, p):
                terms = {m: (c * s) % p for m, c in base.items()}
                k = _poly_key(terms)
                if k not in keys:
                    keys.add(k)
                    polys.append(terms)
    result = (polys, keys)
    _PRODUCT_CACHE[cache_key] = result
    return result


def _strength_le_one_keys(ring):
    """Keys of every quadric expressible with at most two products."""
    cache_key = (ring.domain.p, ring.nvars)
    cached = _SUM_CACHE.get(cache_key)
    if cached is not None:
        return cached
    p = ring.domain.p
    polys, keys = _products(ring)
    sums = set(keys)
    sums.add(())
    m = len(polys)
    for i in range(m):
        pi = polys[i]
        for j in range(i, m):
            terms = dict(pi)
            for mono, c in polys[j].items():
                s = (terms.get(mono, 0) + c) % p
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
            sums.add(_poly_key(terms))
    _SUM_CACHE[cache_key] = sums
    return sums


def strength_bruteforce_small(f: Poly, s_max: int = 2):
    """Definitional strength of a small quadric over F_3 or F_5: least s
    with a decomposition into s+1 products of linear forms, or None when
    every decomposition needs more than s_max products.

    Exhaustive over all products of linear forms; the two-product stage for
    p=5 and the three-product stage beyond p=3 blow up combinatorially and
    are rejected.
    """
    ring = f.ring
    dom = ring.domain
    if not isinstance(dom, PrimeField) or dom.p not in (3, 5):
        raise ValueError("brute-force strength supports F_3 and F_5 only")
    if ring.nvars > 4:
        raise ValueError("brute-force strength supports at most 4 variables")
    if not f.terms:
        return -1
    if f.degree() != 2 or not f.is_homogeneous():
        raise ValueError("brute-force strength expects a homogeneous quadric")
    key = _poly_key(f.terms)
    polys, product_keys = _products(ring)
    if key in product_keys:
        return 0
    if s_max < 1:
        return None
    p = dom.p
    if p == 3:
        le_one = _strength_le_one_keys(ring)
        if key in le_one:
            return 1
        if s_max < 2:
            return None
        for q in polys:
            terms = dict(f.terms)
            for mono, c in q.items():
                s = (terms.get(mono, 0) - c) % p
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
            if _poly_key(terms) in le_one:
                return 2
        return None
    # p == 5: pairwise meet-in-the-middle only
    for q in polys:
        terms = dict(f.terms)
        for mono, c in q.items():
            s = (terms.get(mono, 0) - c) % p
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        if not terms or _poly_key(terms) in product_keys:
            return 1
    if s_max >= 2:
        raise ValueError("two-product search over F_5 is combinatorially out of reach")
    return None
