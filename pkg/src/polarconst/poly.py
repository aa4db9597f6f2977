"""Sparse homogeneous polynomials in n variables over R or C.

A degree-k polynomial is a map from exponent multi-indices alpha (tuples of
nonnegative integers with |alpha| = k) to nonzero coefficients.  Coefficients
are stored as double-precision complex numbers; a Real-field polynomial has
exactly-zero imaginary parts everywhere, so evaluating it through the complex
arithmetic path and taking the real part is exact.

Canonical form: no zero coefficients, multi-indices iterated and serialized
in lexicographically descending order.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .spaces import Field

__all__ = [
    "HomogeneousPolynomial",
    "evaluate",
    "evaluate_many",
    "gradient",
    "compose_linear",
    "product",
    "complexify",
    "real_l1_example",
    "varopoulos",
    "random_polynomial",
    "multi_indices",
    "polynomial_to_json_dict",
    "polynomial_from_json_dict",
    "dumps_polynomial",
    "loads_polynomial",
    "load_polynomial",
    "save_polynomial",
]

# Relative magnitude below which a coefficient produced by arithmetic is
# treated as numerical noise and pruned from the canonical sparse form.
PRUNE_REL = 1e-15


class HomogeneousPolynomial:
    """Sparse k-homogeneous polynomial in ``dim`` variables."""

    __slots__ = ("degree", "dim", "field", "terms", "_tables", "_grad_tables")

    def __init__(self, degree, dim, field, terms):
        if degree < 0 or dim < 1:
            raise ValueError("degree must be >= 0 and dim >= 1")
        field = Field(field)
        canonical = {}
        for alpha, c in terms.items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != dim or any(a < 0 for a in alpha):
                raise ValueError(f"bad multi-index {alpha} for dim {dim}")
            if sum(alpha) != degree:
                raise ValueError(f"multi-index {alpha} has order {sum(alpha)}, expected {degree}")
            c = complex(c)
            if c == 0:
                continue
            if field is Field.REAL and c.imag != 0.0:
                raise ValueError("real-field polynomial with a nonreal coefficient")
            canonical[alpha] = canonical.get(alpha, 0j) + c
        self.degree = int(degree)
        self.dim = int(dim)
        self.field = field
        self.terms = {a: canonical[a] for a in sorted(canonical, reverse=True) if canonical[a] != 0}
        self._tables = None
        self._grad_tables = None

    # -- basic protocol ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.dim == other.dim
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.degree, self.dim, self.field, frozenset(self.terms.items())))

    def __call__(self, x):
        return evaluate(self, x)

    def __repr__(self):
        return (
            f"HomogeneousPolynomial(degree={self.degree}, dim={self.dim}, "
            f"field={self.field.value!r}, nterms={len(self.terms)})"
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for alpha, c in self.terms.items():
            mono = "*".join(
                f"z{j + 1}" if e == 1 else f"z{j + 1}^{e}" for j, e in enumerate(alpha) if e > 0
            )
            coeff = f"{c.real:g}" if c.imag == 0 else f"({c.real:g}{c.imag:+g}j)"
            parts.append(coeff if not mono else f"{coeff}*{mono}")
        return " + ".join(parts)

    @property
    def is_zero(self):
        return not self.terms

    @classmethod
    def _from_canonical(cls, degree, dim, field, items):
        """Trusted constructor for internally produced, already-valid terms."""
        self = object.__new__(cls)
        self.degree = int(degree)
        self.dim = int(dim)
        self.field = Field(field)
        self.terms = dict(sorted(items, key=lambda kv: kv[0], reverse=True))
        self._tables = None
        self._grad_tables = None
        return self

    # -- cached numeric tables ----------------------------------------------

    def monomial_tables(self):
        """(A, c): exponent matrix (m, dim) and coefficient vector (m,)."""
        if self._tables is None:
            m = len(self.terms)
            A = np.zeros((m, self.dim), dtype=np.int64)
            c = np.zeros(m, dtype=np.complex128)
            for i, (alpha, coeff) in enumerate(self.terms.items()):
                A[i] = alpha
                c[i] = coeff
            self._tables = (A, c)
        return self._tables

    def gradient_tables(self):
        """Per-variable (A_j, c_j) for the formal partial derivatives."""
        if self._grad_tables is None:
            A, c = self.monomial_tables()
            tabs = []
            for j in range(self.dim):
                mask = A[:, j] >= 1
                Aj = A[mask].copy()
                cj = c[mask] * Aj[:, j]
                Aj[:, j] -= 1
                tabs.append((Aj, cj))
            self._grad_tables = tabs
        return self._grad_tables


# -- evaluation --------------------------------------------------------------


def _coerce_point(P, x):
    v = np.asarray(x)
    if v.ndim != 1 or v.shape[0] != P.dim:
        raise ValueError(f"expected a point of dimension {P.dim}, got shape {v.shape}")
    return v.astype(np.complex128, copy=False), np.iscomplexobj(np.asarray(x))


def evaluate(P: HomogeneousPolynomial, x):
    """P(x) = sum_alpha c_alpha * prod_j x_j^alpha_j.

    Returns a float for a Real-field polynomial at a real point (the complex
    arithmetic path is used throughout; its imaginary part is exactly zero
    in that case), a complex number otherwise.
    """
    v, x_complex = _coerce_point(P, x)
    A, c = P.monomial_tables()
    if len(c) == 0:
        val = 0j
    else:
        val = complex(np.prod(v[None, :] ** A, axis=1) @ c)
    if P.field is Field.REAL and not x_complex:
        return val.real
    return val


def evaluate_many(P: HomogeneousPolynomial, X, chunk=8192):
    """Evaluate P on the rows of X (shape (B, dim)); returns a (B,) array."""
    X = np.asarray(X)
    if X.ndim != 2 or X.shape[1] != P.dim:
        raise ValueError(f"expected points of dimension {P.dim}, got shape {X.shape}")
    Xc = X.astype(np.complex128, copy=False)
    A, c = P.monomial_tables()
    out = np.zeros(X.shape[0], dtype=np.complex128)
    if len(c):
        for lo in range(0, X.shape[0], chunk):
            blk = Xc[lo : lo + chunk]
            out[lo : lo + chunk] = np.prod(blk[:, None, :] ** A[None, :, :], axis=2) @ c
    if P.field is Field.REAL and not np.iscomplexobj(X):
        return out.real
    return out


def gradient(P: HomogeneousPolynomial, x):
    """The formal gradient (d P / d x_j)_j; satisfies <grad P(x), x> = k P(x)."""
    v, x_complex = _coerce_point(P, x)
    g = np.zeros(P.dim, dtype=np.complex128)
    for j, (Aj, cj) in enumerate(P.gradient_tables()):
        if len(cj):
            g[j] = np.prod(v[None, :] ** Aj, axis=1) @ cj
    if P.field is Field.REAL and not x_complex:
        return g.real
    return g


# -- array-backed term arithmetic ---------------------------------------------
#
# Intermediate polynomials during products and substitutions are kept as an
# (exponent-rows, coefficients) pair and deduplicated with np.unique; this is
# what keeps substitution into many variables (wide quotient matrices)
# tractable.


def _dedupe(E, c):
    if len(c) == 0:
        return E, c
    Eu, inv = np.unique(E, axis=0, return_inverse=True)
    cu = np.zeros(len(Eu), dtype=np.complex128)
    np.add.at(cu, inv, c)
    return Eu, cu


def _mul_arrays(E1, c1, E2, c2):
    if len(c1) == 0 or len(c2) == 0:
        m = E1.shape[1]
        return np.zeros((0, m), dtype=np.int64), np.zeros(0, dtype=np.complex128)
    E = (E1[:, None, :] + E2[None, :, :]).reshape(-1, E1.shape[1])
    c = (c1[:, None] * c2[None, :]).ravel()
    return _dedupe(E, c)


def _arrays_to_terms(E, c):
    if len(c) == 0:
        return {}
    cutoff = PRUNE_REL * float(np.abs(c).max())
    keep = np.abs(c) > cutoff
    rows = E[keep].tolist()
    vals = c[keep].tolist()
    return {tuple(r): v for r, v in zip(rows, vals)}


def _arrays_to_poly(degree, dim, field, E, c):
    return HomogeneousPolynomial._from_canonical(degree, dim, field, _arrays_to_terms(E, c).items())


def _compose_sparse(P, Mc, m, out_field):
    # cache powers of each substituted row ell_i = sum_j M[i, j] z_j
    max_exp = [0] * P.dim
    for alpha in P.terms:
        for i, a in enumerate(alpha):
            max_exp[i] = max(max_exp[i], a)
    one = (np.zeros((1, m), dtype=np.int64), np.ones(1, dtype=np.complex128))
    powers = []
    for i in range(P.dim):
        row = Mc[i]
        nz = np.nonzero(row)[0]
        lin = (np.eye(m, dtype=np.int64)[nz], row[nz])
        pows = [one]
        for _ in range(max_exp[i]):
            pows.append(_mul_arrays(*pows[-1], *lin))
        powers.append(pows)

    E_parts, c_parts = [], []
    for alpha, coeff in P.terms.items():
        cur = None
        for i, a in enumerate(alpha):
            if a == 0:
                continue
            cur = powers[i][a] if cur is None else _mul_arrays(*cur, *powers[i][a])
        if cur is None:
            cur = one
        E_parts.append(cur[0])
        c_parts.append(cur[1] * coeff)
    E, c = _dedupe(np.concatenate(E_parts), np.concatenate(c_parts))
    return _arrays_to_poly(P.degree, m, out_field, E, c)


def _compose_dense(P, Mc, m, out_field):
    # full coefficient tensor on m^k entries; wins when m is wide and k small
    import itertools

    k = P.degree
    letters = "abcdefgh"[:k]
    T = np.zeros((m,) * k, dtype=np.complex128)
    for alpha, coeff in P.terms.items():
        factors = []
        for i, a in enumerate(alpha):
            factors.extend([Mc[i]] * a)
        spec = ",".join(letters) + "->" + letters
        T += coeff * np.einsum(spec, *factors)
    S = np.zeros_like(T)
    for perm in itertools.permutations(range(k)):
        S += T.transpose(perm)
    S /= math.factorial(k)

    combos = np.array(list(itertools.combinations_with_replacement(range(m), k)), dtype=np.int64)
    vals = S[tuple(combos[:, i] for i in range(k))]
    E = np.zeros((len(combos), m), dtype=np.int64)
    np.add.at(E, (np.arange(len(combos))[:, None], combos), 1)
    fact = np.array([math.factorial(i) for i in range(k + 1)], dtype=np.float64)
    count = fact[k] / np.prod(fact[E], axis=1)  # distinct orderings of each monomial
    return _arrays_to_poly(k, m, out_field, E, vals * count)


def compose_linear(P: HomogeneousPolynomial, M) -> HomogeneousPolynomial:
    """The polynomial Q(z) = P(M z), expanded to canonical sparse form.

    ``M`` has shape (P.dim, m): it maps m new variables to the P.dim inputs.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != P.dim:
        raise ValueError(f"matrix shape {M.shape} does not map into dimension {P.dim}")
    m = M.shape[1]
    out_field = Field.COMPLEX if (P.field is Field.COMPLEX or np.iscomplexobj(M)) else Field.REAL
    Mc = M.astype(np.complex128, copy=False)
    if P.is_zero:
        return HomogeneousPolynomial(P.degree, m, out_field, {})
    if P.degree == 0:
        return HomogeneousPolynomial(0, m, out_field, {(0,) * m: P.terms[(0,) * P.dim]})
    if m >= 12 and P.degree <= 8 and m**P.degree <= 5_000_000:
        return _compose_dense(P, Mc, m, out_field)
    return _compose_sparse(P, Mc, m, out_field)


def product(P: HomogeneousPolynomial, Q: HomogeneousPolynomial) -> HomogeneousPolynomial:
    """Pointwise product; degree adds, coefficients convolve."""
    if P.dim != Q.dim:
        raise ValueError("product requires matching dimensions")
    if P.field != Q.field:
        raise ValueError("product requires matching fields")
    E, c = _mul_arrays(*P.monomial_tables(), *Q.monomial_tables())
    return _arrays_to_poly(P.degree + Q.degree, P.dim, P.field, E, c)


def complexify(P: HomogeneousPolynomial) -> HomogeneousPolynomial:
    """The same coefficient map viewed over C; restriction to R^n equals P."""
    if P.field is Field.COMPLEX:
        raise ValueError("polynomial is already complex")
    return HomogeneousPolynomial(P.degree, P.dim, Field.COMPLEX, dict(P.terms))


# -- constructions -------------------------------------------------------------


def real_l1_example(m: int) -> HomogeneousPolynomial:
    """The degree-8m real polynomial in two variables

        (x y)^(2m) * sum_{j=0}^{2m} C(4m, 2j) (-1)^j y^(2j) x^(4m-2j)

    with exact integer coefficients.  Its sup norm on the real l_1 sphere is
    2^(-6m), attained at (1/2, 1/2), while its complex extension reaches
    2^(-(4m+1)) in modulus at (1/2, i/2).
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    terms = {}
    for j in range(2 * m + 1):
        coeff = float((-1) ** j * math.comb(4 * m, 2 * j))
        alpha = (6 * m - 2 * j, 2 * m + 2 * j)
        terms[alpha] = coeff
    return HomogeneousPolynomial(8 * m, 2, Field.REAL, terms)


def varopoulos() -> HomogeneousPolynomial:
    """Varopoulos' quadratic z1^2 + z2^2 + z3^2 - 2 z1 z2 - 2 z1 z3 - 2 z2 z3 on C^3."""
    terms = {
        (2, 0, 0): 1.0,
        (0, 2, 0): 1.0,
        (0, 0, 2): 1.0,
        (1, 1, 0): -2.0,
        (1, 0, 1): -2.0,
        (0, 1, 1): -2.0,
    }
    return HomogeneousPolynomial(2, 3, Field.COMPLEX, terms)


def multi_indices(k: int, n: int):
    """All multi-indices alpha with |alpha| = k in n slots, lexicographically descending."""
    if n == 1:
        yield (k,)
        return
    for a in range(k, -1, -1):
        for rest in multi_indices(k - a, n - 1):
            yield (a,) + rest


def random_polynomial(k: int, n: int, field, seed) -> HomogeneousPolynomial:
    """Dense polynomial with i.i.d. standard-normal coefficients, deterministic in seed."""
    if k < 0 or n < 1:
        raise ValueError("need k >= 0 and n >= 1")
    field = Field(field)
    rng = np.random.default_rng(seed)
    alphas = list(multi_indices(k, n))
    re = rng.standard_normal(len(alphas))
    if field is Field.COMPLEX:
        im = rng.standard_normal(len(alphas))
        coeffs = re + 1j * im
    else:
        coeffs = re
    return HomogeneousPolynomial(k, n, field, dict(zip(alphas, coeffs)))


# -- JSON interchange ----------------------------------------------------------


def polynomial_to_json_dict(P: HomogeneousPolynomial) -> dict:
    return {
        "field": P.field.value,
        "degree": P.degree,
        "dim": P.dim,
        "terms": [
            {"alpha": list(alpha), "re": c.real, "im": c.imag} for alpha, c in P.terms.items()
        ],
    }


def polynomial_from_json_dict(d: dict) -> HomogeneousPolynomial:
    try:
        field = Field(d["field"])
        degree = int(d["degree"])
        dim = int(d["dim"])
        raw = d["terms"]
    except (KeyError, ValueError, TypeError) as exc:
        raise ValueError(f"bad polynomial object: {exc}") from exc
    terms = {}
    for i, t in enumerate(raw):
        try:
            alpha = tuple(int(a) for a in t["alpha"])
            c = complex(float(t["re"]), float(t.get("im", 0.0)))
        except (KeyError, ValueError, TypeError) as exc:
            raise ValueError(f"term {i}: malformed entry ({exc})") from exc
        if len(alpha) != dim:
            raise ValueError(f"term {i}: alpha {list(alpha)} has {len(alpha)} slots, dim is {dim}")
        if sum(alpha) != degree:
            raise ValueError(f"term {i}: |alpha| = {sum(alpha)} does not match degree {degree}")
        if field is Field.REAL and c.imag != 0.0:
            raise ValueError(f"term {i}: nonzero imaginary part in a real polynomial")
        terms[alpha] = terms.get(alpha, 0j) + c
    return HomogeneousPolynomial(degree, dim, field, terms)


def dumps_polynomial(P: HomogeneousPolynomial) -> str:
    """Serialize with one term per line, in canonical order."""
    d = polynomial_to_json_dict(P)
    lines = [
        "{",
        f'  "field": {json.dumps(d["field"])},',
        f'  "degree": {d["degree"]},',
        f'  "dim": {d["dim"]},',
        '  "terms": [',
    ]
    body = [
        f'    {{"alpha": {json.dumps(t["alpha"])}, "re": {json.dumps(t["re"])}, '
        f'"im": {json.dumps(t["im"])}}}'
        for t in d["terms"]
    ]
    lines.append(",\n".join(body))
    lines += ["  ]", "}"]
    return "\n".join(lines)


def loads_polynomial(text: str) -> HomogeneousPolynomial:
    return polynomial_from_json_dict(json.loads(text))


def load_polynomial(path) -> HomogeneousPolynomial:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_polynomial(fh.read())


def save_polynomial(P: HomogeneousPolynomial, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_polynomial(P) + "\n")
