"""Exact algebra for Seifert matrices.

Integer Laurent polynomials, the Alexander polynomial det(V - tV^T), the
signature of V + V^T, genus bounds and the elementary moves that generate
S-equivalence.  Everything here is exact: determinants use fraction-free
(Bareiss) elimination over Z[t] and signatures use congruence
diagonalization over the rationals.
"""

from fractions import Fraction
from math import ceil

from .errors import DomainError


class LaurentPoly:
    """An integer Laurent polynomial in one variable ``t``.

    Stored as a mapping ``exponent -> coefficient`` without zero entries.
    Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e):
        return cls({e: c})

    @classmethod
    def from_coefficients(cls, coeffs, shift=0):
        """Build from a list of coefficients of t^shift, t^(shift+1), ..."""
        return cls({shift + i: c for i, c in enumerate(coeffs)})

    # -- basic queries ------------------------------------------------
    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def min_exponent(self):
        return min(self._terms) if self._terms else 0

    def max_exponent(self):
        return max(self._terms) if self._terms else 0

    def degree(self):
        """Degree spread: highest exponent minus lowest exponent."""
        if not self._terms:
            return 0
        return self.max_exponent() - self.min_exponent()

    def coefficients(self):
        """Dense coefficient list from the lowest to the highest exponent."""
        if not self._terms:
            return []
        lo, hi = self.min_exponent(), self.max_exponent()
        return [self._terms.get(e, 0) for e in range(lo, hi + 1)]

    def __call__(self, t):
        """Evaluate at ``t`` (an int or Fraction; negative exponents allowed)."""
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * Fraction(t) ** e
        return total.numerator if total.denominator == 1 else total

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, m):
        """Multiply by t^m."""
        return LaurentPoly({e + m: c for e, c in self._terms.items()})

    def exact_div(self, other):
        """Exact division in Z[t, 1/t]; raises ArithmeticError if not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._terms)
        quot = {}
        d_hi = other.max_exponent()
        d_lead = other._terms[d_hi]
        d_lo = other.min_exponent()
        while rem:
            hi = max(rem)
            if hi - d_hi < min(rem) - d_lo:
                # the lowest remaining term can no longer be cancelled
                raise ArithmeticError("polynomial division is not exact")
            c = rem[hi]
            if c % d_lead:
                raise ArithmeticError("polynomial division is not exact")
            q = c // d_lead
            e = hi - d_hi
            quot[e] = quot.get(e, 0) + q
            for de, dc in other._terms.items():
                key = e + de
                val = rem.get(key, 0) - q * dc
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
            if rem and max(rem) >= hi:
                raise ArithmeticError("polynomial division did not progress")
        return LaurentPoly(quot)

    # -- normal forms -------------------------------------------------
    def canonical(self):
        """Representative modulo units +-t^m: lowest exponent 0, lowest coefficient positive."""
        if not self._terms:
            return self
        lo = self.min_exponent()
        sign = 1 if self._terms[lo] > 0 else -1
        return LaurentPoly({e - lo: sign * c for e, c in self._terms.items()})

    def reversed(self):
        """The polynomial with t replaced by 1/t."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def is_palindromic(self):
        """True if equal to its own reversal up to units."""
        return self.canonical() == self.reversed().canonical()

    def conway_normalized(self):
        """Symmetric representative with value +1 at t = 1, when one exists.

        Knot Alexander polynomials have even degree spread; the returned
        polynomial is centred at exponent 0 and satisfies p(1) = 1.
        Returns None if the spread is odd or p(1) is not +-1.
        """
        if not self._terms or self.degree() % 2:
            return None
        p = self.shift(-(self.min_exponent() + self.degree() // 2))
        v = p(1)
        if v == 1:
            return p
        if v == -1:
            return -p
        return None

    # -- comparison / display ----------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def to_json(self):
        return {
            "coefficients": {str(e): c for e, c in sorted(self._terms.items())},
            "text": str(self),
        }

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "t" if e == 1 else "t^%d" % e
                body = var if mag == 1 else "%d%s" % (mag, var)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "LaurentPoly(%r)" % (self._terms,)


T = LaurentPoly.monomial(1, 1)


# ---------------------------------------------------------------------------
# matrices

def as_matrix(m):
    """Return a square matrix as a list of lists of ints, checking its shape."""
    rows = [list(r) for r in m]
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DomainError("matrix is not square")
        for x in r:
            if int(x) != x:
                raise DomainError("matrix entries must be integers")
    return [[int(x) for x in r] for r in rows]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def matmul(a, b):
    n, k = len(a), len(b)
    if n == 0:
        return []
    p = len(b[0]) if k else 0
    return [[sum(a[i][l] * b[l][j] for l in range(k)) for j in range(p)] for i in range(n)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def bareiss_det(m, one=1, zero=0, divide=None):
    """Determinant by fraction-free Gaussian elimination.

    Works over any integral domain given its ``one``/``zero`` and an exact
    ``divide(a, b)``; defaults are for Python integers.
    """
    if divide is None:
        divide = lambda a, b: a // b  # noqa: E731 - exact for Bareiss steps
    n = len(m)
    if n == 0:
        return one
    a = [list(r) for r in m]
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == zero:
            swap = next((i for i in range(k + 1, n) if a[i][k] != zero), None)
            if swap is None:
                return zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def int_det(m):
    """Exact determinant of an integer matrix."""
    return bareiss_det(as_matrix(m))


def alexander_raw(V):
    """det(V - tV^T) as a Laurent polynomial, before canonicalization."""
    V = as_matrix(V)
    n = len(V)
    M = [[LaurentPoly({0: V[i][j], 1: -V[j][i]}) for j in range(n)] for i in range(n)]
    return bareiss_det(M, one=LaurentPoly.constant(1), zero=LaurentPoly(),
                       divide=lambda a, b: a.exact_div(b))


def alexander(V):
    """Canonical Alexander polynomial of a Seifert matrix."""
    return alexander_raw(V).canonical()


def symmetric_signature(S):
    """Signature n+ - n- of a symmetric rational matrix, computed exactly."""
    a = [[Fraction(x) for x in row] for row in S]
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise DomainError("matrix is not symmetric")
    pos = neg = 0
    while a:
        n = len(a)
        piv = next((i for i in range(n) if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(n) for j in range(n) if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # add row/column j to row/column i: diagonal becomes 2*a[i][j]
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [k for k in range(n) if k != piv]
        a = [[a[r][c] - a[r][piv] * a[piv][c] / p for c in rest] for r in rest]
    return pos - neg


def signature(V):
    """Signature of V + V^T."""
    V = as_matrix(V)
    n = len(V)
    return symmetric_signature([[V[i][j] + V[j][i] for j in range(n)] for i in range(n)])


def determinant_invariant(V):
    """|Delta(-1)|, the knot determinant."""
    return abs(alexander(V)(-1))


def genus_lower_bound(delta, sigma):
    """max(ceil(deg(delta)/2), ceil(|sigma|/2))."""
    return max(ceil(delta.degree() / 2), ceil(abs(sigma) / 2))


# ---------------------------------------------------------------------------
# S-equivalence moves

ROW_TYPE = "RowType"
COL_TYPE = "ColType"


def enlarge(V, vec, kind=ROW_TYPE):
    """Elementary enlargement of V by a row vector (RowType) or column vector (ColType).

    RowType:  [[V, 0, 0], [a, 0, 0], [0, 1, 0]]
    ColType:  [[V, b, 0], [0, 0, 1], [0, 0, 0]]
    """
    V = as_matrix(V)
    n = len(V)
    vec = [int(x) for x in vec]
    if len(vec) != n:
        raise DomainError("vector has length %d, expected %d" % (len(vec), n))
    if kind == ROW_TYPE:
        W = [row + [0, 0] for row in V]
        W.append(vec + [0, 0])
        W.append([0] * n + [1, 0])
    elif kind == COL_TYPE:
        W = [row + [vec[i], 0] for i, row in enumerate(V)]
        W.append([0] * n + [0, 1])
        W.append([0] * n + [0, 0])
    else:
        raise DomainError("unknown enlargement kind %r" % (kind,))
    return W


def reduce(W):
    """Inverse of ``enlarge``: strip the last two rows and columns.

    Raises DomainError unless W has one of the two enlargement patterns.
    """
    W = as_matrix(W)
    m = len(W)
    if m < 2:
        raise DomainError("matrix too small to be an enlargement")
    n = m - 2
    last_cols_zero = all(W[i][n] == 0 and W[i][n + 1] == 0 for i in range(n))
    row_pattern = (
        last_cols_zero
        and W[n][n:] == [0, 0]
        and W[n + 1] == [0] * n + [1, 0]
    )
    col_pattern = (
        all(W[i][n + 1] == 0 for i in range(n))
        and W[n] == [0] * n + [0, 1]
        and W[n + 1] == [0] * n + [0, 0]
    )
    if not (row_pattern or col_pattern):
        raise DomainError("matrix does not have an elementary enlargement pattern")
    return [row[:n] for row in W[:n]]


def congruent(V, P):
    """P^T V P for a unimodular integer matrix P."""
    V = as_matrix(V)
    P = as_matrix(P)
    if len(P) != len(V):
        raise DomainError("dimension mismatch")
    if abs(int_det(P)) != 1:
        raise DomainError("P is not unimodular")
    return matmul(matmul(transpose(P), V), P)


def block_sum(V1, V2):
    """Block-diagonal matrix diag(V1, V2)."""
    V1 = as_matrix(V1)
    V2 = as_matrix(V2)
    n1, n2 = len(V1), len(V2)
    out = [row + [0] * n2 for row in V1]
    out += [[0] * n1 + row for row in V2]
    return out


NOT_S_EQUIVALENT = "NotSEquivalent"
INCONCLUSIVE = "Inconclusive"


def s_distinguish(V1, V2):
    """Refute S-equivalence via Alexander polynomial and signature."""
    if alexander(V1) != alexander(V2) or signature(V1) != signature(V2):
        return NOT_S_EQUIVALENT
    return INCONCLUSIVE


def satellite_genus(g_pattern, winding, g_companion):
    """g(P) + |w| g(K) for a nontrivial companion K."""
    for name, v in (("pattern genus", g_pattern), ("companion genus", g_companion)):
        if int(v) != v or v < 0:
            raise DomainError("%s must be a nonnegative integer" % name)
    if g_companion == 0:
        raise DomainError("companion must be nontrivial (genus >= 1)")
    return g_pattern + abs(winding) * g_companion
