"""Sparse multivariate polynomials with exact rational coefficients.

Coefficients are ints whenever they are integral and Fractions otherwise, so
integer inputs never pay for Fraction arithmetic.  Resultants are Sylvester
determinants evaluated by fraction-free (Bareiss) elimination.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

from .errors import DegenerateInput, DomainError

Coeff = Union[int, Fraction]


def _norm(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"inexact coefficient {c!r}")


def _exact_div(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
    return _norm(Fraction(a) / b)


class MultiPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], Coeff] | None = None):
        self.variables = tuple(variables)
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != len(self.variables):
                raise DomainError(f"exponent {exp} does not match variables {self.variables}")
            c = _norm(c)
            if c:
                clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, variables, terms) -> "MultiPoly":
        p = cls.__new__(cls)
        p.variables = variables
        p.terms = terms
        return p

    @classmethod
    def const(cls, variables: Sequence[str], c: Coeff) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        exp = tuple(1 if v == name else 0 for v in variables)
        if sum(exp) != 1:
            raise DomainError(f"unknown variable {name!r}")
        return cls(variables, {exp: 1})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> tuple["MultiPoly", ...]:
        return tuple(cls.var(variables, v) for v in variables)

    # ring operations

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise DomainError(f"variable mismatch {self.variables} vs {other.variables}")
            return other
        return MultiPoly.const(self.variables, other)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            c = _norm(other)
            if not c:
                return MultiPoly._raw(self.variables, {})
            return MultiPoly._raw(self.variables, {e: _norm(v * c) for e, v in self.terms.items()})
        other = self._coerce(other)
        out: dict[tuple[int, ...], Coeff] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.variables, {e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise DomainError("negative powers are not polynomials")
        result = MultiPoly.const(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                return self.terms == MultiPoly.const(self.variables, other).terms
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # inspection

    def _index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise DomainError(f"{var!r} is not among {self.variables}") from None

    def degree(self, var: str | None = None) -> int:
        """Degree in `var`, or total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self._index(var)
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise DomainError("polynomial is not constant")
        return self.terms.get((0,) * len(self.variables), 0)

    def coefficients_in(self, var: str) -> list["MultiPoly"]:
        """[c_0, ..., c_n] with self = sum c_k var^k; each c_k free of `var`."""
        i = self._index(var)
        n = self.degree(var)
        buckets: list[dict] = [{} for _ in range(max(n, 0) + 1)]
        for e, c in self.terms.items():
            buckets[e[i]][e[:i] + (0,) + e[i + 1:]] = c
        return [MultiPoly._raw(self.variables, b) for b in buckets] if n >= 0 else []

    def leading_term(self) -> tuple[tuple[int, ...], Coeff]:
        """Lexicographically largest term (variables in stored order)."""
        e = max(self.terms)
        return e, self.terms[e]

    # substitution and calculus

    def subs(self, values: Mapping[str, Coeff]) -> "MultiPoly":
        """Substitute numbers for some variables; the variable list is kept."""
        idx = {self._index(v): _norm(c) for v, c in values.items()}
        out: dict[tuple[int, ...], Coeff] = {}
        for e, c in self.terms.items():
            coeff = c
            new_e = list(e)
            for i, val in idx.items():
                if e[i]:
                    coeff = coeff * val ** e[i]
                    new_e[i] = 0
            key = tuple(new_e)
            out[key] = out.get(key, 0) + coeff
        return MultiPoly(self.variables, out)

    def compose(self, images: Mapping[str, "MultiPoly"], variables: Sequence[str] | None = None) -> "MultiPoly":
        """Replace each variable by a polynomial over `variables` (default: the images' variables)."""
        if variables is None:
            variables = next(iter(images.values())).variables
        variables = tuple(variables)
        gens = []
        for v in self.variables:
            img = images.get(v)
            if img is None:
                img = MultiPoly.var(variables, v)
            if img.variables != variables:
                raise DomainError("images must share one variable list")
            gens.append(img)
        powers: list[dict[int, MultiPoly]] = [{0: MultiPoly.const(variables, 1)} for _ in gens]

        def power(i: int, k: int) -> MultiPoly:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * gens[i]
            return cache[k]

        out = MultiPoly(variables)
        for e, c in self.terms.items():
            term = MultiPoly.const(variables, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        return MultiPoly._raw(tuple(mapping.get(v, v) for v in self.variables), dict(self.terms))

    def exquo(self, other: "MultiPoly") -> "MultiPoly":
        """Exact quotient; raises ArithmeticError when `other` does not divide self."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if other.is_constant():
            c = other.constant_value()
            return MultiPoly._raw(self.variables, {e: _exact_div(v, c) for e, v in self.terms.items()})
        lt_e, lt_c = other.leading_term()
        rem = dict(self.terms)
        quot: dict[tuple[int, ...], Coeff] = {}
        while rem:
            e = max(rem)
            shift = tuple(a - b for a, b in zip(e, lt_e))
            if any(s < 0 for s in shift):
                raise ArithmeticError("inexact polynomial division")
            q = _exact_div(rem[e], lt_c)
            quot[shift] = q
            for oe, oc in other.terms.items():
                key = tuple(a + b for a, b in zip(oe, shift))
                val = rem.get(key, 0) - q * oc
                if val:
                    rem[key] = _norm(val)
                else:
                    rem.pop(key, None)
        return MultiPoly._raw(self.variables, quot)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def partial(p: MultiPoly, var: str) -> MultiPoly:
    i = p._index(var)
    out = {}
    for e, c in p.terms.items():
        if e[i]:
            out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
    return MultiPoly._raw(p.variables, out)


def det_bareiss(matrix: Sequence[Sequence]) -> object:
    """Determinant by fraction-free Gaussian elimination.

    Entries may be numbers or MultiPolys; every division performed is exact.
    """
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    if any(len(row) != n for row in a):
        raise DomainError("matrix is not square")
    if all(type(x) is int for row in a for x in row):
        return _det_bareiss_int(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return a[k][k] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = _divide(num, prev)
            a[i][k] = a[i][k] * 0
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def _det_bareiss_int(a: list[list[int]]) -> int:
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _divide(num, den):
    if isinstance(num, MultiPoly):
        return num.exquo(den) if isinstance(den, MultiPoly) else num.exquo(num._coerce(den))
    return _exact_div(num, den)


def sylvester(p: MultiPoly, q: MultiPoly, var: str,
              degrees: tuple[int, int] | None = None) -> list[list[MultiPoly]]:
    """Sylvester matrix of p, q in `var`: deg(q) rows of p, then deg(p) rows of q.

    `degrees` fixes formal degrees (leading coefficients may then vanish); this
    keeps the determinant compatible with later specialisation.
    """
    m, n = degrees if degrees is not None else (p.degree(var), q.degree(var))
    cp, cq = p.coefficients_in(var), q.coefficients_in(var)
    if len(cp) > m + 1 or len(cq) > n + 1:
        raise DomainError("formal degree below actual degree")
    zero = MultiPoly(p.variables)
    cp = cp + [zero] * (m + 1 - len(cp))
    cq = cq + [zero] * (n + 1 - len(cq))
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + m - k] = cp[k]
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + n - k] = cq[k]
        rows.append(row)
    return rows


def resultant(p: MultiPoly, q: MultiPoly, var: str,
              degrees: tuple[int, int] | None = None) -> MultiPoly:
    if p.is_zero() or q.is_zero():
        raise DegenerateInput("resultant with the zero polynomial")
    m, n = degrees if degrees is not None else (p.degree(var), q.degree(var))
    if m == 0 and n == 0:
        return MultiPoly.const(p.variables, 1)
    rows = sylvester(p, q, var, (m, n))
    if all(all(e.is_constant() for e in row) for row in rows):
        value = det_bareiss([[e.constant_value() for e in row] for row in rows])
        return MultiPoly.const(p.variables, value)
    return det_bareiss(rows)


# dense univariate helpers: coefficient lists, lowest degree first

def univariate_coeffs(p: MultiPoly, var: str) -> list[Coeff]:
    """Dense coefficients of a polynomial that only involves `var`."""
    out = []
    for c in p.coefficients_in(var):
        out.append(c.constant_value() if c else 0)
    return out


def _trim(a: list) -> list:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def u_degree(a: Sequence) -> int:
    return len(_trim(a)) - 1


def u_derivative(a: Sequence) -> list:
    return _trim([k * a[k] for k in range(1, len(a))])


def u_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    rem = [Fraction(x) for x in a]
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    for shift in range(len(a) - len(b), -1, -1):
        c = rem[shift + len(b) - 1] / lead
        quot[shift] = c
        if c:
            for j, bj in enumerate(b):
                rem[shift + j] -= c * bj
    return [_norm(x) for x in _trim(quot)], [_norm(x) for x in _trim(rem[:len(b) - 1])]


def u_monic(a: Sequence) -> list:
    a = _trim(a)
    if not a:
        return []
    lead = Fraction(a[-1])
    return [_norm(Fraction(x) / lead) for x in a]


def _primitive_int(a: Sequence) -> list[int]:
    """Integer multiple of `a` with content 1 and positive leading coefficient."""
    a = _trim(a)
    den = 1
    for c in a:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    content = 0
    for c in ints:
        content = gcd(content, c)
    if not content:
        return []
    if ints[-1] < 0:
        content = -content
    return [c // content for c in ints]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b over Z."""
    rem = list(a)
    lead = b[-1]
    nb = len(b)
    for shift in range(len(a) - nb, -1, -1):
        c = rem[shift + nb - 1]
        rem = [x * lead for x in rem]
        if c:
            for j, bj in enumerate(b):
                rem[shift + j] -= c * bj
    return _trim(rem[:nb - 1])


def u_gcd(a: Sequence, b: Sequence) -> list:
    """Monic gcd over Q (gcd(0, 0) = 0), via a primitive remainder sequence over Z."""
    a, b = _primitive_int(a), _primitive_int(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive_int(_prem(a, b))
    return u_monic(a)


def u_resultant(a: Sequence, b: Sequence, m: int | None = None, n: int | None = None) -> Coeff:
    """Resultant of dense univariate polynomials at formal degrees (m, n).

    Integer inputs go through the subresultant remainder sequence, which avoids
    the cubic cost of a Sylvester determinant; its value agrees with
    det(sylvester(...)) including sign.
    """
    a, b = _trim(a), _trim(b)
    m = len(a) - 1 if m is None else m
    n = len(b) - 1 if n is None else n
    if len(a) - 1 > m or len(b) - 1 > n:
        raise DomainError("formal degree below actual degree")
    if not a or not b:
        return 0 if m + n > 0 else 1
    da, db = len(a) - 1, len(b) - 1
    if da < m and db < n:
        return 0
    factor = 1
    if da < m:
        factor = (-1) ** (n * (m - da)) * b[-1] ** (m - da)
    elif db < n:
        factor = a[-1] ** (n - db)
    a_int, sa = _integerise(a)
    b_int, sb = _integerise(b)
    value = _subresultant(a_int, b_int)
    return _norm(Fraction(factor * value) / (sa ** db * sb ** da))


def _integerise(a: list) -> tuple[list[int], int]:
    den = 1
    for c in a:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in a], den


def _subresultant(a: list[int], b: list[int]) -> int:
    """Res(a, b) over Z at actual degrees (Collins' subresultant algorithm)."""
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    sign = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            sign = -sign
    ca = 0
    for c in a:
        ca = gcd(ca, c)
    cb = 0
    for c in b:
        cb = gcd(cb, c)
    a = [c // ca for c in a]
    b = [c // cb for c in b]
    t = ca ** db * cb ** da
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = _prem(a, b)
        a = b
        if not r:
            return 0
        div = g * h ** delta
        b = [c // div for c in r]
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = g ** delta // h ** (delta - 1)
        if len(b) == 1:
            da = len(a) - 1
            return sign * t * (b[0] ** da // h ** (da - 1))


def squarefree_part(a: Sequence) -> list:
    a = _trim(a)
    if len(a) <= 1:
        return u_monic(a)
    g = u_gcd(a, u_derivative(a))
    return u_monic(u_divmod(a, g)[0])


def interpolate(xs: Sequence[int], ys: Sequence[Coeff]) -> list:
    """Exact Newton interpolation; returns dense coefficients."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        # result = result * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + result
        for k in range(len(result)):
            shifted[k] -= xs[i] * result[k]
        shifted[0] += coef[i]
        result = shifted
    return [_norm(c) for c in _trim(result)]


def u_eval(a: Sequence, x) -> Coeff:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return _norm(acc) if not isinstance(acc, int) else acc


def from_dense(coeffs: Iterable[Coeff], variables: Sequence[str], var: str) -> MultiPoly:
    variables = tuple(variables)
    i = variables.index(var)
    terms = {}
    for k, c in enumerate(coeffs):
        e = [0] * len(variables)
        e[i] = k
        terms[tuple(e)] = c
    return MultiPoly(variables, terms)
