"""Exact arithmetic in the complex Clifford algebras CCliff_n.

Generators e_1 .. e_n satisfy e_i^2 = -1 and e_i e_j = -e_j e_i.  An element
is stored as a map from blades (sorted tuples of generator indices, ``()``
being the unit) to Gaussian rationals.

Also here: the grading and adjoint, the graded tensor product of two
Clifford algebras, explicit matrix pictures of CCliff_1 and CCliff_2, and
the parity rule for their graded K-theory.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Union

from .exact_linalg import AbelianGroup
from .graph_ktheory import GradedKGroups

__all__ = [
    "GaussianRational",
    "CliffordElement",
    "PairCC",
    "Matrix2C",
    "GradedTensor",
    "CliffordParseError",
    "blade_sign",
    "multiply",
    "adjoint",
    "grading",
    "graded_tensor_multiply",
    "graded_tensor_adjoint",
    "tensor_to_clifford",
    "iso_ccliff1",
    "iso_ccliff1_inverse",
    "beta_ccliff1",
    "iso_ccliff2",
    "iso_ccliff2_inverse",
    "beta_ccliff2",
    "graded_k_lookup",
    "parse_element",
    "random_element",
]

Blade = tuple[int, ...]
Scalar = Union["GaussianRational", Fraction, int]


class CliffordParseError(ValueError):
    pass


@dataclass(frozen=True)
class GaussianRational:
    """re + im*i with exact rational parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x: Scalar) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("use exact values, not complex floats")
        return cls(Fraction(x), Fraction(0))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __add__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        im = "" if abs(self.im) == 1 else str(abs(self.im))
        if not self.re:
            return f"{'-' if self.im < 0 else ''}{im}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}i"

    def __repr__(self) -> str:
        return f"GaussianRational({self})"


I = GaussianRational(0, 1)
ONE = GaussianRational(1, 0)
ZERO = GaussianRational(0, 0)


def _coerce_or_none(x) -> GaussianRational | None:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return GaussianRational(Fraction(x), Fraction(0))
    return None


def blade_sign(s: Blade, t: Blade) -> int:
    """Sign of e_s * e_t relative to e_{s symmetric-difference t}.

    Moving each generator of ``t`` left past the larger generators of ``s``
    costs one sign per inversion, and each shared generator squares to -1.
    """
    inversions = sum(1 for a in s for b in t if a > b)
    shared = len(set(s) & set(t))
    return -1 if (inversions + shared) % 2 else 1


def _blade_product(s: Blade, t: Blade) -> tuple[int, Blade]:
    return blade_sign(s, t), tuple(sorted(set(s) ^ set(t)))


class CliffordElement:
    """An element of CCliff_n.

    Build elements with :meth:`scalar`, :meth:`generator`, :meth:`blade` or
    :func:`parse_element`; combine them with ``+``, ``-`` and ``*``.
    """

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coefficients: Mapping[Iterable[int], Scalar] | None = None):
        if n < 0:
            raise ValueError("n must be non-negative")
        coeffs: dict[Blade, GaussianRational] = {}
        for blade, c in (coefficients or {}).items():
            key = tuple(blade)
            if list(key) != sorted(set(key)):
                raise ValueError(f"blade {key} must be strictly increasing")
            if key and (key[0] < 1 or key[-1] > n):
                raise ValueError(f"blade {key} has an index outside 1..{n}")
            c = GaussianRational.coerce(c)
            if c:
                coeffs[key] = coeffs.get(key, ZERO) + c
        self.n = n
        self._coeffs = {k: v for k, v in coeffs.items() if v}

    @classmethod
    def scalar(cls, n: int, z: Scalar = 1) -> "CliffordElement":
        return cls(n, {(): z})

    @classmethod
    def zero(cls, n: int) -> "CliffordElement":
        return cls(n)

    @classmethod
    def generator(cls, n: int, i: int) -> "CliffordElement":
        return cls(n, {(i,): 1})

    @classmethod
    def blade(cls, n: int, indices: Iterable[int], z: Scalar = 1) -> "CliffordElement":
        """z * e_{i1} e_{i2} ... for *any* index sequence (sign and repeats resolved)."""
        out = cls.scalar(n, z)
        for i in indices:
            out = out * cls.generator(n, i)
        return out

    @staticmethod
    def basis_blades(n: int) -> list[Blade]:
        """All 2**n blades, ordered by size and then lexicographically."""
        return [b for k in range(n + 1) for b in combinations(range(1, n + 1), k)]

    @classmethod
    def basis(cls, n: int) -> list["CliffordElement"]:
        return [cls(n, {b: 1}) for b in cls.basis_blades(n)]

    @property
    def coefficients(self) -> dict[Blade, GaussianRational]:
        return dict(self._coeffs)

    def coefficient(self, blade: Iterable[int]) -> GaussianRational:
        return self._coeffs.get(tuple(blade), ZERO)

    def terms(self) -> list[tuple[Blade, GaussianRational]]:
        return sorted(self._coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def _check_same(self, other: "CliffordElement"):
        if not isinstance(other, CliffordElement):
            raise TypeError(f"expected CliffordElement, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"elements live in different algebras: n={self.n} vs n={other.n}")

    def __add__(self, other):
        if not isinstance(other, CliffordElement):
            o = _coerce_or_none(other)
            if o is None:
                return NotImplemented
            other = CliffordElement.scalar(self.n, o)
        self._check_same(other)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, ZERO) + v
        return CliffordElement(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.n, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            return multiply(self, other)
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return CliffordElement(self.n, {k: v * o for k, v in self._coeffs.items()})

    def __rmul__(self, other):
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return CliffordElement(self.n, {k: o * v for k, v in self._coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, CliffordElement):
            return self.n == other.n and self._coeffs == other._coeffs
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self == CliffordElement.scalar(self.n, o)

    def __hash__(self):
        return hash((self.n, frozenset(self._coeffs.items())))

    def __bool__(self):
        return bool(self._coeffs)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"CliffordElement({self.n}, {format_element(self)!r})"

    def adjoint(self) -> "CliffordElement":
        return adjoint(self)

    def graded(self) -> "CliffordElement":
        return grading(self)

    def even_part(self) -> "CliffordElement":
        return CliffordElement(self.n, {k: v for k, v in self._coeffs.items() if len(k) % 2 == 0})

    def odd_part(self) -> "CliffordElement":
        return CliffordElement(self.n, {k: v for k, v in self._coeffs.items() if len(k) % 2 == 1})

    @property
    def degree(self) -> int | None:
        """0 or 1 for a homogeneous element, None otherwise.  Zero counts as even."""
        parities = {len(k) % 2 for k in self._coeffs}
        if len(parities) > 1:
            return None
        return parities.pop() if parities else 0


def multiply(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    a._check_same(b)
    out: dict[Blade, GaussianRational] = {}
    for s, x in a._coeffs.items():
        for t, y in b._coeffs.items():
            sign, blade = _blade_product(s, t)
            c = x * y
            out[blade] = out.get(blade, ZERO) + (c if sign > 0 else -c)
    return CliffordElement(a.n, out)


def adjoint(a: CliffordElement) -> CliffordElement:
    """Conjugate-linear anti-involution with e_i* = -e_i.

    On a blade of size k this is (-1)^k times the reversed product, i.e.
    the sign (-1)^(k(k+1)/2), and the coefficient is conjugated.
    """
    out = {}
    for blade, c in a._coeffs.items():
        k = len(blade)
        sign = -1 if (k * (k + 1) // 2) % 2 else 1
        out[blade] = c.conjugate() if sign > 0 else -c.conjugate()
    return CliffordElement(a.n, out)


def grading(a: CliffordElement) -> CliffordElement:
    """The automorphism induced by e_i -> -e_i: odd blades change sign."""
    return CliffordElement(a.n, {k: (-v if len(k) % 2 else v) for k, v in a._coeffs.items()})


# -- graded tensor products --------------------------------------------------


class GradedTensor:
    """Element of CCliff_n (graded tensor) CCliff_m, stored on basis pairs.

    Basis elements e_S (x) e_T are homogeneous, so the Koszul sign rule is
    applied pair by pair and extended bilinearly.
    """

    __slots__ = ("n", "m", "_coeffs")

    def __init__(self, n: int, m: int, coefficients: Mapping[tuple[Blade, Blade], Scalar] | None = None):
        self.n, self.m = n, m
        out: dict[tuple[Blade, Blade], GaussianRational] = {}
        for (s, t), c in (coefficients or {}).items():
            c = GaussianRational.coerce(c)
            key = (tuple(s), tuple(t))
            out[key] = out.get(key, ZERO) + c
        self._coeffs = {k: v for k, v in out.items() if v}

    @classmethod
    def pure(cls, a: CliffordElement, b: CliffordElement) -> "GradedTensor":
        """The simple tensor a (x) b, expanded over basis pairs."""
        return cls(a.n, b.n, {(s, t): x * y for s, x in a._coeffs.items() for t, y in b._coeffs.items()})

    @property
    def coefficients(self) -> dict[tuple[Blade, Blade], GaussianRational]:
        return dict(self._coeffs)

    def __add__(self, other: "GradedTensor") -> "GradedTensor":
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError("tensor factors differ")
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, ZERO) + v
        return GradedTensor(self.n, self.m, out)

    def __neg__(self):
        return GradedTensor(self.n, self.m, {k: -v for k, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, GradedTensor):
            return graded_tensor_multiply(self, other)
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GradedTensor(self.n, self.m, {k: v * o for k, v in self._coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, GradedTensor):
            return NotImplemented
        return (self.n, self.m, self._coeffs) == (other.n, other.m, other._coeffs)

    def __hash__(self):
        return hash((self.n, self.m, frozenset(self._coeffs.items())))

    def __repr__(self):
        terms = " + ".join(f"({c}) {_blade_str(s)}(x){_blade_str(t)}"
                           for (s, t), c in sorted(self._coeffs.items()))
        return f"GradedTensor({self.n}, {self.m}, {terms or '0'})"


def graded_tensor_multiply(x: GradedTensor, y: GradedTensor) -> GradedTensor:
    """(a1 (x) b1)(a2 (x) b2) = (-1)^(deg b1 * deg a2) a1 a2 (x) b1 b2.

    The sign counts the crossing of b1 past a2 (Koszul rule).
    """
    if (x.n, x.m) != (y.n, y.m):
        raise ValueError("tensor factors differ")
    out: dict[tuple[Blade, Blade], GaussianRational] = {}
    for (s1, t1), c1 in x._coeffs.items():
        for (s2, t2), c2 in y._coeffs.items():
            koszul = -1 if (len(t1) % 2) and (len(s2) % 2) else 1
            sa, s = _blade_product(s1, s2)
            sb, t = _blade_product(t1, t2)
            c = c1 * c2
            if koszul * sa * sb < 0:
                c = -c
            out[(s, t)] = out.get((s, t), ZERO) + c
    return GradedTensor(x.n, x.m, out)


def graded_tensor_adjoint(x: GradedTensor) -> GradedTensor:
    """(a (x) b)* = (-1)^(deg a * deg b) a* (x) b*."""
    out = {}
    for (s, t), c in x._coeffs.items():
        sign = -1 if (len(s) % 2) and (len(t) % 2) else 1
        a = adjoint(CliffordElement(x.n, {s: 1})).coefficient(s)
        b = adjoint(CliffordElement(x.m, {t: 1})).coefficient(t)
        out[(s, t)] = c.conjugate() * a * b * sign
    return GradedTensor(x.n, x.m, out)


def tensor_to_clifford(x: GradedTensor) -> CliffordElement:
    """CCliff_n (graded tensor) CCliff_m -> CCliff_{n+m}: e_S (x) e_T -> e_S e_{T+n}."""
    out = {}
    for (s, t), c in x._coeffs.items():
        # s < shifted t elementwise, so the product is already sorted with sign +1
        out[s + tuple(i + x.n for i in t)] = c
    return CliffordElement(x.n + x.m, out)


# -- low-dimensional matrix pictures -----------------------------------------


@dataclass(frozen=True)
class PairCC:
    """An element (first, second) of C (+) C."""

    first: GaussianRational
    second: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "first", GaussianRational.coerce(self.first))
        object.__setattr__(self, "second", GaussianRational.coerce(self.second))

    def __add__(self, o: "PairCC") -> "PairCC":
        return PairCC(self.first + o.first, self.second + o.second)

    def __mul__(self, o: "PairCC") -> "PairCC":
        return PairCC(self.first * o.first, self.second * o.second)

    def adjoint(self) -> "PairCC":
        return PairCC(self.first.conjugate(), self.second.conjugate())

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"


@dataclass(frozen=True)
class Matrix2C:
    """2x2 matrix [[a, b], [c, d]] with Gaussian rational entries."""

    a: GaussianRational
    b: GaussianRational
    c: GaussianRational
    d: GaussianRational

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, GaussianRational.coerce(getattr(self, name)))

    @classmethod
    def from_rows(cls, rows) -> "Matrix2C":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def tolist(self) -> list[list[GaussianRational]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __add__(self, o: "Matrix2C") -> "Matrix2C":
        return Matrix2C(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def scale(self, z: Scalar) -> "Matrix2C":
        return Matrix2C(z * self.a, z * self.b, z * self.c, z * self.d)

    def __matmul__(self, o: "Matrix2C") -> "Matrix2C":
        return Matrix2C(
            self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d,
        )

    __mul__ = __matmul__

    def adjoint(self) -> "Matrix2C":
        """Conjugate transpose."""
        return Matrix2C(self.a.conjugate(), self.c.conjugate(), self.b.conjugate(), self.d.conjugate())


M_ONE = Matrix2C(1, 0, 0, 1)
M_I = Matrix2C(0, 1, -1, 0)
M_J = Matrix2C(0, I, I, 0)
M_K = Matrix2C(I, 0, 0, -I)

_CCLIFF2_IMAGES = {(): M_ONE, (1,): M_I, (2,): M_J, (1, 2): M_K}


def _require_n(a: CliffordElement, n: int):
    if not isinstance(a, CliffordElement):
        raise TypeError(f"expected CliffordElement, got {type(a).__name__}")
    if a.n != n:
        raise ValueError(f"expected an element of CCliff_{n}, got CCliff_{a.n}")


def iso_ccliff1(a: CliffordElement) -> PairCC:
    """CCliff_1 -> C (+) C,  z + w e  ->  (z + i w, z - i w)."""
    _require_n(a, 1)
    z, w = a.coefficient(()), a.coefficient((1,))
    return PairCC(z + I * w, z - I * w)


def iso_ccliff1_inverse(p: PairCC) -> CliffordElement:
    z, w = p.first, p.second
    return CliffordElement(1, {(): (z + w) / 2, (1,): (z - w) / (2 * I)})


def beta_ccliff1(p: PairCC) -> PairCC:
    """Grading on C (+) C transported from CCliff_1: swap the summands."""
    return PairCC(p.second, p.first)


def iso_ccliff2(a: CliffordElement) -> Matrix2C:
    """CCliff_2 -> M_2(C) sending 1, e1, e2, e1e2 to the quaternion-type
    matrices [[1,0],[0,1]], [[0,1],[-1,0]], [[0,i],[i,0]], [[i,0],[0,-i]]."""
    _require_n(a, 2)
    out = Matrix2C(0, 0, 0, 0)
    for blade, z in a.coefficients.items():
        out = out + _CCLIFF2_IMAGES[blade].scale(z)
    return out


def iso_ccliff2_inverse(m: Matrix2C) -> CliffordElement:
    a, b, c, d = m.a, m.b, m.c, m.d
    return CliffordElement(2, {
        (): (a + d) / 2,
        (1,): (b - c) / 2,
        (2,): -I * (b + c) / 2,
        (1, 2): I * (d - a) / 2,
    })


def beta_ccliff2(m: Matrix2C) -> Matrix2C:
    """Even/odd grading on M_2(C): off-diagonal entries change sign."""
    return Matrix2C(m.a, -m.b, -m.c, m.d)


def graded_k_lookup(n: int) -> GradedKGroups:
    """Graded K-theory of CCliff_n: (Z, 0) for even n and (0, Z) for odd n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    z, zero = AbelianGroup.free(1), AbelianGroup()
    k0, k1 = (z, zero) if n % 2 == 0 else (zero, z)
    return GradedKGroups(k0=k0, k1=k1, graded=True)


# -- text syntax ---------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<blade>(?:e\d+)+)|(?P<op>[-+*()])|(?P<i>i)|(?P<bad>\S))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        kind = m.lastgroup
        if kind == "bad":
            raise CliffordParseError(f"unexpected character {m.group(kind)!r} at position {m.start(kind)}")
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _Parser:
    """Recursive-descent parser for sums of ``coefficient * blade`` terms.

    A coefficient is a Gaussian rational literal such as ``3``, ``-1/2``,
    ``2i``, ``2+3i`` or ``(1-i)``.  A literal real part absorbs an
    immediately following ``+ <num> i`` so that ``2+3i * e1`` reads as
    (2+3i) e1.
    """

    def __init__(self, tokens):
        self.toks = tokens
        self.k = 0

    def peek(self, off=0):
        j = self.k + off
        return self.toks[j] if j < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.k += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.take()
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise CliffordParseError(f"expected {value or kind}, got {tok[1]!r}")
        return tok

    def parse_sum(self) -> list[tuple[GaussianRational, Blade | None]]:
        terms = []
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        while True:
            terms.append(self.parse_term(sign))
            tok = self.peek()
            if tok[0] is None or tok == ("op", ")"):
                return terms
            if tok == ("op", "+"):
                sign = 1
            elif tok == ("op", "-"):
                sign = -1
            else:
                raise CliffordParseError(f"expected '+' or '-', got {tok[1]!r}")
            self.take()
            # canonical output joins terms with '+', so "a + -b" must read back
            if self.peek() in (("op", "-"), ("op", "+")):
                if self.take()[1] == "-":
                    sign = -sign

    def parse_term(self, sign: int) -> tuple[GaussianRational, Blade | None]:
        kind, val = self.peek()
        if kind == "blade":
            self.take()
            return ONE * sign, _parse_blade(val)
        coeff = self.parse_coefficient(sign)
        if self.peek() == ("op", "*"):
            self.take()
            kind, val = self.take()
            if kind == "blade":
                return coeff, _parse_blade(val)
            if kind == "num" and val == "1":
                return coeff, ()
            raise CliffordParseError(f"expected a blade like 'e1e2' or '1' after '*', got {val!r}")
        return coeff, ()

    def parse_coefficient(self, sign: int) -> GaussianRational:
        # the leading sign binds to the real part only: -2+3i is (-2) + 3i
        kind, val = self.peek()
        if (kind, val) == ("op", "("):
            self.take()
            terms = self.parse_sum()
            self.expect("op", ")")
            if any(b for _, b in terms):
                raise CliffordParseError("parenthesised coefficients must be scalars")
            return sum((c for c, _ in terms), ZERO) * sign
        if kind == "i":
            self.take()
            return I * sign
        if kind != "num":
            raise CliffordParseError(f"expected a coefficient, got {val!r}")
        self.take()
        x = Fraction(val) * sign
        if self.peek()[0] == "i":
            self.take()
            return GaussianRational(0, x)
        # real part followed by an imaginary part, e.g. 2+3i or 2-i
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            im_sign = 1 if self.peek()[1] == "+" else -1
            nxt, after = self.peek(1), self.peek(2)
            if nxt[0] == "i":
                self.k += 2
                return GaussianRational(x, im_sign)
            if nxt[0] == "num" and after[0] == "i":
                self.k += 3
                return GaussianRational(x, im_sign * Fraction(nxt[1]))
        return GaussianRational(x, 0)


def _parse_blade(text: str) -> list[int]:
    return [int(x) for x in re.findall(r"\d+", text)]


def parse_element(text: str, n: int | None = None) -> CliffordElement:
    """Parse text such as ``"2+3i * e1e3 + -1 * 1"`` into an element of CCliff_n.

    Products of generators in any order are allowed (``e2e1`` equals
    ``-e1e2``).  With ``n=None`` the algebra is the smallest one containing
    every generator mentioned.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise CliffordParseError("empty expression")
    p = _Parser(tokens)
    terms = p.parse_sum()
    if p.k != len(tokens):
        raise CliffordParseError(f"unexpected {p.peek()[1]!r}")
    used = max((max(b) for _, b in terms if b), default=0)
    if n is None:
        n = used
    elif used > n:
        raise ValueError(f"generator e{used} does not exist in CCliff_{n}")
    if any(i < 1 for _, b in terms for i in b):
        raise CliffordParseError("generator indices start at 1")
    out = CliffordElement.zero(n)
    for c, b in terms:
        out = out + CliffordElement.blade(n, b, c)
    return out


def _blade_str(b: Blade) -> str:
    return "".join(f"e{i}" for i in b) if b else "1"


def format_element(a: CliffordElement) -> str:
    """Canonical text: terms by blade size, ``coeff * blade``; scalars bare."""
    parts = []
    for blade, c in a.terms():
        if not blade:
            parts.append(str(c))
        elif c == 1:
            parts.append(_blade_str(blade))
        elif c.im and c.re:
            parts.append(f"({c}) * {_blade_str(blade)}")
        else:
            parts.append(f"{c} * {_blade_str(blade)}")
    return " + ".join(parts) if parts else "0"


def random_element(n: int, rng: random.Random, bound: int = 5, density: float = 0.7) -> CliffordElement:
    """Random element with small Gaussian-integer coefficients, for testing."""
    out = {}
    for b in CliffordElement.basis_blades(n):
        if rng.random() < density:
            out[b] = GaussianRational(rng.randint(-bound, bound), rng.randint(-bound, bound))
    return CliffordElement(n, out)


def iter_homogeneous_basis(n: int) -> Iterator[tuple[int, CliffordElement]]:
    for b in CliffordElement.basis_blades(n):
        yield len(b) % 2, CliffordElement(n, {b: 1})
