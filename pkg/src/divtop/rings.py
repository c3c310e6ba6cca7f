"""Exact arithmetic for five integral domains behind one adapter interface.

Element representations:

  - ``z``     rational integers, plain python ``int``
  - ``gauss`` Gaussian integers, ``Gauss(re, im)``
  - ``fp``    polynomials over F_p, ``Poly(p, coeffs)`` with coefficients
              low degree first and no trailing zeros (``()`` is zero)
  - ``zs5``   the quadratic ring Z[sqrt(-5)], ``Root5(x, y)`` = x + y*sqrt(-5)
  - ``valp``  the one-prime valuation chain (localization of Z at p, or a
              power-series ring in disguise), ``PPow(p, k)``; k == 0 is a unit
              and a class is determined by the exponent k alone

Association classes are keyed by a canonical associate per ring: positive for
``z``, first quadrant (re > 0, im >= 0) for ``gauss``, monic for ``fp``,
x > 0 or (x == 0, y > 0) for ``zs5``, and p^k itself for ``valp``.  Each rule
is computable by trying every unit, and picks exactly one associate.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Optional

from sympy import factorint, isprime
from sympy.ntheory.residue_ntheory import sqrt_mod

from .errors import (
    CapabilityMissing,
    ElementSyntaxError,
    ModulusMissing,
    NotAtomic,
    RingMismatch,
    SizeGuard,
    UnitElement,
    ZeroDivisor,
    ZeroElement,
)

# ---------------------------------------------------------------------------
# capability metadata


@dataclass(frozen=True)
class UnitCount:
    kind: str  # "finite" | "countably-infinite" | "uncountable"
    n: Optional[int] = None

    @classmethod
    def finite(cls, n: int) -> "UnitCount":
        return cls("finite", n)

    @classmethod
    def countable(cls) -> "UnitCount":
        return cls("countably-infinite")

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"


@dataclass(frozen=True)
class Capabilities:
    has_gcd: bool
    is_valuation: bool
    is_atomic: bool
    is_ufd: bool
    unit_count: UnitCount
    # metadata, never computed: every built-in ring has countably many
    # association classes (second countability comes for free from that)
    countable_classes: bool = True


# ---------------------------------------------------------------------------
# element value types


@dataclass(frozen=True)
class Gauss:
    re: int
    im: int

    def conj(self) -> "Gauss":
        return Gauss(self.re, -self.im)

    @property
    def norm(self) -> int:
        return self.re * self.re + self.im * self.im


@dataclass(frozen=True)
class Root5:
    """x + y*sqrt(-5)."""

    x: int
    y: int

    def conj(self) -> "Root5":
        return Root5(self.x, -self.y)

    @property
    def norm(self) -> int:
        return self.x * self.x + 5 * self.y * self.y


@dataclass(frozen=True)
class Poly:
    """Coefficients low degree first, trimmed; () is the zero polynomial."""

    p: int
    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class PPow:
    p: int
    k: int


@dataclass(frozen=True)
class ClassId:
    """Association class: ring name plus canonical representative.

    ``text`` is the representative's serialization; it is derived from ``rep``
    and kept here so classes sort and print without an adapter at hand.
    """

    ring: str
    rep: object
    text: str

    def __str__(self) -> str:
        return self.text


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


# ---------------------------------------------------------------------------
# parsing helpers (shared by gauss and zs5: "a", "bS", "a+bS" with sign forms)

def _ascii_minus(text: str) -> str:
    # tolerate the typographic minus sign; same length keeps positions honest
    return text.replace("−", "-")


def _parse_int(text: str) -> int:
    m = re.fullmatch(r"\s*([+-]?\d+)\s*", _ascii_minus(text))
    if not m:
        bad = re.match(r"\s*[+-]?\d*", _ascii_minus(text)).end()
        raise ElementSyntaxError(text, bad, "expected an integer")
    return int(m.group(1))


def _parse_pair(text: str, sym: str) -> tuple:
    """Parse 'a', 'bS', 'a+bS' (S = sym); coefficient may omit its digits."""
    s = _ascii_minus(text).replace(" ", "")
    if not s:
        raise ElementSyntaxError(text, 0, "empty element text")
    real = 0
    imag = 0
    seen_real = seen_imag = False
    i = 0
    while i < len(s):
        start = i
        sign = 1
        if s[i] in "+-":
            sign = -1 if s[i] == "-" else 1
            i += 1
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        digits = s[i:j]
        if j < len(s) and s[j] == sym:
            if seen_imag:
                raise ElementSyntaxError(text, start, f"duplicate {sym}-term")
            imag = sign * (int(digits) if digits else 1)
            seen_imag = True
            i = j + 1
        elif digits:
            if seen_real:
                raise ElementSyntaxError(text, start, "duplicate integer term")
            real = sign * int(digits)
            seen_real = True
            i = j
        else:
            raise ElementSyntaxError(text, j, "expected digits or " + sym)
    return real, imag


# ---------------------------------------------------------------------------
# adapter base


class Ring:
    """Uniform surface over one integral domain.

    Subclasses provide the element-level primitives (arithmetic, canonical
    associate, exact division, divisor/factor enumeration); the class-level
    operations and their argument validation live here.
    """

    tag: str = ""
    p: Optional[int] = None
    caps: Capabilities

    # -- identity ----------------------------------------------------------

    @property
    def name(self) -> str:
        return self.tag if self.p is None else f"{self.tag}({self.p})"

    def __repr__(self) -> str:
        return f"<ring {self.name}>"

    # -- primitives every subclass implements -------------------------------

    def is_zero(self, e) -> bool:
        raise NotImplementedError

    def is_unit(self, e) -> bool:
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def units(self) -> tuple:
        """All units, for rings where that set is finite."""
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, e):
        raise NotImplementedError

    def canonical(self, e):
        """Canonical associate of a nonzero element."""
        raise NotImplementedError

    def divide(self, numer, denom):
        """Exact quotient numer/denom, or None when denom does not divide."""
        raise NotImplementedError

    def sort_key(self, e) -> tuple:
        """Natural deterministic order (size-ish first)."""
        raise NotImplementedError

    def fmt(self, e) -> str:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def _divisor_reps(self, a) -> list:
        """Canonical reps of every non-unit divisor class of a, sorted."""
        raise NotImplementedError

    def _factor_reps(self, a) -> tuple:
        raise NotImplementedError

    def _irreducible(self, a) -> bool:
        raise NotImplementedError

    def _gcd(self, a, b):
        raise CapabilityMissing(f"{self.name} has no gcd")

    # -- shared derived operations ------------------------------------------

    def _require_operand(self, e) -> None:
        if self.is_zero(e):
            raise ZeroElement(f"zero is not a class representative in {self.name}")
        if self.is_unit(e):
            raise UnitElement(f"{self.fmt(e)} is a unit of {self.name}")

    def _class(self, rep) -> ClassId:
        # rep must already be canonical
        return ClassId(self.name, rep, self.fmt(rep))

    def canonical_class(self, e) -> ClassId:
        self._require_operand(e)
        return self._class(self.canonical(e))

    def divides(self, a, b) -> bool:
        if self.is_zero(a):
            raise ZeroDivisor(f"zero divides nothing in {self.name}")
        return self.divide(b, a) is not None

    def divisor_classes(self, a) -> frozenset:
        self._require_operand(a)
        return frozenset(self._class(r) for r in self._divisor_reps(a))

    def is_irreducible(self, a) -> bool:
        self._require_operand(a)
        return self._irreducible(a)

    def factor(self, a) -> tuple:
        self._require_operand(a)
        if not self.caps.is_atomic:
            raise NotAtomic(f"{self.name} is not atomic")
        reps = sorted(self._factor_reps(a), key=self.sort_key)
        return tuple(self._class(r) for r in reps)

    def gcd_class(self, a, b) -> Optional[ClassId]:
        if not self.caps.has_gcd:
            raise CapabilityMissing(f"{self.name} has no gcd")
        self._require_operand(a)
        self._require_operand(b)
        g = self._gcd(a, b)
        if g is None or self.is_unit(g):
            return None
        return self._class(self.canonical(g))

    def lcm_class(self, a, b) -> ClassId:
        if not self.caps.has_gcd:
            raise CapabilityMissing(f"{self.name} has no gcd")
        self._require_operand(a)
        self._require_operand(b)
        g = self._gcd(a, b)
        if g is None or self.is_unit(g):
            g = self.one()
        quot = self.divide(self.mul(a, b), g)
        return self._class(self.canonical(quot))

    def mul_class(self, ca: ClassId, cb: ClassId) -> ClassId:
        if ca.ring != self.name or cb.ring != self.name:
            raise RingMismatch(f"classes {ca.ring}/{cb.ring} do not belong to {self.name}")
        return self._class(self.canonical(self.mul(ca.rep, cb.rep)))

    def pow(self, a, n: int):
        out = self.one()
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def product(self, elems: Iterable):
        return reduce(self.mul, elems, self.one())

    def class_sort_key(self, c: ClassId) -> tuple:
        return self.sort_key(c.rep)


# ---------------------------------------------------------------------------
# rational integers


class IntegerRing(Ring):
    tag = "z"
    caps = Capabilities(
        has_gcd=True,
        is_valuation=False,
        is_atomic=True,
        is_ufd=True,
        unit_count=UnitCount.finite(2),
    )

    ENUM_MAX = 10**12  # divisor enumeration bound
    VALUE_MAX = 10**120  # defensive cap for factor/irreducibility

    def is_zero(self, e) -> bool:
        return e == 0

    def is_unit(self, e) -> bool:
        return e in (1, -1)

    def one(self):
        return 1

    def units(self):
        return (1, -1)

    def mul(self, a, b):
        return a * b

    def add(self, a, b):
        return a + b

    def neg(self, e):
        return -e

    def canonical(self, e):
        return abs(e)

    def divide(self, numer, denom):
        q, r = divmod(numer, denom)
        return q if r == 0 else None

    def sort_key(self, e):
        return (abs(e),)

    def fmt(self, e) -> str:
        return str(e)

    def parse(self, text: str):
        return _parse_int(text)

    def _guard(self, a, bound) -> None:
        if abs(a) > bound:
            raise SizeGuard(f"|{a}| exceeds the z bound {bound}")

    def _factor_reps(self, a):
        self._guard(a, self.VALUE_MAX)
        out = []
        for p, e in sorted(factorint(abs(a)).items()):
            out.extend([p] * e)
        return tuple(out)

    def _divisor_reps(self, a):
        self._guard(a, self.ENUM_MAX)
        divs = [1]
        for p, e in sorted(factorint(abs(a)).items()):
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(d for d in divs if d > 1)

    def _irreducible(self, a) -> bool:
        self._guard(a, self.VALUE_MAX)
        return bool(isprime(abs(a)))

    def _gcd(self, a, b):
        return math.gcd(a, b)


# ---------------------------------------------------------------------------
# Gaussian integers


class GaussianRing(Ring):
    tag = "gauss"
    caps = Capabilities(
        has_gcd=True,
        is_valuation=False,
        is_atomic=True,
        is_ufd=True,
        unit_count=UnitCount.finite(4),
    )

    NORM_MAX = 10**18

    def is_zero(self, e) -> bool:
        return e.re == 0 and e.im == 0

    def is_unit(self, e) -> bool:
        return e.norm == 1

    def one(self):
        return Gauss(1, 0)

    def units(self):
        return (Gauss(1, 0), Gauss(0, 1), Gauss(-1, 0), Gauss(0, -1))

    def mul(self, a, b):
        return Gauss(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)

    def add(self, a, b):
        return Gauss(a.re + b.re, a.im + b.im)

    def neg(self, e):
        return Gauss(-e.re, -e.im)

    def canonical(self, e):
        for u in self.units():
            c = self.mul(u, e)
            if c.re > 0 and c.im >= 0:
                return c
        raise ZeroElement("zero has no canonical associate")

    def divide(self, numer, denom):
        n = denom.norm
        t = self.mul(numer, denom.conj())
        if t.re % n == 0 and t.im % n == 0:
            return Gauss(t.re // n, t.im // n)
        return None

    def sort_key(self, e):
        return (e.norm, e.re, e.im)

    def fmt(self, e) -> str:
        if e.im == 0:
            return str(e.re)
        if e.re == 0:
            return f"{e.im}i"
        return f"{e.re}{e.im:+d}i"

    def parse(self, text: str):
        re_, im = _parse_pair(text, "i")
        return Gauss(re_, im)

    def _round_div(self, a: int, b: int) -> int:
        # nearest integer, ties toward +inf; remainder stays within b/2
        return (2 * a + b) // (2 * b)

    def _euclid(self, a, b):
        while not self.is_zero(b):
            n = b.norm
            t = self.mul(a, b.conj())
            q = Gauss(self._round_div(t.re, n), self._round_div(t.im, n))
            a, b = b, self.add(a, self.neg(self.mul(q, b)))
        return a

    def _gcd(self, a, b):
        return self._euclid(a, b)

    def _guard(self, a) -> None:
        if a.norm > self.NORM_MAX:
            raise SizeGuard(f"norm {a.norm} exceeds the gauss bound {self.NORM_MAX}")

    def _prime_above(self, p: int):
        # p = 1 mod 4 splits; gcd with a square root of -1 finds one factor
        r = int(sqrt_mod(-1, p))
        return self.canonical(self._euclid(Gauss(p, 0), Gauss(r, 1)))

    def _factor_reps(self, a):
        self._guard(a)
        out = []
        rest = a
        for p, _ in sorted(factorint(a.norm).items()):
            if p == 2:
                cands = [Gauss(1, 1)]
            elif p % 4 == 3:
                cands = [Gauss(p, 0)]
            else:
                pi = self._prime_above(p)
                cands = sorted({pi, self.canonical(pi.conj())}, key=self.sort_key)
            for pi in cands:
                while True:
                    q = self.divide(rest, pi)
                    if q is None:
                        break
                    out.append(self.canonical(pi))
                    rest = q
        assert self.is_unit(rest)
        return tuple(sorted(out, key=self.sort_key))

    def _divisor_reps(self, a):
        facs = {}
        for r in self._factor_reps(a):
            facs[r] = facs.get(r, 0) + 1
        divs = [self.one()]
        for pi, e in sorted(facs.items(), key=lambda kv: self.sort_key(kv[0])):
            divs = [self.mul(d, self.pow(pi, k)) for d in divs for k in range(e + 1)]
        reps = {self.canonical(d) for d in divs if not self.is_unit(d)}
        return sorted(reps, key=self.sort_key)

    def _irreducible(self, a) -> bool:
        return len(self._factor_reps(a)) == 1


# ---------------------------------------------------------------------------
# polynomials over F_p


class PolynomialRing(Ring):
    tag = "fp"

    P_MAX = 17
    DEG_MAX = 12  # bound for trial-division enumeration

    def __init__(self, p: int):
        if not isprime(p) or p > self.P_MAX:
            raise ValueError(f"fp modulus must be a prime <= {self.P_MAX}, got {p}")
        self.p = p
        self.caps = Capabilities(
            has_gcd=True,
            is_valuation=False,
            is_atomic=True,
            is_ufd=True,
            unit_count=UnitCount.finite(p - 1),
        )

    def poly(self, coeffs) -> Poly:
        return Poly(self.p, _trim(c % self.p for c in coeffs))

    def _check(self, e) -> None:
        if e.p != self.p:
            raise RingMismatch(f"polynomial over F_{e.p} used in {self.name}")

    def is_zero(self, e) -> bool:
        return not e.coeffs

    def is_unit(self, e) -> bool:
        return len(e.coeffs) == 1

    def one(self):
        return Poly(self.p, (1,))

    def units(self):
        return tuple(Poly(self.p, (c,)) for c in range(1, self.p))

    def mul(self, a, b):
        self._check(a)
        self._check(b)
        if self.is_zero(a) or self.is_zero(b):
            return Poly(self.p, ())
        out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j, bj in enumerate(b.coeffs):
                    out[i + j] = (out[i + j] + ai * bj) % self.p
        return Poly(self.p, _trim(out))

    def add(self, a, b):
        self._check(a)
        self._check(b)
        n = max(len(a.coeffs), len(b.coeffs))
        out = [0] * n
        for i in range(n):
            ai = a.coeffs[i] if i < len(a.coeffs) else 0
            bi = b.coeffs[i] if i < len(b.coeffs) else 0
            out[i] = (ai + bi) % self.p
        return Poly(self.p, _trim(out))

    def neg(self, e):
        return Poly(self.p, tuple(-c % self.p for c in e.coeffs))

    def canonical(self, e):
        inv = pow(e.coeffs[-1], -1, self.p)
        return Poly(self.p, tuple(c * inv % self.p for c in e.coeffs))

    def divmod(self, num: Poly, den: Poly) -> tuple:
        self._check(num)
        self._check(den)
        if self.is_zero(den):
            raise ZeroDivisor("polynomial division by zero")
        dd = den.degree
        if num.degree < dd:
            return Poly(self.p, ()), num
        r = list(num.coeffs)
        q = [0] * (len(r) - dd)
        inv = pow(den.coeffs[-1], -1, self.p)
        for k in range(len(r) - dd - 1, -1, -1):
            c = r[k + dd] * inv % self.p
            q[k] = c
            if c:
                for j, dj in enumerate(den.coeffs):
                    r[k + j] = (r[k + j] - c * dj) % self.p
        return Poly(self.p, _trim(q)), Poly(self.p, _trim(r[:dd]))

    def divide(self, numer, denom):
        q, r = self.divmod(numer, denom)
        return q if self.is_zero(r) else None

    def sort_key(self, e):
        return (e.degree, tuple(reversed(e.coeffs)))

    def fmt(self, e) -> str:
        if self.is_zero(e):
            return "0"
        terms = []
        for k in range(e.degree, -1, -1):
            c = e.coeffs[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{k}" if c == 1 else f"{c}x^{k}")
        return "+".join(terms)

    def parse(self, text: str):
        s = _ascii_minus(text).replace(" ", "")
        if not s:
            raise ElementSyntaxError(text, 0, "empty element text")
        coeffs = {}
        i = 0
        while i < len(s):
            start = i
            sign = 1
            if s[i] in "+-":
                sign = -1 if s[i] == "-" else 1
                i += 1
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            digits = s[i:j]
            if j < len(s) and s[j] == "x":
                coeff = int(digits) if digits else 1
                j += 1
                if j < len(s) and s[j] == "^":
                    j += 1
                    k = j
                    while k < len(s) and s[k].isdigit():
                        k += 1
                    if k == j:
                        raise ElementSyntaxError(text, j, "expected an exponent")
                    power = int(s[j:k])
                    j = k
                else:
                    power = 1
            elif digits:
                coeff = int(digits)
                power = 0
            else:
                raise ElementSyntaxError(text, start, "expected a term")
            coeffs[power] = (coeffs.get(power, 0) + sign * coeff) % self.p
            i = j
        size = max(coeffs, default=0) + 1
        out = [0] * size
        for k, c in coeffs.items():
            out[k] = c
        return Poly(self.p, _trim(out))

    def _guard(self, a) -> None:
        if a.degree > self.DEG_MAX:
            raise SizeGuard(f"degree {a.degree} exceeds the fp bound {self.DEG_MAX}")

    def _monics(self, d: int):
        # every monic polynomial of degree exactly d, in counting order
        for n in range(self.p**d):
            coeffs = []
            v = n
            for _ in range(d):
                v, c = divmod(v, self.p)
                coeffs.append(c)
            yield Poly(self.p, tuple(coeffs) + (1,))

    def _smallest_divisor(self, a):
        # first monic proper divisor by (degree, counting order); the first
        # hit is automatically irreducible
        for d in range(1, a.degree // 2 + 1):
            for cand in self._monics(d):
                if self.divide(a, cand) is not None:
                    return cand
        return None

    def _factor_reps(self, a):
        self._guard(a)
        rest = self.canonical(a)
        out = []
        while True:
            f = self._smallest_divisor(rest)
            if f is None:
                out.append(rest)
                return tuple(out)
            out.append(f)
            rest = self.canonical(self.divide(rest, f))
            if self.is_unit(rest):
                return tuple(out)

    def _divisor_reps(self, a):
        facs = {}
        for r in self._factor_reps(a):
            facs[r] = facs.get(r, 0) + 1
        divs = [self.one()]
        for f, e in sorted(facs.items(), key=lambda kv: self.sort_key(kv[0])):
            divs = [self.mul(d, self.pow(f, k)) for d in divs for k in range(e + 1)]
        reps = {d for d in divs if not self.is_unit(d)}
        return sorted(reps, key=self.sort_key)

    def _irreducible(self, a) -> bool:
        self._guard(a)
        return a.degree >= 1 and self._smallest_divisor(self.canonical(a)) is None

    def _gcd(self, a, b):
        while not self.is_zero(b):
            _, r = self.divmod(a, b)
            a, b = b, r
        return a


# ---------------------------------------------------------------------------
# Z[sqrt(-5)]


class RootMinus5Ring(Ring):
    tag = "zs5"
    caps = Capabilities(
        has_gcd=False,
        is_valuation=False,
        is_atomic=True,
        is_ufd=False,
        unit_count=UnitCount.finite(2),
    )

    NORM_MAX = 10**8

    def is_zero(self, e) -> bool:
        return e.x == 0 and e.y == 0

    def is_unit(self, e) -> bool:
        return e.norm == 1

    def one(self):
        return Root5(1, 0)

    def units(self):
        return (Root5(1, 0), Root5(-1, 0))

    def mul(self, a, b):
        return Root5(a.x * b.x - 5 * a.y * b.y, a.x * b.y + a.y * b.x)

    def add(self, a, b):
        return Root5(a.x + b.x, a.y + b.y)

    def neg(self, e):
        return Root5(-e.x, -e.y)

    def canonical(self, e):
        if e.x > 0 or (e.x == 0 and e.y > 0):
            return e
        return self.neg(e)

    def divide(self, numer, denom):
        n = denom.norm
        t = self.mul(numer, denom.conj())
        if t.x % n == 0 and t.y % n == 0:
            return Root5(t.x // n, t.y // n)
        return None

    def sort_key(self, e):
        return (e.norm, e.x, e.y)

    def fmt(self, e) -> str:
        if e.y == 0:
            return str(e.x)
        if e.x == 0:
            return f"{e.y}s"
        return f"{e.x}{e.y:+d}s"

    def parse(self, text: str):
        x, y = _parse_pair(text, "s")
        return Root5(x, y)

    def _guard(self, a) -> None:
        if a.norm > self.NORM_MAX:
            raise SizeGuard(f"norm {a.norm} exceeds the zs5 bound {self.NORM_MAX}")

    @staticmethod
    def _norm_solutions(d: int):
        # canonical-quadrant solutions of x^2 + 5y^2 = d
        out = []
        for y in range(math.isqrt(d // 5) + 1):
            r = d - 5 * y * y
            x = math.isqrt(r)
            if x * x == r:
                out.append((x, y))
        return out

    def _divisor_reps(self, a):
        self._guard(a)
        n = a.norm
        divs = [1]
        for p, e in sorted(factorint(n).items()):
            divs = [d * p**k for d in divs for k in range(e + 1)]
        reps = []
        for d in sorted(divs):
            if d < 2:
                continue
            for x, y in self._norm_solutions(d):
                cands = [Root5(x, y)]
                if x > 0 and y > 0:
                    cands.append(Root5(x, -y))
                for c in cands:
                    if self.divide(a, c) is not None:
                        reps.append(self.canonical(c))
        return sorted(set(reps), key=self.sort_key)

    def _irreducible(self, a) -> bool:
        reps = self._divisor_reps(a)
        return reps == [self.canonical(a)]

    def _factor_reps(self, a):
        out = []
        rest = self.canonical(a)
        while True:
            reps = self._divisor_reps(rest)
            proper = [r for r in reps if r != rest]
            if not proper:
                out.append(rest)
                return tuple(out)
            f = min(proper, key=self.sort_key)
            out.append(f)
            rest = self.canonical(self.divide(rest, f))
            if self.is_unit(rest):
                return tuple(out)


# ---------------------------------------------------------------------------
# one-prime valuation chain


class PPowerRing(Ring):
    tag = "valp"

    K_MAX = 4096

    def __init__(self, p: int):
        if not isprime(p):
            raise ValueError(f"valp parameter must be prime, got {p}")
        self.p = p
        self.caps = Capabilities(
            has_gcd=True,
            is_valuation=True,
            is_atomic=True,
            is_ufd=True,
            # the full local ring has infinitely many units, so the finite-unit
            # prime generator refuses this adapter
            unit_count=UnitCount.countable(),
        )

    def element(self, k: int) -> PPow:
        if k < 0:
            raise ValueError("valuation exponent must be >= 0")
        return PPow(self.p, k)

    def _check(self, e) -> None:
        if e.p != self.p:
            raise RingMismatch(f"element of valp({e.p}) used in {self.name}")

    def is_zero(self, e) -> bool:
        return False  # zero has no representation here

    def is_unit(self, e) -> bool:
        return e.k == 0

    def one(self):
        return PPow(self.p, 0)

    def units(self):
        return (PPow(self.p, 0),)

    def mul(self, a, b):
        self._check(a)
        self._check(b)
        return PPow(self.p, a.k + b.k)

    def add(self, a, b):
        raise CapabilityMissing("valp classes carry no additive structure")

    def neg(self, e):
        return e  # -u*p^k is still a unit times p^k

    def canonical(self, e):
        return e

    def divide(self, numer, denom):
        self._check(numer)
        self._check(denom)
        if denom.k <= numer.k:
            return PPow(self.p, numer.k - denom.k)
        return None

    def sort_key(self, e):
        return (e.k,)

    def fmt(self, e) -> str:
        return "p" if e.k == 1 else f"p^{e.k}"

    def parse(self, text: str):
        s = text.strip()
        if not s:
            raise ElementSyntaxError(text, 0, "empty element text")
        if s == "p":
            return PPow(self.p, 1)
        m = re.fullmatch(r"p\^(\d+)", s)
        if m:
            k = int(m.group(1))
        elif s.isdigit():
            v, k = int(s), 0
            while v > 1 and v % self.p == 0:
                v //= self.p
                k += 1
            if v != 1:
                raise ElementSyntaxError(text, 0, f"not a power of {self.p}")
        else:
            raise ElementSyntaxError(text, 1 if s.startswith("p") else 0, "expected p^k")
        if k > self.K_MAX:
            raise SizeGuard(f"exponent {k} exceeds the valp bound {self.K_MAX}")
        return PPow(self.p, k)

    def _divisor_reps(self, a):
        self._check(a)
        return [PPow(self.p, j) for j in range(1, a.k + 1)]

    def _irreducible(self, a) -> bool:
        return a.k == 1

    def _factor_reps(self, a):
        return (PPow(self.p, 1),) * a.k

    def _gcd(self, a, b):
        return PPow(self.p, min(a.k, b.k))


# ---------------------------------------------------------------------------
# registry

RING_TAGS = ("z", "gauss", "fp", "zs5", "valp")


@lru_cache(maxsize=None)
def make_ring(tag: str, p: Optional[int] = None) -> Ring:
    if tag == "z":
        return IntegerRing()
    if tag == "gauss":
        return GaussianRing()
    if tag == "zs5":
        return RootMinus5Ring()
    if tag == "fp":
        if p is None:
            raise ModulusMissing("fp needs a modulus p")
        return PolynomialRing(p)
    if tag == "valp":
        if p is None:
            raise ModulusMissing("valp needs a prime p")
        return PPowerRing(p)
    raise ValueError(f"unknown ring tag {tag!r}")
