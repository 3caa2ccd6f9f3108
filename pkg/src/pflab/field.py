"""Exact arithmetic in F = GF(2)(a1, ..., an).

Elements are fractions of sparse polynomials over GF(2).  A polynomial
is stored as a frozenset of exponent tuples: presence encodes the
coefficient 1, addition is symmetric difference, and multiplication is
pairwise exponent addition with mod-2 cancellation.  Squaring is the
Frobenius map, which in characteristic 2 is additive, so every f in F
decomposes uniquely as

    f = sum over d in {0,1}^n of  c_d^2 * a^d

with a^d = prod a_i^(d_i) ranging over the 2-basis monomials and
c_d in F.  ``FieldElement.frobenius_decompose`` computes that
decomposition; it is the bridge from F^2-linear structure in F to plain
linear algebra over F (see linalg).

Fractions are not kept in lowest terms during arithmetic.  Equality is
cross-multiplicative, so correctness never depends on reduction; a
``canonical`` pass (full multivariate gcd) runs before printing,
hashing and serialization so equal elements print and hash identically.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .errors import ContextMismatch, DivisionByZero, NotASquare

__all__ = ["FieldContext", "Poly", "FieldElement", "TwoBasisCoords"]


class FieldContext:
    """The ambient field GF(2)(a1, ..., an); n is fixed at construction.

    Contexts compare by n.  Mixing elements of contexts with different n
    raises ContextMismatch.
    """

    __slots__ = ("n", "_patterns", "_zero_poly", "_one_poly", "_zero", "_one", "_gens")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        # binary-counting order with the first variable least significant:
        # 1, a1, a2, a1*a2, a3, ...  Family enumeration and every canonical
        # "first basis element" choice downstream inherit this order.
        self._patterns = tuple(
            tuple((k >> i) & 1 for i in range(n)) for k in range(2**n)
        )
        origin = (0,) * n
        self._zero_poly = Poly(frozenset(), n)
        self._one_poly = Poly(frozenset((origin,)), n)
        self._zero = FieldElement(self, self._zero_poly, self._one_poly)
        self._one = FieldElement(self, self._one_poly, self._one_poly)
        self._gens = tuple(
            self.monomial(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)
        )

    def __eq__(self, other):
        return isinstance(other, FieldContext) and other.n == self.n

    def __hash__(self):
        return hash(("FieldContext", self.n))

    def __repr__(self):
        return f"FieldContext(n={self.n})"

    @property
    def patterns(self) -> tuple[tuple[int, ...], ...]:
        """All of {0,1}^n in binary-counting order, first variable = LSB."""
        return self._patterns

    @property
    def zero(self) -> FieldElement:
        return self._zero

    @property
    def one(self) -> FieldElement:
        return self._one

    @property
    def gens(self) -> tuple[FieldElement, ...]:
        """The variables a1, ..., an (gens[0] prints as ``a1``)."""
        return self._gens

    def monomial(self, exponents: Iterable[int]) -> FieldElement:
        exps = tuple(exponents)
        if len(exps) != self.n or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps!r} for n={self.n}")
        return FieldElement(self, Poly(frozenset((exps,)), self.n), self._one_poly)

    def element(self, num_terms: Iterable[Iterable[int]], den_terms=None) -> FieldElement:
        """Build an element from exponent-tuple iterables (den defaults to 1)."""
        num = Poly.of((tuple(t) for t in num_terms), self.n)
        if den_terms is None:
            den = self._one_poly
        else:
            den = Poly.of((tuple(t) for t in den_terms), self.n)
        return FieldElement(self, num, den)


def _check_ctx(a: FieldContext, b: FieldContext) -> None:
    if a.n != b.n:
        raise ContextMismatch(f"cannot mix GF(2)(a1..a{a.n}) with GF(2)(a1..a{b.n})")


class Poly:
    """Sparse polynomial over GF(2): a frozenset of exponent tuples.

    The representation is already canonical, so equality and hashing are
    structural.
    """

    __slots__ = ("terms", "n")

    def __init__(self, terms: frozenset, n: int):
        self.terms = terms
        self.n = n

    @classmethod
    def of(cls, terms: Iterable[tuple[int, ...]], n: int) -> Poly:
        """Build from an iterable of exponent tuples, cancelling duplicates mod 2."""
        acc: set = set()
        for t in terms:
            if len(t) != n or any(e < 0 for e in t):
                raise ValueError(f"bad exponent vector {t!r} for n={n}")
            acc.symmetric_difference_update((t,))
        return cls(frozenset(acc), n)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and other.terms == self.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other: Poly) -> Poly:
        return Poly(self.terms ^ other.terms, self.n)

    __sub__ = __add__  # char 2

    def __mul__(self, other: Poly) -> Poly:
        if not self.terms or not other.terms:
            return Poly(frozenset(), self.n)
        if len(other.terms) < len(self.terms):
            self, other = other, self
        if len(self.terms) * len(other.terms) > _PACK_MIN_WORK:
            packed = _packed_mul(self, other)
            if packed is not None:
                return packed
        acc: set = set()
        toggle = acc.symmetric_difference_update
        for m1 in self.terms:
            toggle({tuple(map(int.__add__, m1, m2)) for m2 in other.terms})
        return Poly(frozenset(acc), self.n)

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly(frozenset(((0,) * self.n,)), self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base.square()
            k >>= 1
        return out

    def square(self) -> Poly:
        # Frobenius: (sum m)^2 = sum m^2, no cross terms in char 2
        return Poly(frozenset(tuple(2 * e for e in m) for m in self.terms), self.n)

    def is_square(self) -> bool:
        return all(e % 2 == 0 for m in self.terms for e in m)

    def sqrt(self) -> Poly:
        if not self.is_square():
            raise NotASquare(f"{self!r} is not a square in GF(2)[a1..a{self.n}]")
        return Poly(frozenset(tuple(e // 2 for e in m) for m in self.terms), self.n)

    def monomial_content(self) -> tuple[int, ...]:
        """Componentwise minimum exponent over all terms (zero poly -> zeros)."""
        if not self.terms:
            return (0,) * self.n
        return tuple(min(col) for col in zip(*self.terms))

    def shift(self, m: tuple[int, ...]) -> Poly:
        """Divide by the monomial a^m (every term must dominate m)."""
        return Poly(frozenset(tuple(e - f for e, f in zip(t, m)) for t in self.terms), self.n)

    def max_degrees(self) -> tuple[int, ...]:
        if not self.terms:
            return (0,) * self.n
        return tuple(max(col) for col in zip(*self.terms))

    def sorted_terms(self) -> list[tuple[int, ...]]:
        """Terms in descending lex order (leading monomial first)."""
        return sorted(self.terms, reverse=True)

    def __repr__(self):
        return f"Poly({_poly_str(self)})"


def _poly_str(p: Poly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for m in p.sorted_terms():
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(f"a{i + 1}")
            elif e > 1:
                factors.append(f"a{i + 1}^{e}")
        parts.append("*".join(factors) if factors else "1")
    return "+".join(parts)


# ---------------------------------------------------------------------------
# packed arithmetic: GF(2) polynomials as integer bitboards
# ---------------------------------------------------------------------------
# Bulky operands are far cheaper on a bitboard than on sets of exponent
# tuples: map each exponent vector to a bit position by mixed-radix packing,
# with every variable's field wide enough that a product cannot carry into
# the next field.  Positions are then additive, so multiplication is one
# shifted XOR per term of the smaller factor and exact division is lead-bit
# peeling, all at C speed on Python ints.  Small operands keep the set
# representation; packing overhead would dominate there.

_PACK_MIN_WORK = 1024
_PACK_MIN_DIV = 48
_PACK_MAX_BITS = 1 << 26

_BYTE_BITS = tuple(
    tuple(b for b in range(8) if byte >> b & 1) for byte in range(256)
)


def _strides(radices: tuple[int, ...]) -> tuple[list[int], int]:
    out = []
    size = 1
    for r in radices:
        out.append(size)
        size *= r
    return out, size


def _pack(terms, strides, size: int) -> int:
    buf = bytearray(size + 7 >> 3)
    for e in terms:
        pos = sum(ei * si for ei, si in zip(e, strides))
        buf[pos >> 3] |= 1 << (pos & 7)
    return int.from_bytes(buf, "little")


def _decode(pos: int, radices, strides) -> tuple[int, ...]:
    return tuple(pos // s % r for r, s in zip(radices, strides))


def _unpack(v: int, radices, strides, n: int) -> frozenset:
    raw = v.to_bytes((v.bit_length() + 7) // 8, "little")
    terms = []
    for idx, byte in enumerate(raw):
        if byte:
            base = idx * 8
            for b in _BYTE_BITS[byte]:
                terms.append(_decode(base + b, radices, strides))
    return frozenset(terms)


def _packed_mul(f: Poly, g: Poly) -> Poly | None:
    """f * g on bitboards, or None when the bounding box is too large."""
    radices = tuple(
        df + dg + 1 for df, dg in zip(f.max_degrees(), g.max_degrees())
    )
    strides, size = _strides(radices)
    if size > _PACK_MAX_BITS:
        return None
    gp = _pack(g.terms, strides, size)
    acc = 0
    for e in f.terms:
        acc ^= gp << sum(ei * si for ei, si in zip(e, strides))
    return Poly(_unpack(acc, radices, strides, f.n), f.n)


def _packed_divexact(f: Poly, g: Poly) -> Poly | None:
    """f/g on bitboards; None if too large, ValueError if not divisible.

    In an exact division every intermediate remainder equals (unconsumed
    quotient) * g, so per variable nothing ever outgrows f's own degree
    box and the packing cannot alias.  The two guards below can only trip
    on a non-divisible input.
    """
    fd = f.max_degrees()
    gd = g.max_degrees()
    qd = tuple(a - b for a, b in zip(fd, gd))
    if any(d < 0 for d in qd):
        raise ValueError("not divisible")
    radices = tuple(d + 1 for d in fd)
    strides, size = _strides(radices)
    if size > _PACK_MAX_BITS:
        return None
    r = _pack(f.terms, strides, size)
    gp = _pack(g.terms, strides, size)
    glead = gp.bit_length() - 1
    ge = _decode(glead, radices, strides)
    q = 0
    while r:
        rlead = r.bit_length() - 1
        qe = tuple(a - b for a, b in zip(_decode(rlead, radices, strides), ge))
        if any(e < 0 for e in qe) or any(a > b for a, b in zip(qe, qd)):
            raise ValueError("not divisible")
        shift = rlead - glead
        r ^= gp << shift
        q |= 1 << shift
    return Poly(_unpack(q, radices, strides, f.n), f.n)


# ---------------------------------------------------------------------------
# multivariate gcd over GF(2) (used only by FieldElement.canonical)
# ---------------------------------------------------------------------------


def _divexact(f: Poly, g: Poly) -> Poly:
    """Exact division f/g; raises ValueError if g does not divide f."""
    if not g.terms:
        raise ZeroDivisionError("polynomial division by zero")
    if len(f.terms) > _PACK_MIN_DIV:
        packed = _packed_divexact(f, g)
        if packed is not None:
            return packed
    out: set = set()
    cur = set(f.terms)
    lg = max(g.terms)
    while cur:
        lf = max(cur)
        q = tuple(a - b for a, b in zip(lf, lg))
        if any(e < 0 for e in q):
            raise ValueError("not divisible")
        out.add(q)
        for m in g.terms:
            t = tuple(map(int.__add__, q, m))
            if t in cur:
                cur.remove(t)
            else:
                cur.add(t)
    return Poly(frozenset(out), f.n)


def _split(f: Poly, v: int) -> dict[int, Poly]:
    """View f as univariate in variable v with coefficients free of v."""
    parts: dict[int, set] = {}
    for m in f.terms:
        coef = m[:v] + (0,) + m[v + 1 :]
        parts.setdefault(m[v], set()).add(coef)
    return {d: Poly(frozenset(s), f.n) for d, s in parts.items()}


def _join(parts: dict[int, Poly], v: int, n: int) -> Poly:
    acc: set = set()
    for d, coef in parts.items():
        for m in coef.terms:
            acc.add(m[:v] + (d,) + m[v + 1 :])
    return Poly(frozenset(acc), n)


def _prem(f: Poly, g: Poly, v: int) -> Poly:
    """Pseudo-remainder of f by g w.r.t. variable v (both of positive v-degree)."""
    gp = _split(g, v)
    dg = max(gp)
    lc = gp[dg]
    r = f
    while r:
        rp = _split(r, v)
        dr = max(rp)
        if dr < dg:
            break
        lead = _join({dr - dg: rp[dr]}, v, f.n)
        r = lc * r + lead * g  # same leading v-term on both sides: cancels
    return r


def _primitive(f: Poly, v: int) -> Poly:
    parts = _split(f, v)
    coefs = list(parts.values())
    cont = coefs[0]
    for c in coefs[1:]:
        cont = _gcd(cont, c)
    if cont == Poly(frozenset(((0,) * f.n,)), f.n):
        return f
    return _divexact(f, cont)


def _gcd(f: Poly, g: Poly) -> Poly:
    """Greatest common divisor in GF(2)[a1..an]; unique (the only unit is 1)."""
    if not f.terms:
        return g
    if not g.terms:
        return f
    mf, mg = f.monomial_content(), g.monomial_content()
    m = tuple(map(min, mf, mg))
    f0, g0 = f.shift(mf), g.shift(mg)
    mono = Poly(frozenset((m,)), f.n)
    if f0.terms == g0.terms or len(f0.terms) == 1 or len(g0.terms) == 1:
        # after stripping, a single term is the monomial 1
        core = f0 if f0.terms == g0.terms else Poly(frozenset(((0,) * f.n,)), f.n)
        return mono * core
    df, dg = f0.max_degrees(), g0.max_degrees()
    v = next(i for i in range(f.n) if df[i] or dg[i])
    fparts, gparts = _split(f0, v), _split(g0, v)
    cont_f = _content_of(fparts)
    cont_g = _content_of(gparts)
    c = _gcd(cont_f, cont_g)
    fp = f0 if cont_f.terms == {(0,) * f.n} else _divexact(f0, cont_f)
    gp = g0 if cont_g.terms == {(0,) * f.n} else _divexact(g0, cont_g)
    one = Poly(frozenset(((0,) * f.n,)), f.n)

    def vdeg(p: Poly) -> int:
        return max((t[v] for t in p.terms), default=-1)

    if vdeg(fp) < vdeg(gp):
        fp, gp = gp, fp
    pp = one
    while True:
        if vdeg(gp) == 0:
            # a v-free common divisor divides the v-content of fp, which is 1
            pp = gp if gp == fp else one
            break
        r = _prem(fp, gp, v)
        if not r:
            pp = gp
            break
        fp, gp = gp, _primitive(r, v)
    return mono * c * pp


def _content_of(parts: dict[int, Poly]) -> Poly:
    coefs = list(parts.values())
    cont = coefs[0]
    for c in coefs[1:]:
        cont = _gcd(cont, c)
    return cont


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------


class FieldElement:
    """A fraction num/den of GF(2) polynomials, den nonzero.

    The constructor only applies cheap normalizations (zero numerator,
    num == den, common monomial factor); ``canonical()`` produces and
    caches lowest terms.
    """

    __slots__ = ("ctx", "num", "den", "_canon")

    def __init__(self, ctx: FieldContext, num: Poly, den: Poly):
        if not den.terms:
            raise DivisionByZero("zero denominator")
        if not num.terms:
            den = ctx._one_poly
        elif num.terms == den.terms:
            num = den = ctx._one_poly
        else:
            mn, md = num.monomial_content(), den.monomial_content()
            m = tuple(map(min, mn, md))
            if any(m):
                num, den = num.shift(m), den.shift(m)
        self.ctx = ctx
        self.num = num
        self.den = den
        self._canon = None

    # -- basic structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def canonical(self) -> tuple[Poly, Poly]:
        """Lowest-terms (num, den); computed once and cached."""
        if self._canon is None:
            g = _gcd(self.num, self.den)
            if len(g.terms) == 1 and not any(next(iter(g.terms))):
                self._canon = (self.num, self.den)
            else:
                self._canon = (_divexact(self.num, g), _divexact(self.den, g))
        return self._canon

    def reduced(self) -> FieldElement:
        """Lowest-terms copy; keeps long elimination chains from snowballing."""
        if not self.num.terms:
            return self.ctx.zero
        if len(self.num.terms) == 1 and len(self.den.terms) == 1:
            return self
        n, d = self.canonical()
        if n is self.num and d is self.den:
            return self
        out = FieldElement(self.ctx, n, d)
        out._canon = (out.num, out.den)
        return out

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        _check_ctx(self.ctx, other.ctx)
        if self.num.terms == other.num.terms and self.den.terms == other.den.terms:
            return True
        return (self.num * other.den).terms == (other.num * self.den).terms

    def __hash__(self):
        n, d = self.canonical()
        return hash((n.terms, d.terms))

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            _check_ctx(self.ctx, other.ctx)
            return other
        if isinstance(other, int):
            return self.ctx.one if other % 2 else self.ctx.zero
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den.terms == other.den.terms:
            return FieldElement(self.ctx, self.num + other.num, self.den)
        return FieldElement(
            self.ctx,
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    __radd__ = __add__
    __sub__ = __add__  # char 2
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return self.ctx.zero
        return FieldElement(self.ctx, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num.terms:
            raise DivisionByZero("division by zero field element")
        if not self.num.terms:
            return self.ctx.zero
        return FieldElement(self.ctx, self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            if self.is_zero:
                raise DivisionByZero("negative power of zero")
            return FieldElement(self.ctx, self.den, self.num) ** (-k)
        out = self.ctx.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base.square()
            k >>= 1
        return out

    def square(self) -> FieldElement:
        return FieldElement(self.ctx, self.num.square(), self.den.square())

    # -- Frobenius structure --------------------------------------------------

    def is_square(self) -> bool:
        """0 counts as a square."""
        return (self.num * self.den).is_square()

    def sqrt(self) -> FieldElement:
        # f = num*den / den^2, so sqrt(f) = sqrt(num*den)/den when it exists
        g = self.num * self.den
        if not g.is_square():
            raise NotASquare(f"{self} is not a square")
        return FieldElement(self.ctx, g.sqrt(), self.den)

    def frobenius_decompose(self) -> TwoBasisCoords:
        """The unique coordinates {c_d} with f = sum c_d^2 * a^d, d in {0,1}^n.

        Writes f = (num*den)/den^2, splits num*den by the exponent parity
        pattern d into a^d * s_d(a^2), and sets c_d = s_d(a)/den.
        """
        g = self.num * self.den
        buckets: dict[tuple[int, ...], set] = {}
        for t in g.terms:
            d = tuple(e % 2 for e in t)
            buckets.setdefault(d, set()).add(tuple(e // 2 for e in t))
        coords = {}
        for d, halves in buckets.items():
            coords[d] = FieldElement(self.ctx, Poly(frozenset(halves), self.ctx.n), self.den)
        return TwoBasisCoords(self.ctx, coords)

    # -- presentation ----------------------------------------------------------

    def __str__(self):
        n, d = self.canonical()
        if len(d.terms) == 1 and not any(next(iter(d.terms))):
            return _poly_str(n)
        return f"{_poly_str(n)} / {_poly_str(d)}"

    def __repr__(self):
        return f"<{self} in GF(2)(a1..a{self.ctx.n})>"

    def to_json(self):
        n, d = self.canonical()
        return {
            "num": [list(t) for t in n.sorted_terms()],
            "den": [list(t) for t in d.sorted_terms()],
        }

    @classmethod
    def from_json(cls, ctx: FieldContext, data) -> FieldElement:
        if not isinstance(data, dict) or "num" not in data or "den" not in data:
            raise ValueError("field element JSON must have 'num' and 'den'")
        return ctx.element(data["num"], data["den"])


class TwoBasisCoords:
    """Coordinates of f over the 2-basis monomials: f = sum c_d^2 * a^d.

    Only nonzero coordinates are stored.
    """

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: FieldContext, coords: dict[tuple[int, ...], FieldElement]):
        self.ctx = ctx
        self.coords = {d: c for d, c in coords.items() if c}

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], FieldElement]]:
        return iter(sorted(self.coords.items()))

    def __getitem__(self, d: tuple[int, ...]) -> FieldElement:
        return self.coords.get(d, self.ctx.zero)

    def dense(self) -> tuple[FieldElement, ...]:
        """Row over all patterns of {0,1}^n in the context's column order."""
        zero = self.ctx.zero
        return tuple(self.coords.get(d, zero) for d in self.ctx.patterns)

    def reconstruct(self) -> FieldElement:
        out = self.ctx.zero
        for d, c in self.coords.items():
            out = out + c.square() * self.ctx.monomial(d)
        return out

    def to_json(self):
        return [[list(d), c.to_json()] for d, c in sorted(self.coords.items())]

    def __repr__(self):
        inner = ", ".join(f"{d}: {c}" for d, c in self)
        return f"TwoBasisCoords({{{inner}}})"
