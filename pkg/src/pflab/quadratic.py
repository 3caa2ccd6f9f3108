"""Quadratic Pfister forms <<b1, ..., b_{k-1}, alpha]] in characteristic 2.

A k-fold quadratic Pfister form is the bilinear form <<b1,...,b_{k-1}>>
tensored with the binary block [1, alpha]: on coordinates (u_e, w_e),
e ranging over {0,1}^(k-1) in ascending lex order, it evaluates to

    sum over e of  b^e * (u_e^2 + u_e*w_e + alpha * w_e^2).

Vectors are flat tuples of 2^k field elements ordered
(u_e1, w_e1, u_e2, w_e2, ...).  The basis vector at (e, u) takes the
diagonal value b^e, the one at (e, w) takes b^e * alpha.

When all slots (bilinear ones plus alpha) have negative value with
independent parities, the value of the form at any nonzero vector is
the unique minimum of 2*val(c) + val(diagonal) over its nonzero
coordinates, because the diagonal values land in pairwise distinct
parity classes and cross terms cannot reach the minimum.  That single
fact drives every certificate in this module: the parity image of the
pure part misses exactly the parity of alpha, so a family whose pure
parity images intersect in the zero class alone cannot share an
inseparable quadratic splitting field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadRank,
    ContextMismatch,
    HypothesisFailed,
    ValuationOfZero,
    ZeroSlot,
    ZeroW,
)
from .field import FieldContext, FieldElement
from .valuation import (
    ParitySet,
    dominant_term_hypothesis,
    parity,
    parity_span,
    val,
)

__all__ = [
    "QuadraticPfister",
    "InsepObstructionCertificate",
    "insep_obstruction",
    "necessary_insep_split",
    "right_slot_from_value",
    "build_quadratic_family",
]


class QuadraticPfister:
    """A k-fold quadratic Pfister form: bilinear slots plus the block slot."""

    __slots__ = ("ctx", "bilinear_slots", "quad_slot", "_diag")

    def __init__(
        self,
        ctx: FieldContext,
        bilinear_slots: Sequence[FieldElement],
        quad_slot: FieldElement,
    ):
        bilinear_slots = tuple(bilinear_slots)
        for s in bilinear_slots + (quad_slot,):
            if s.ctx != ctx:
                raise ContextMismatch("slot from a different field context")
            if s.is_zero:
                raise ZeroSlot("zero slot in a quadratic Pfister form")
        self.ctx = ctx
        self.bilinear_slots = bilinear_slots
        self.quad_slot = quad_slot
        self._diag = None

    @property
    def fold(self) -> int:
        return len(self.bilinear_slots) + 1

    @property
    def dim(self) -> int:
        return 2**self.fold

    def slot_list(self) -> tuple[FieldElement, ...]:
        return self.bilinear_slots + (self.quad_slot,)

    def block_patterns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(itertools.product((0, 1), repeat=self.fold - 1))

    def block_coefficients(self) -> list[FieldElement]:
        """Products b^e in ascending lex e-order (one per binary block)."""
        out = []
        for e in self.block_patterns():
            p = self.ctx.one
            for take, s in zip(e, self.bilinear_slots):
                if take:
                    p = p * s
            out.append(p)
        return out

    def diagonal_values(self) -> list[FieldElement]:
        """Value of the form on each basis vector, in coordinate order."""
        if self._diag is None:
            diag = []
            for coef in self.block_coefficients():
                diag.append(coef)
                diag.append(coef * self.quad_slot)
            self._diag = diag
        return self._diag

    def _check_vector(self, v: Sequence[FieldElement]) -> None:
        if len(v) != self.dim:
            raise ValueError(f"vector length {len(v)} != form dimension {self.dim}")
        for c in v:
            if c.ctx != self.ctx:
                raise ContextMismatch("vector entry from a different field context")

    def evaluate(self, v: Sequence[FieldElement]) -> FieldElement:
        """phi(v) = sum of b^e * (u_e^2 + u_e w_e + alpha w_e^2)."""
        self._check_vector(v)
        out = self.ctx.zero
        for coef, i in zip(self.block_coefficients(), range(0, self.dim, 2)):
            u, w = v[i], v[i + 1]
            block = u.square() + u * w + self.quad_slot * w.square()
            if block:
                out = out + coef * block
        return out

    def evaluate_pure(self, v: Sequence[FieldElement]) -> FieldElement:
        """The pure part <1> on u_0 plus the blocks with e != 0; the w_0
        coordinate must be absent (zero)."""
        self._check_vector(v)
        if v[1]:
            raise ValueError("pure part has no w coordinate on the first block")
        out = v[0].square()
        for coef, i in zip(self.block_coefficients()[1:], range(2, self.dim, 2)):
            u, w = v[i], v[i + 1]
            block = u.square() + u * w + self.quad_slot * w.square()
            if block:
                out = out + coef * block
        return out

    def dominant_value(self, v: Sequence[FieldElement]) -> tuple[int, ...]:
        """min over nonzero coordinates of 2*val(c) + val(diagonal value).

        Under the slot hypothesis the minimum is attained exactly once and
        equals val(phi(v)).
        """
        if not dominant_term_hypothesis(self.slot_list()):
            raise HypothesisFailed("slots lack negative values with independent parities")
        self._check_vector(v)
        best = None
        for c, d in zip(v, self.diagonal_values()):
            if not c:
                continue
            cand = tuple(2 * a + b for a, b in zip(val(c), val(d)))
            if best is None or cand < best:
                best = cand
        if best is None:
            raise ValuationOfZero("the zero vector has no dominant value")
        return best

    def parity_image(self) -> ParitySet:
        """GF(2)-span of the slot parities; the parity image of D(phi)."""
        if not dominant_term_hypothesis(self.slot_list()):
            raise HypothesisFailed("slots lack negative values with independent parities")
        return parity_span(self.ctx.n, [parity(s) for s in self.slot_list()])

    def pure_parity_image(self) -> ParitySet:
        """Parities of the pure-part diagonal values (all basis vectors except
        the w coordinate of the first block); misses exactly parity(alpha)."""
        if not dominant_term_hypothesis(self.slot_list()):
            raise HypothesisFailed("slots lack negative values with independent parities")
        classes = []
        for i, d in enumerate(self.diagonal_values()):
            if i == 1:  # (e = 0, w): diagonal value alpha itself
                continue
            classes.append(parity(d))
        return ParitySet.of(self.ctx.n, classes)

    def __eq__(self, other):
        if not isinstance(other, QuadraticPfister):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.bilinear_slots == other.bilinear_slots
            and self.quad_slot == other.quad_slot
        )

    def __hash__(self):
        return hash((self.ctx, self.bilinear_slots, self.quad_slot))

    def __repr__(self):
        inner = ", ".join(str(s) for s in self.bilinear_slots)
        return f"<<{inner}, {self.quad_slot}]]"

    def to_json(self):
        return {
            "type": "quadratic_pfister",
            "bilinear_slots": [s.to_json() for s in self.bilinear_slots],
            "quad_slot": self.quad_slot.to_json(),
        }

    @classmethod
    def from_json(cls, ctx: FieldContext, data) -> QuadraticPfister:
        if not isinstance(data, dict) or data.get("type") != "quadratic_pfister":
            raise ValueError("expected a quadratic_pfister object")
        slots = [FieldElement.from_json(ctx, s) for s in data["bilinear_slots"]]
        quad = FieldElement.from_json(ctx, data["quad_slot"])
        return cls(ctx, slots, quad)


def unit_vector(form: QuadraticPfister, index: int) -> tuple[FieldElement, ...]:
    """The basis vector with 1 at the given flat coordinate index."""
    return tuple(
        form.ctx.one if i == index else form.ctx.zero for i in range(form.dim)
    )


@dataclass(frozen=True)
class InsepObstructionCertificate:
    """Per-form pure parity images plus their intersection.

    The certificate is valid exactly when every hypothesis check passed and
    the intersection is the zero class alone; a field F(sqrt(gamma)) that
    split every form would force parity(gamma) into every pure parity image,
    which is then impossible for any gamma of nonzero parity, while the
    zero-parity case dies on two-dimensional subspaces (every 2-dimensional
    subspace represents values of nonzero parity).
    """

    n: int
    per_form_images: tuple[ParitySet, ...]
    intersection: ParitySet
    hypothesis_checks: tuple[bool, ...]

    @property
    def valid(self) -> bool:
        return all(self.hypothesis_checks) and self.intersection.is_zero_only

    def to_json(self):
        return {
            "per_form_images": [ps.to_json() for ps in self.per_form_images],
            "intersection": self.intersection.to_json(),
            "hypothesis_checks": list(self.hypothesis_checks),
            "valid": self.valid,
        }


def insep_obstruction(forms: Sequence[QuadraticPfister]) -> InsepObstructionCertificate:
    """Certificate that no single inseparable quadratic extension splits all
    forms; raises HypothesisFailed when a form's slots are inadmissible."""
    if not forms:
        raise ValueError("no forms given")
    n = forms[0].ctx.n
    checks = []
    for i, f in enumerate(forms):
        if f.ctx.n != n:
            raise ContextMismatch("forms over different field contexts")
        ok = dominant_term_hypothesis(f.slot_list())
        if not ok:
            raise HypothesisFailed(
                f"form {i} fails the slot hypothesis (negative values, independent parities)"
            )
        checks.append(ok)
    images = tuple(f.pure_parity_image() for f in forms)
    inter = images[0]
    for ps in images[1:]:
        inter = inter & ps
    return InsepObstructionCertificate(n, images, inter, tuple(checks))


def necessary_insep_split(form: QuadraticPfister, gamma: FieldElement) -> bool:
    """Necessary test for F(sqrt(gamma)) splitting the form: False certifies
    no split; True is merely inconclusive."""
    if gamma.is_zero:
        raise ZeroSlot("gamma must be nonzero")
    return parity(gamma) in form.pure_parity_image()


def right_slot_from_value(
    form: QuadraticPfister,
    w: FieldElement,
    x: FieldElement,
    u: Sequence[FieldElement],
) -> FieldElement:
    """Given d = alpha*w^2 + w*x + x^2 + phi''(u) with w != 0, return d/w^2,
    which can serve as the last slot of a presentation of the form.

    u lists the coordinates of the blocks with e != 0 (2^k - 2 entries, in
    the usual order).  The identity d/w^2 = alpha + x/w + (x/w)^2 +
    phi''(u/w) is recomputed independently and checked exactly.
    """
    if w.is_zero:
        raise ZeroW("w must be nonzero")
    u = tuple(u)
    if len(u) != form.dim - 2:
        raise ValueError(f"expected {form.dim - 2} pure-block coordinates")
    alpha = form.quad_slot

    def phi_pp(vec: Sequence[FieldElement]) -> FieldElement:
        out = form.ctx.zero
        for coef, i in zip(form.block_coefficients()[1:], range(0, len(vec), 2)):
            a, b = vec[i], vec[i + 1]
            block = a.square() + a * b + alpha * b.square()
            if block:
                out = out + coef * block
        return out

    d = alpha * w.square() + w * x + x.square() + phi_pp(u)
    result = d / w.square()
    t = x / w
    check = alpha + t + t.square() + phi_pp([c / w for c in u])
    if result != check:
        raise AssertionError("scaling identity failed; arithmetic is inconsistent")
    return result


def build_quadratic_family(n: int) -> list[QuadraticPfister]:
    """The 2^n - 1 quadratic n-fold Pfister forms over GF(2)(a1..an) that
    admit no common inseparable quadratic splitting field.

    For each nonzero bit vector d, the member drops the first variable
    picked out by d from the bilinear slots and uses a^d as the block slot.
    """
    if n < 2:
        raise BadRank("the family needs n >= 2")
    ctx = FieldContext(n)
    gens = ctx.gens
    forms = []
    for k in range(1, 2**n):
        d = tuple((k >> i) & 1 for i in range(n))
        lead = min(i for i in range(n) if d[i])
        bilinear = tuple(g for i, g in enumerate(gens) if i != lead)
        forms.append(QuadraticPfister(ctx, bilinear, ctx.monomial(d)))
    return forms
