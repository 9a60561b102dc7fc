"""Ideals, Groebner/standard bases, dimensions, elimination and saturation."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ._engine import (
    Engine,
    krull_dim_monomial,
    make_primitive,
    staircase_monomials,
)
from .errors import NO_DEADLINE, RingMismatch
from .orders import DEGREVLEX, NEGDEGREVLEX, MonomialOrder, elimination_order
from .poly import Polynomial
from .rings import RingContext


@dataclass(frozen=True)
class Ideal:
    ring: RingContext
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatch("generator outside the ideal's ring")
        object.__setattr__(
            self, "generators", tuple(g for g in self.generators if not g.is_zero())
        )

    def map_ring(self, target: RingContext) -> "Ideal":
        return Ideal(target, tuple(g.map_ring(target) for g in self.generators))


def ideal(ring: RingContext, *gens: Polynomial) -> Ideal:
    return Ideal(ring, tuple(gens))


@dataclass(frozen=True)
class GroebnerBasis:
    ring: RingContext
    order: MonomialOrder
    elements: tuple[Polynomial, ...]
    reduced: bool = True

    def leading_keys(self):
        return tuple(g.leading_key() for g in self.elements)

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def is_zero(self) -> bool:
        return not self.elements


@dataclass(frozen=True)
class DimensionResult:
    kind: str  # "finite" | "infinite"
    count: int | None = None
    krull_dim: int | None = None


def _engine_for(ring: RingContext, deadline) -> Engine:
    prime = ring.field.characteristic if ring.field.is_prime_field else 0
    return Engine(ring.codec, prime, deadline)


def _to_raw(p: Polynomial, engine: Engine):
    return engine.normalize(list(p.terms))


def _from_raw(ring: RingContext, raw) -> Polynomial:
    return Polynomial(ring, tuple(raw), 1, _normalized=True)


def buchberger(I: Ideal, deadline=NO_DEADLINE) -> GroebnerBasis:
    """Reduced Groebner basis under the ring's (global) order."""
    if not I.ring.order.is_global:
        raise ValueError("buchberger needs a global order; use mora_standard_basis")
    eng = _engine_for(I.ring, deadline)
    raws = [r for r in (_to_raw(g, eng) for g in I.generators) if r]
    out = eng.buchberger(raws)
    return GroebnerBasis(I.ring, I.ring.order, tuple(_from_raw(I.ring, r) for r in out))


def mora_standard_basis(I: Ideal, deadline=NO_DEADLINE) -> GroebnerBasis:
    """Minimal standard basis for the local order (Mora's tangent cone method).

    The ideal is re-encoded into the same ring with the local order if needed.
    """
    ring = I.ring
    if ring.order != NEGDEGREVLEX:
        ring = ring.with_order(NEGDEGREVLEX)
        I = I.map_ring(ring)
    eng = _engine_for(ring, deadline)
    raws = [r for r in (_to_raw(g, eng) for g in I.generators) if r]
    out = eng.mora(raws)
    return GroebnerBasis(ring, ring.order, tuple(_from_raw(ring, r) for r in out))


def normal_form(p: Polynomial, G: GroebnerBasis, deadline=NO_DEADLINE) -> Polynomial:
    """Remainder of p modulo G.

    Global orders: the unique fully reduced normal form (zero iff p is in the
    ideal).  Local orders: Mora weak normal form, which only guarantees an
    irreducible leading term.
    """
    if p.ring.variables != G.ring.variables or p.ring.field != G.ring.field:
        raise RingMismatch("polynomial and basis live in different rings")
    if p.ring != G.ring:
        p = p.map_ring(G.ring)
    eng = _engine_for(G.ring, deadline)
    if p.is_zero() or not G.elements:
        return p
    if G.order.is_global:
        triples = sorted(
            ((g.leading_key(), list(g.terms), g.terms[0][1]) for g in G.elements),
            key=lambda t: t[0],
        )
        frac = eng.reduce_full(
            dict(p.terms),
            [t[0] for t in triples],
            [t[1] for t in triples],
            [t[2] for t in triples],
            exact=True,
        )
        if G.ring.field.is_prime_field:
            return Polynomial(G.ring, frac, 1)
        den = 1
        for v in frac.values():
            den = den * v.denominator // gcd(den, v.denominator)
        return Polynomial(G.ring, {k: int(v * den) for k, v in frac.items()}, p.denom * den)
    reducers = [
        (g.leading_key(), _ecart_of(G.ring, g), list(g.terms), i)
        for i, g in enumerate(G.elements)
    ]
    raw = eng.mora_nf(dict(p.terms), reducers)
    return _from_raw(G.ring, raw)


def _ecart_of(ring: RingContext, g: Polynomial) -> int:
    deg = ring.codec.total_degree
    return max(deg(k) for k, _ in g.terms) - deg(g.leading_key())


def in_ideal(p: Polynomial, G: GroebnerBasis, deadline=NO_DEADLINE) -> bool:
    return normal_form(p, G, deadline).is_zero()


def ideal_contains(big: GroebnerBasis, small: Ideal, deadline=NO_DEADLINE) -> bool:
    """True iff every generator of `small` lies in the ideal of `big`."""
    return all(in_ideal(g, big, deadline) for g in small.generators)


def staircase_dimension(G: GroebnerBasis) -> DimensionResult:
    """Count of monomials outside the leading ideal, or its Krull dimension."""
    codec = G.ring.codec
    if not G.elements:
        return DimensionResult("infinite", krull_dim=G.ring.nvars)
    lms = [g.leading_key() for g in G.elements]
    mons = staircase_monomials(codec, lms)
    if mons is None:
        return DimensionResult("infinite", krull_dim=max(1, krull_dim_monomial(codec, lms, codec.nvars)))
    return DimensionResult("finite", count=len(mons))


def standard_monomials(G: GroebnerBasis):
    """Exponent tuples of the monomials outside the leading ideal."""
    codec = G.ring.codec
    lms = [g.leading_key() for g in G.elements]
    mons = staircase_monomials(codec, lms)
    if mons is None:
        raise ValueError("the quotient is not finite dimensional")
    return tuple(sorted(codec.unpack(k) for k in mons))


def krull_dimension(G: GroebnerBasis) -> int:
    """Dimension of the leading monomial ideal (0 for the unit ideal)."""
    if not G.order.is_global:
        raise ValueError("krull_dimension is defined for global orders")
    if not G.elements:
        return G.ring.nvars
    codec = G.ring.codec
    d = krull_dim_monomial(codec, [g.leading_key() for g in G.elements], codec.nvars)
    return max(d, 0)


def _fresh_tag(ring: RingContext, stem: str) -> str:
    if stem not in ring.variables:
        return stem
    i = 0
    while f"{stem}{i}" in ring.variables:
        i += 1
    return f"{stem}{i}"


def _eliminate_front(ext_ideal: Ideal, k: int, target: RingContext, deadline) -> Ideal:
    """Intersect with the subring missing the first k variables."""
    G = buchberger(ext_ideal, deadline)
    codec = ext_ideal.ring.codec
    block = set(range(k))
    kept = []
    for g in G.elements:
        if not block.intersection(codec.support(g.leading_key())):
            kept.append(g.map_ring(target))
    return Ideal(target, tuple(kept))


def eliminate(I: Ideal, first_k: int, deadline=NO_DEADLINE) -> Ideal:
    """Generators of I intersected with the subring without the first k variables."""
    if first_k == 0:
        return I
    if first_k >= I.ring.nvars:
        raise ValueError("cannot eliminate every variable")
    ring_elim = I.ring.with_order(elimination_order(first_k))
    target = RingContext(I.ring.variables[first_k:], I.ring.field, DEGREVLEX)
    return _eliminate_front(I.map_ring(ring_elim), first_k, target, deadline)


def saturate_element(I: Ideal, g: Polynomial, deadline=NO_DEADLINE) -> Ideal:
    """I : g^infinity via the auxiliary-variable construction."""
    if g.is_zero():
        raise ValueError("cannot saturate by zero")
    if g.ring != I.ring:
        raise RingMismatch("saturating element outside the ideal's ring")
    if g.is_constant():
        return I
    tag = _fresh_tag(I.ring, "_w")
    ring_ext = I.ring.extend_front((tag,), elimination_order(1))
    w = Polynomial.variable(ring_ext, 0)
    gens = [f.map_ring(ring_ext) for f in I.generators]
    gens.append(Polynomial.constant(ring_ext, 1) - w * g.map_ring(ring_ext))
    return _eliminate_front(Ideal(ring_ext, tuple(gens)), 1, I.ring, deadline)


def intersect(I: Ideal, J: Ideal, deadline=NO_DEADLINE) -> Ideal:
    """Ideal intersection via a single tag variable."""
    if I.ring != J.ring:
        raise RingMismatch("intersecting ideals from different rings")
    tag = _fresh_tag(I.ring, "_u")
    ring_ext = I.ring.extend_front((tag,), elimination_order(1))
    u = Polynomial.variable(ring_ext, 0)
    one = Polynomial.constant(ring_ext, 1)
    gens = [u * f.map_ring(ring_ext) for f in I.generators]
    gens.extend((one - u) * g.map_ring(ring_ext) for g in J.generators)
    return _eliminate_front(Ideal(ring_ext, tuple(gens)), 1, I.ring, deadline)


def saturate_ideal(I: Ideal, J: Ideal, deadline=NO_DEADLINE) -> Ideal:
    """I : J^infinity, intersecting the single-element saturations."""
    if I.ring != J.ring:
        raise RingMismatch("saturating by an ideal from a different ring")
    if not J.generators:
        raise ValueError("cannot saturate by the zero ideal")
    if any(g.is_constant() for g in J.generators):
        return I
    seen = set()
    gens = []
    for g in J.generators:
        canon = tuple(make_primitive(list(g.terms)))
        if canon in seen:
            continue
        seen.add(canon)
        gens.append(g)
    result = None
    for g in gens:
        part = saturate_element(I, g, deadline)
        result = part if result is None else intersect(result, part, deadline)
    return result


def radical_membership(g: Polynomial, I: Ideal, deadline=NO_DEADLINE) -> bool:
    """True iff g vanishes on the variety of I (Rabinowitsch test)."""
    if g.ring != I.ring:
        raise RingMismatch("testing a polynomial from a different ring")
    if g.is_zero():
        return True
    if g.is_constant():
        G = buchberger(I, deadline)
        return G.is_unit()
    tag = _fresh_tag(I.ring, "_w")
    ring_ext = I.ring.extend_front((tag,), elimination_order(1))
    w = Polynomial.variable(ring_ext, 0)
    gens = [f.map_ring(ring_ext) for f in I.generators]
    gens.append(Polynomial.constant(ring_ext, 1) - w * g.map_ring(ring_ext))
    G = buchberger(Ideal(ring_ext, tuple(gens)), deadline)
    return G.is_unit()


def translate_ideal(I: Ideal, point) -> Ideal:
    """Substitute x_i -> x_i + point_i, moving `point` to the origin."""
    if len(point) != I.ring.nvars:
        raise ValueError("point has wrong length")
    return Ideal(I.ring, tuple(g.shift_point(point) for g in I.generators))
