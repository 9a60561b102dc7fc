"""Raw Buchberger and Mora machinery on packed term lists.

Polynomials enter as "raw" term lists [(key, coeff), ...] sorted strictly
descending by key.  Over the rationals every raw polynomial is kept
primitive: integer coefficients with content 1 and positive leading
coefficient (reduction is fraction-free by cross-multiplication).  Over a
prime field raw polynomials are monic.

The pair queue uses the normal selection strategy (minimal lcm degree, ties
by the order on the lcm, then by pair indices) and the Gebauer-Moeller
product/chain criteria; everything is deterministic for fixed input.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm

from . import kernel
from .errors import NO_DEADLINE
from .orders import KeyCodec


def make_primitive(items):
    """Canonical rational raw form: content 1, positive leading coefficient."""
    items = [(k, v) for k, v in items if v]
    if not items:
        return []
    items.sort(reverse=True)
    g = kernel.content(v for _, v in items)
    if items[0][1] < 0:
        g = -g
    if g != 1:
        items = [(k, v // g) for k, v in items]
    return items


def primitive_from_fractions(items):
    """Primitive raw form from (key, int-or-Fraction) pairs."""
    items = [(k, v) for k, v in items if v]
    if not items:
        return []
    den = 1
    for _, v in items:
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    return make_primitive([(k, int(v * den)) for k, v in items])


def make_monic(items, p):
    items = [(k, v % p) for k, v in items]
    items = [(k, v) for k, v in items if v]
    if not items:
        return []
    items.sort(reverse=True)
    inv = pow(items[0][1], -1, p)
    if inv != 1:
        items = [(k, v * inv % p) for k, v in items]
    return items


def raw_sort_key(raw):
    return (raw[0][0], len(raw), tuple(raw))


class Engine:
    """Basis computations for one codec and coefficient field."""

    def __init__(self, codec: KeyCodec, prime: int = 0, deadline=NO_DEADLINE):
        self.codec = codec
        self.prime = prime  # 0 means rationals
        self.deadline = deadline

    def normalize(self, items):
        if self.prime:
            return make_monic(items, self.prime)
        return primitive_from_fractions(items)

    # ---------------- reduction ----------------

    def reduce_full(self, h: dict, lms, polys, lcs, hi=None, exact=False):
        """Fully reduce accumulator h against the reducers (global orders).

        lms must be ascending; only reducers with index < hi are used.
        Over the rationals the accumulator holds exact Fractions (reducers
        stay primitive integer polynomials), which keeps every step O(|g|)
        and avoids the coefficient swell of fraction-free whole-h scaling.
        Returns the primitive term list, or {key: Fraction} when exact=True.
        """
        codec = self.codec
        one, guards = codec.one, codec.guards
        p = self.prime
        find = kernel.find_divisor
        deadline = self.deadline
        if hi is None:
            hi = len(lms)
        heap = [-k for k in h]
        heapq.heapify(heap)
        done = set()
        steps = 0
        from bisect import bisect_right

        while heap:
            k = -heapq.heappop(heap)
            if k in done:
                continue
            c = h.get(k)
            if not c:
                continue
            i = find(lms, bisect_right(lms, k, 0, hi), k, one, guards)
            if i < 0:
                done.add(k)
                continue
            steps += 1
            if steps & 255 == 0:
                deadline.check()
            g = polys[i]
            shift = k - lms[i] + one
            if p:
                factor = (p - c) * pow(lcs[i], -1, p) % p
                kernel.iadd_scaled_mod(h, g, factor, shift, one, p)
            else:
                kernel.iadd_scaled(h, g, Fraction(-c, lcs[i]), shift, one)
            for kk, _ in g:
                nk = kk + shift - one
                if nk != k and nk not in done and nk in h:
                    heapq.heappush(heap, -nk)
        if p:
            if exact:
                return {k: v for k, v in h.items() if v}
            return make_monic(h.items(), p)
        if exact:
            return {k: Fraction(v) for k, v in h.items() if v}
        return primitive_from_fractions(h.items())

    # ---------------- global Groebner bases ----------------

    def buchberger(self, gens_raw):
        """Reduced Groebner basis of the given raw generators (global order)."""
        codec = self.codec
        one = codec.one
        lcmf = codec.lcm
        deg = codec.total_degree
        divides = codec.divides

        basis = []       # raw polynomials, insertion order
        blm = []         # their leading keys
        blc = []         # their leading coefficients
        red_lms = []     # ascending view for reduction, with parallel arrays
        red_polys = []
        red_lcs = []
        live = {}        # (i, j) -> lcm key
        heap = []        # (deg lcm, lcm, i, j)

        from bisect import bisect_right

        def add_reducer(raw):
            k = raw[0][0]
            pos = bisect_right(red_lms, k)
            red_lms.insert(pos, k)
            red_polys.insert(pos, raw)
            red_lcs.insert(pos, raw[0][1])

        def reduce_raw(h_items):
            h = dict(h_items) if not isinstance(h_items, dict) else h_items
            return self.reduce_full(h, red_lms, red_polys, red_lcs)

        def add_element(raw):
            t = len(basis)
            lt = raw[0][0]
            # chain criterion on queued pairs
            for (i, j), big in list(live.items()):
                if divides(lt, big) and big != lcmf(blm[i], lt) and big != lcmf(blm[j], lt):
                    del live[(i, j)]
            # candidate pairs with the new element, minimal lcms first
            cands = sorted(
                ((lcmf(blm[i], lt), i) for i in range(t)),
                key=lambda c: (deg(c[0]), c[0], c[1]),
            )
            kept = []
            seen = set()
            for big, i in cands:
                if big in seen:
                    continue
                if any(k2 != big and divides(k2, big) for k2 in seen):
                    continue
                seen.add(big)
                kept.append((big, i))
            basis.append(raw)
            blm.append(lt)
            blc.append(raw[0][1])
            add_reducer(raw)
            for big, i in kept:
                if big == lt + blm[i] - one:  # coprime leading monomials
                    continue
                live[(i, t)] = big
                heapq.heappush(heap, (deg(big), big, i, t))

        for raw in sorted(gens_raw, key=raw_sort_key):
            if not raw:
                continue
            h = reduce_raw(list(raw))
            if h:
                add_element(h)

        while heap:
            self.deadline.check()
            _, big, i, j = heapq.heappop(heap)
            if live.pop((i, j), None) is None:
                continue
            s = self.spoly(basis[i], basis[j], big)
            if not s:
                continue
            h = reduce_raw(s)
            if h:
                add_element(h)

        return self.reduce_basis(basis, blm)

    def spoly(self, f, g, big=None):
        codec = self.codec
        one = codec.one
        if big is None:
            big = codec.lcm(f[0][0], g[0][0])
        sf = big - f[0][0] + one
        sg = big - g[0][0] + one
        h = {}
        p = self.prime
        if p:
            kernel.iadd_scaled_mod(h, f, 1, sf, one, p)
            kernel.iadd_scaled_mod(h, g, (p - 1) * f[0][1] * pow(g[0][1], -1, p) % p, sg, one, p)
        else:
            cf, cg = f[0][1], g[0][1]
            gg = gcd(cf, cg)
            kernel.iadd_scaled(h, f, cg // gg, sf, one)
            kernel.iadd_scaled(h, g, -(cf // gg), sg, one)
        return h

    def reduce_basis(self, basis, blm):
        """Minimalize and tail-reduce to the unique reduced basis, ascending."""
        order = sorted(range(len(basis)), key=lambda i: blm[i])
        divides = self.codec.divides
        kept = []
        kept_lms = []
        for i in order:
            if not any(divides(lm, blm[i]) for lm in kept_lms):
                kept.append(i)
                kept_lms.append(blm[i])
        out = []
        for pos, i in enumerate(kept):
            other_lms = kept_lms[:pos] + kept_lms[pos + 1:]
            others = [basis[j] for j in kept if j != i]
            lcs = [b[0][1] for b in others]
            pairs = sorted(zip(other_lms, others, lcs), key=lambda t: t[0])
            h = self.reduce_full(
                dict(basis[i]),
                [t[0] for t in pairs],
                [t[1] for t in pairs],
                [t[2] for t in pairs],
            )
            out.append(h)
        out.sort(key=lambda raw: raw[0][0])
        return out

    # ---------------- local standard bases (Mora) ----------------

    def mora_nf(self, h_items, reducers):
        """Mora weak normal form with ecart-minimal reducer selection.

        reducers is a mutable list of (lm, ecart, raw, seq); intermediate
        results with larger ecart join it, as in the tangent-cone algorithm.
        """
        codec = self.codec
        one = codec.one
        divides = codec.divides
        deg = codec.total_degree
        p = self.prime
        h = dict(h_items) if not isinstance(h_items, dict) else h_items
        deadline = self.deadline
        steps = 0
        while h:
            k = max(h)
            if not h[k]:
                del h[k]
                continue
            best = None
            for lm, ec, raw, seq in reducers:
                if divides(lm, k):
                    cand = (ec, seq)
                    if best is None or cand < best[0]:
                        best = (cand, lm, raw)
            if best is None:
                break
            steps += 1
            if steps & 127 == 0:
                deadline.check()
            ecart_h = max(deg(kk) for kk in h) - deg(k)
            if best[0][0] > ecart_h:
                reducers.append((k, ecart_h, self.normalize(h.items()), len(reducers)))
            _, lm, raw = best
            shift = k - lm + one
            c = h[k]
            if p:
                factor = (p - c) * pow(raw[0][1], -1, p) % p
                kernel.iadd_scaled_mod(h, raw, factor, shift, one, p)
            else:
                kernel.iadd_scaled(h, raw, -Fraction(c) / raw[0][1], shift, one)
        return self.normalize(h.items())

    def mora(self, gens_raw):
        """Minimal standard basis for the local order.

        Computed through the homogenization form of the tangent-cone
        algorithm: homogenize the generators, run Buchberger for the global
        order refining total degree by the homogenizing exponent (which is
        exactly the ecart), then dehomogenize and minimalize.  This bounds
        the intermediate blowup that direct ecart-driven reduction chains
        suffer in exact arithmetic; `mora_direct` keeps the direct form.
        """
        from .orders import lazard_codec

        codec = self.codec
        if any(k == codec.one for raw in gens_raw for k, _ in raw[:1]):
            # a unit generator makes the whole ring collapse
            return [[(codec.one, 1)]]
        hom_codec = lazard_codec(codec.nvars + 1)
        hom_engine = Engine(hom_codec, self.prime, self.deadline)
        hom_gens = []
        for raw in gens_raw:
            if not raw:
                continue
            exps = [(codec.unpack(k), v) for k, v in raw]
            top = max(sum(e) for e, _ in exps)
            hom_gens.append(
                hom_engine.normalize(
                    [(hom_codec.pack((top - sum(e),) + tuple(e)), v) for e, v in exps]
                )
            )
        hom_basis = hom_engine.buchberger(hom_gens)
        dehom = []
        for raw in hom_basis:
            acc = {}
            for k, v in raw:
                e = hom_codec.unpack(k)
                kk = codec.pack(e[1:])
                acc[kk] = acc.get(kk, 0) + v
            d = self.normalize(acc.items())
            if d:
                dehom.append(d)
        return self._minimalize_local(dehom)

    def _minimalize_local(self, elements):
        divides = self.codec.divides
        order = sorted(range(len(elements)), key=lambda i: -elements[i][0][0])
        kept = []
        kept_lms = []
        for i in order:
            lm = elements[i][0][0]
            if not any(divides(m, lm) for m in kept_lms):
                kept.append(elements[i])
                kept_lms.append(lm)
        kept.sort(key=lambda raw: -raw[0][0])
        return kept

    def mora_direct(self, gens_raw):
        """Standard basis by direct Mora reduction (ecart-minimal selection).

        Pairs are processed by ascending lcm degree; once the leading ideal
        is zero-dimensional, every pair whose lcm degree exceeds the maximal
        standard-monomial degree must reduce to zero (head reduction only
        increases degree for local orders), so the queue is pruned.
        """
        codec = self.codec
        lcmf = codec.lcm
        deg = codec.total_degree
        divides = codec.divides

        basis = []
        blm = []
        becart = []
        live = {}
        heap = []
        cap = [None]  # max useful lcm degree, once known

        def refresh_cap():
            lms = minimal_monomial_generators(codec, blm)
            dd = staircase_degree_cap(codec, lms)
            if dd is None:
                return
            cap[0] = dd
            for key, big in list(live.items()):
                if deg(big) > dd:
                    del live[key]

        def add_element(raw):
            t = len(basis)
            lt = raw[0][0]
            for (i, j), big in list(live.items()):
                if (
                    divides(lt, big)
                    and big != lcmf(blm[i], lt)
                    and big != lcmf(blm[j], lt)
                ):
                    del live[(i, j)]
            cands = sorted(
                ((lcmf(blm[i], lt), i) for i in range(t)),
                key=lambda c: (deg(c[0]), c[0], c[1]),
            )
            kept = []
            seen = []
            for big, i in cands:
                if any(k2 != big and divides(k2, big) for k2 in seen):
                    continue
                seen.append(big)
                kept.append((big, i))
            basis.append(raw)
            blm.append(lt)
            becart.append(ecart(codec, raw))
            for big, i in kept:
                if cap[0] is not None and deg(big) > cap[0]:
                    continue
                live[(i, t)] = big
                heapq.heappush(heap, (deg(big), big, i, t))
            refresh_cap()

        def nf(h_items):
            reducers = [
                (blm[i], becart[i], basis[i], i) for i in range(len(basis))
            ]
            return self.mora_nf(h_items, reducers)

        for raw in sorted(gens_raw, key=raw_sort_key):
            if not raw:
                continue
            h = nf(list(raw))
            if h:
                add_element(h)

        while heap:
            self.deadline.check()
            d, big, i, j = heapq.heappop(heap)
            if live.pop((i, j), None) is None:
                continue
            if cap[0] is not None and d > cap[0]:
                continue
            s = self.spoly(basis[i], basis[j], big)
            if not s:
                continue
            h = nf(s)
            if h:
                add_element(h)

        # minimal set: drop elements whose lead is divisible by another lead
        order = sorted(range(len(basis)), key=lambda i: -blm[i])
        kept = []
        kept_lms = []
        for i in order:
            if not any(divides(lm, blm[i]) for lm in kept_lms):
                kept.append(i)
                kept_lms.append(blm[i])
        out = [basis[i] for i in kept]
        out.sort(key=lambda raw: -raw[0][0])
        return out


def ecart(codec, raw):
    deg = codec.total_degree
    return max(deg(k) for k, _ in raw) - deg(raw[0][0])


def minimal_monomial_generators(codec, keys):
    """Minimal generating set of the monomial ideal spanned by keys."""
    out = []
    for k in sorted(set(keys), key=codec.total_degree):
        if not any(codec.divides(m, k) for m in out):
            out.append(k)
    return out


def staircase_monomials(codec, lms, limit=None):
    """All monomials outside the monomial ideal of lms (None if infinite).

    Finite exactly when every variable has a pure power among lms; set limit
    to bound the search when finiteness is unknown.
    """
    if any(k == codec.one for k in lms):
        return []
    covered = set()
    for k in lms:
        sup = codec.support(k)
        if len(sup) == 1:
            covered.add(sup[0])
        elif len(sup) == 0:
            return []
    if len(covered) < codec.nvars:
        return None
    one = codec.one
    seen = {one}
    queue = [one]
    out = []
    var_keys = [codec.var_key(i) for i in range(codec.nvars)]
    while queue:
        k = queue.pop()
        if any(codec.divides(m, k) for m in lms):
            continue
        out.append(k)
        if limit is not None and len(out) > limit:
            return None
        for vk in var_keys:
            nk = k + vk - one
            if nk not in seen:
                seen.add(nk)
                queue.append(nk)
    return out


def staircase_degree_cap(codec, lms):
    """Max total degree of a standard monomial, or None when infinite."""
    mons = staircase_monomials(codec, lms)
    if mons is None:
        return None
    if not mons:
        return -1
    return max(codec.total_degree(k) for k in mons)


def krull_dim_monomial(codec, lms, nvars):
    """Dimension of a monomial ideal via maximal independent variable sets."""
    if any(k == codec.one for k in lms):
        return -1
    sups = []
    for k in minimal_monomial_generators(codec, lms):
        s = frozenset(codec.support(k))
        if not any(t <= s for t in sups):
            sups = [t for t in sups if not s <= t]
            sups.append(s)
    if not sups:
        return nvars
    from itertools import combinations

    for size in range(nvars, -1, -1):
        for combo in combinations(range(nvars), size):
            s = set(combo)
            if all(not sup <= s for sup in sups):
                return size
    return 0
