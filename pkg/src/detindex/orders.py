"""Monomial orders and their packed-integer key encoding.

Every monomial is encoded as a single Python integer whose natural ordering
agrees with the selected monomial order.  Exponents are packed into 20-bit
fields (19 value bits + 1 guard bit), most significant field first:

  degrevlex_global      [sentinel | deg     | M-e(n-1) | ... | M-e(0)]
  negdegrevlex_local    [sentinel | M-deg   | M-e(n-1) | ... | M-e(0)]
  block_elimination(k)  [sentinel | deg of first k vars | their biased fields
                                  | deg of the rest     | their biased fields]

with bias M = 2**19 - 1.  The bias reverses the per-variable comparison so
that plain integer comparison realizes the reverse-lexicographic tie break,
and it keeps multiplication additive:

  key(a*b)        = key(a) + key(b) - key(1)
  b divides a    <=> (key(a) - key(b) + key(1)) has no guard bit set
  key(a/b)        = key(a) - key(b) + key(1)

The sentinel field stays zero for valid keys and absorbs the borrow produced
by any negative field difference, so the guard test is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

FIELD_BITS = 20
FIELD_MAX = (1 << (FIELD_BITS - 1)) - 1  # 2**19 - 1, one guard bit per field

ORDER_KINDS = ("degrevlex_global", "negdegrevlex_local", "block_elimination")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order selector.

    block_split is only meaningful for block_elimination: the first
    block_split variables form the eliminated block.
    """

    kind: str
    block_split: int | None = None

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown monomial order kind: {self.kind!r}")
        if self.kind == "block_elimination":
            if not self.block_split or self.block_split < 1:
                raise ValueError("block_elimination requires block_split >= 1")
        elif self.block_split is not None:
            raise ValueError(f"{self.kind} does not take a block_split")

    @property
    def is_global(self) -> bool:
        return self.kind != "negdegrevlex_local"


DEGREVLEX = MonomialOrder("degrevlex_global")
NEGDEGREVLEX = MonomialOrder("negdegrevlex_local")


def elimination_order(block_split: int) -> MonomialOrder:
    return MonomialOrder("block_elimination", block_split)


class KeyCodec:
    """Packs exponent tuples into order-compatible integer keys."""

    def __init__(self, nvars: int, order: MonomialOrder):
        if nvars < 1:
            raise ValueError("need at least one variable")
        if order.kind == "block_elimination" and order.block_split >= nvars:
            raise ValueError("block_split must leave a nonempty second block")
        self.nvars = nvars
        self.order = order

        # Fields most-significant-first.  Each entry is ("deg", vars) for a
        # degree field summing over vars, ("var", i) for a bias-encoded
        # variable (smaller exponent wins), or ("uvar", i) for a plain one
        # (larger exponent wins).
        fields: list[tuple] = [("sentinel",)]
        if order.kind == "block_elimination":
            k = order.block_split
            fields.append(("deg", tuple(range(k))))
            fields.extend(("var", i) for i in reversed(range(k)))
            fields.append(("deg", tuple(range(k, nvars))))
            fields.extend(("var", i) for i in reversed(range(k, nvars)))
        elif order.kind == "lazard_homog":
            # variable 0 homogenizes: total degree first, then its exponent
            # descending, then reverse lex on the remaining variables
            fields.append(("deg", tuple(range(nvars))))
            fields.append(("uvar", 0))
            fields.extend(("var", i) for i in reversed(range(1, nvars)))
        else:
            fields.append(("deg", tuple(range(nvars))))
            fields.extend(("var", i) for i in reversed(range(nvars)))

        nfields = len(fields)
        shifts = [(nfields - 1 - pos) * FIELD_BITS for pos in range(nfields)]
        self._fields = fields
        self._shifts = shifts
        self._var_shift = {}
        self._uvar_shift = {}
        self._deg_shifts = []
        for f, s in zip(fields, shifts):
            if f[0] == "var":
                self._var_shift[f[1]] = s
            elif f[0] == "uvar":
                self._uvar_shift[f[1]] = s
            elif f[0] == "deg":
                self._deg_shifts.append((s, f[1]))

        guard = 1 << (FIELD_BITS - 1)
        self.guards = sum((guard << s) for s in shifts)
        self.negdeg = order.kind == "negdegrevlex_local"
        self.one = self.pack((0,) * nvars)

    def pack(self, exponents) -> int:
        if len(exponents) != self.nvars:
            raise ValueError("exponent tuple has wrong length")
        key = 0
        for s, vs in self._deg_shifts:
            d = 0
            for i in vs:
                e = exponents[i]
                if e < 0 or e > FIELD_MAX:
                    raise OverflowError(f"exponent {e} out of range")
                d += e
            if d > FIELD_MAX:
                raise OverflowError("total degree exceeds packing capacity")
            key += ((FIELD_MAX - d) if self.negdeg else d) << s
        for i, s in self._var_shift.items():
            key += (FIELD_MAX - exponents[i]) << s
        for i, s in self._uvar_shift.items():
            key += exponents[i] << s
        return key

    def unpack(self, key: int):
        mask = (1 << FIELD_BITS) - 1
        out = [0] * self.nvars
        for i, s in self._var_shift.items():
            out[i] = FIELD_MAX - ((key >> s) & mask)
        for i, s in self._uvar_shift.items():
            out[i] = (key >> s) & mask
        return tuple(out)

    def total_degree(self, key: int) -> int:
        mask = (1 << FIELD_BITS) - 1
        d = 0
        for s, _ in self._deg_shifts:
            v = (key >> s) & mask
            d += (FIELD_MAX - v) if self.negdeg else v
        return d

    def exponent(self, key: int, i: int) -> int:
        mask = (1 << FIELD_BITS) - 1
        s = self._uvar_shift.get(i)
        if s is not None:
            return (key >> s) & mask
        return FIELD_MAX - ((key >> self._var_shift[i]) & mask)

    def mul(self, a: int, b: int) -> int:
        return a + b - self.one

    def divides(self, b: int, a: int) -> bool:
        """True iff monomial b divides monomial a."""
        return (a - b + self.one) & self.guards == 0

    def quotient(self, a: int, b: int) -> int:
        return a - b + self.one

    def lcm(self, a: int, b: int) -> int:
        ea = self.unpack(a)
        eb = self.unpack(b)
        return self.pack(tuple(max(x, y) for x, y in zip(ea, eb)))

    def var_key(self, i: int) -> int:
        e = [0] * self.nvars
        e[i] = 1
        return self.pack(tuple(e))

    def support(self, key: int):
        """Indices of variables with positive exponent."""
        e = self.unpack(key)
        return tuple(i for i, v in enumerate(e) if v)


@lru_cache(maxsize=None)
def codec(nvars: int, order: MonomialOrder) -> KeyCodec:
    return KeyCodec(nvars, order)


@dataclass(frozen=True)
class _InternalOrder:
    """Order shim for codec layouts that are not part of the public enum."""

    kind: str
    block_split: int | None = None

    @property
    def is_global(self) -> bool:
        return True


@lru_cache(maxsize=None)
def lazard_codec(nvars_with_t: int) -> KeyCodec:
    """Codec for the homogenized ring used by the tangent-cone computation.

    Variable 0 is the homogenizing variable; the order refines total degree
    by descending exponent of variable 0, then reverse lex on the rest, so
    leading terms dehomogenize to negdegrevlex leading terms.
    """
    return KeyCodec(nvars_with_t, _InternalOrder("lazard_homog"))


def compare(a, b, order: MonomialOrder) -> int:
    """Compare two exponent tuples; returns -1, 0 or 1 (a <, =, > b)."""
    if len(a) != len(b):
        raise ValueError("exponent tuples of different lengths")
    c = codec(len(a), order)
    ka, kb = c.pack(tuple(a)), c.pack(tuple(b))
    return (ka > kb) - (ka < kb)
