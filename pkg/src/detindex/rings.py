"""Ring contexts: a variable list, a coefficient field and an active order."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import FieldSpec, RATIONALS
from .orders import DEGREVLEX, KeyCodec, MonomialOrder, codec


@dataclass(frozen=True)
class RingContext:
    variables: tuple[str, ...]
    field: FieldSpec = RATIONALS
    order: MonomialOrder = DEGREVLEX

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if not self.variables:
            raise ValueError("a ring needs at least one variable")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def codec(self) -> KeyCodec:
        return codec(self.nvars, self.order)

    def index_of(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def with_order(self, order: MonomialOrder) -> "RingContext":
        return RingContext(self.variables, self.field, order)

    def extend_front(self, names: tuple[str, ...], order: MonomialOrder) -> "RingContext":
        """Ring with tag variables prepended (used for elimination tricks)."""
        return RingContext(tuple(names) + self.variables, self.field, order)

    def drop_front(self, k: int, order: MonomialOrder) -> "RingContext":
        return RingContext(self.variables[k:], self.field, order)

    def monomial_str(self, key: int) -> str:
        exps = self.codec.unpack(key)
        parts = []
        for name, e in zip(self.variables, exps):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def ring(*names: str, field: FieldSpec = RATIONALS, order: MonomialOrder = DEGREVLEX) -> RingContext:
    return RingContext(tuple(names), field, order)
