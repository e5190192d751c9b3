"""Exact arithmetic in complete residuated lattices.

Every structure here is a chain, so meet and join are min and max and all
that distinguishes the structures is the multiplication and its residuum.
Values are plain ``fractions.Fraction`` objects for the unit-interval
structures and plain ``int`` indices for finite chains; no floats anywhere.
The lattice descriptor travels with containers (vectors, matrices), not with
the values themselves.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import LatticeMismatch

Value = Union[Fraction, int]

_ZERO = Fraction(0)
_ONE = Fraction(1)

KINDS = ("boolean", "godel", "goguen", "lukasiewicz", "chain")

_DECIMAL = re.compile(r"^\d+(?:\.\d+)?$")
_RATIO = re.compile(r"^(\d+)/(\d+)$")
_INDEX = re.compile(r"^\d+$")


@dataclass(frozen=True)
class Lattice:
    """A residuated lattice on [0, 1] or on the chain 0 <= a_1 <= ... <= a_K.

    kind: one of boolean, godel, goguen, lukasiewicz, chain.
    top_index: the top index K for chain lattices, None otherwise.

    boolean behaves exactly like chain(1) but keeps Fraction values so the
    unit-interval structures share one value representation.
    """

    kind: str
    top_index: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown lattice kind {self.kind!r}")
        if self.kind == "chain":
            if not isinstance(self.top_index, int) or self.top_index < 1:
                raise ValueError("a chain lattice needs a top index >= 1")
        elif self.top_index is not None:
            raise ValueError(f"{self.kind} takes no top index")

    # -- carrier ---------------------------------------------------------

    @property
    def bottom(self) -> Value:
        return 0 if self.kind == "chain" else _ZERO

    @property
    def top(self) -> Value:
        return self.top_index if self.kind == "chain" else _ONE

    def describe(self) -> str:
        """Name as it appears in documents, e.g. 'goguen' or 'chain 4'."""
        if self.kind == "chain":
            return f"chain {self.top_index}"
        return self.kind

    def _guard(self, v: Value) -> None:
        if self.kind == "chain":
            if not isinstance(v, int):
                raise LatticeMismatch(f"expected a chain index, got {v!r}")
        elif not isinstance(v, Fraction):
            raise LatticeMismatch(f"expected a Fraction in [0, 1], got {v!r}")

    def check(self, v: Value) -> Value:
        """Validate that v belongs to this lattice's carrier."""
        self._guard(v)
        if not self.bottom <= v <= self.top:
            raise LatticeMismatch(f"{v!r} is outside {self.describe()}")
        if self.kind == "boolean" and v != 0 and v != 1:
            raise LatticeMismatch(f"{v!r} is not a boolean degree")
        return v

    def coerce(self, raw) -> Value:
        """Turn a string, int or Fraction into a checked lattice value.

        Floats are rejected outright: the whole kernel is exact.
        """
        if isinstance(raw, float):
            raise LatticeMismatch(
                f"float {raw!r} rejected, pass a string, int or Fraction instead")
        if isinstance(raw, str):
            return self.parse_value(raw)
        if self.kind == "chain":
            if isinstance(raw, int):
                return self.check(raw)
            raise LatticeMismatch(f"expected a chain index, got {raw!r}")
        if isinstance(raw, (int, Fraction)):
            return self.check(Fraction(raw))
        raise LatticeMismatch(f"cannot read {raw!r} as a {self.describe()} value")

    def parse_value(self, token: str) -> Value:
        """Parse one value token: decimal, p/q, or a chain index.

        Raises ValueError on malformed syntax, LatticeMismatch when the
        parsed value falls outside the carrier.
        """
        if self.kind == "chain":
            if not _INDEX.match(token):
                raise ValueError(f"not a chain index: {token!r}")
            return self.check(int(token))
        m = _RATIO.match(token)
        if m:
            num, den = int(m.group(1)), int(m.group(2))
            if den == 0:
                raise ValueError(f"zero denominator: {token!r}")
            return self.check(Fraction(num, den))
        if not _DECIMAL.match(token):
            raise ValueError(f"not a value literal: {token!r}")
        return self.check(Fraction(token))

    def format_value(self, v: Value) -> str:
        """Canonical text for a value: terminating decimal if one exists, else p/q."""
        if self.kind == "chain":
            return str(v)
        if v.denominator == 1:
            return str(v.numerator)
        digits = _decimal_digits(v.denominator)
        if digits is None:
            return f"{v.numerator}/{v.denominator}"
        scaled = v.numerator * 10 ** digits // v.denominator
        return "0." + str(scaled).zfill(digits)

    # -- operations ------------------------------------------------------

    def meet(self, x: Value, y: Value) -> Value:
        self._guard(x)
        self._guard(y)
        return x if x <= y else y

    def join(self, x: Value, y: Value) -> Value:
        self._guard(x)
        self._guard(y)
        return x if x >= y else y

    def tmul(self, x: Value, y: Value) -> Value:
        """Multiplication: min for godel, product for goguen,
        max(x+y-1, 0) for lukasiewicz/boolean, index truncation for chains."""
        self._guard(x)
        self._guard(y)
        k = self.kind
        if k == "godel":
            return x if x <= y else y
        if k == "goguen":
            return x * y
        if k == "chain":
            s = x + y - self.top_index
            return s if s > 0 else 0
        s = x + y - _ONE
        return s if s > 0 else _ZERO

    def resid(self, x: Value, y: Value) -> Value:
        """Residuum, the largest z with tmul(x, z) <= y."""
        self._guard(x)
        self._guard(y)
        if x <= y:
            return self.top
        k = self.kind
        if k == "godel":
            return y
        if k == "goguen":
            return y / x
        if k == "chain":
            return self.top_index - x + y
        return _ONE - x + y

    def biresid(self, x: Value, y: Value) -> Value:
        """Biresiduum resid(x, y) meet resid(y, x); equals 1 iff x == y."""
        return self.meet(self.resid(x, y), self.resid(y, x))


def _decimal_digits(den: int) -> int | None:
    """Digits after the point for 1/den if the expansion terminates, else None."""
    twos = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    fives = 0
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None
    return max(twos, fives)


BOOLEAN = Lattice("boolean")
GODEL = Lattice("godel")
GOGUEN = Lattice("goguen")
LUKASIEWICZ = Lattice("lukasiewicz")


def chain(top_index: int) -> Lattice:
    """The K+1 element chain a_0 < a_1 < ... < a_K with truncated addition."""
    return Lattice("chain", top_index)


NAMED = {
    "boolean": BOOLEAN,
    "godel": GODEL,
    "goguen": GOGUEN,
    "lukasiewicz": LUKASIEWICZ,
}
