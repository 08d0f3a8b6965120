"""Finite Boolean algebras represented by dense truth tables.

The free Boolean algebra on ``n`` generators has ``2**(2**n)`` elements.  An
element is stored as a Python int whose bit ``i`` is the value of the function
under valuation ``i``.  Valuation ``i`` assigns to the ``k``-th generator the
``k``-th most significant of the ``n`` binary digits of ``i``, so for
generators ``[p, q]`` the element ``p`` has truth table ``0011`` and ``q`` has
``0101`` (written valuation 0 first).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

MAX_GENERATORS = 16
ENUMERATION_CAP = 3

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class AlgebraError(ValueError):
    pass


class AlgebraMismatch(AlgebraError):
    def __init__(self, msg: str = "mixed algebras"):
        super().__init__(msg)


class EnumerationCapExceeded(AlgebraError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"enumeration cap exceeded: n={n} > {cap}")
        self.n = n
        self.cap = cap


def check_cap(n: int, cap: int | None = None) -> None:
    cap = ENUMERATION_CAP if cap is None else cap
    if n > cap:
        raise EnumerationCapExceeded(n, cap)


@dataclass(frozen=True)
class BoolAlgebra:
    """Free Boolean algebra on an ordered list of named generators.

    Two algebras are the same algebra iff their generator lists are equal.
    """

    generators: tuple[str, ...]

    def __init__(self, generators=()):
        gens = tuple(generators)
        for name in gens:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise AlgebraError(f"invalid generator name {name!r}")
        if len(set(gens)) != len(gens):
            raise AlgebraError(f"duplicate generator names in {list(gens)}")
        if len(gens) > MAX_GENERATORS:
            raise AlgebraError(
                f"{len(gens)} generators exceeds maximum of {MAX_GENERATORS}")
        object.__setattr__(self, "generators", gens)

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def width(self) -> int:
        return 1 << self.n

    @property
    def mask(self) -> int:
        """Bit pattern of the top element."""
        return (1 << self.width) - 1

    def top(self) -> Element:
        return Element(self, self.mask)

    def bottom(self) -> Element:
        return Element(self, 0)

    def var(self, name: str) -> Element:
        try:
            k = self.generators.index(name)
        except ValueError:
            raise AlgebraError(f"unknown variable {name!r}") from None
        shift = self.n - 1 - k
        bits = 0
        for i in range(self.width):
            if (i >> shift) & 1:
                bits |= 1 << i
        return Element(self, bits)

    def element(self, bits: int) -> Element:
        if not 0 <= bits <= self.mask:
            raise AlgebraError(f"bit pattern {bits} out of range for n={self.n}")
        return Element(self, bits)

    def from_bitstring(self, text: str) -> Element:
        """Parse the ``'0'``/``'1'`` text form, valuation 0 first."""
        if len(text) != self.width or set(text) - {"0", "1"}:
            raise AlgebraError(
                f"expected {self.width} characters of 0/1, got {text!r}")
        return Element(self, sum(1 << i for i, ch in enumerate(text) if ch == "1"))

    def valuation(self, i: int) -> dict[str, bool]:
        """Generator assignment of valuation ``i``."""
        return {name: bool((i >> (self.n - 1 - k)) & 1)
                for k, name in enumerate(self.generators)}

    def elements(self, cap: int | None = None) -> Iterator[Element]:
        return enumerate_elements(self, cap)


@dataclass(frozen=True)
class Element:
    algebra: BoolAlgebra
    bits: int

    def _same(self, other: Element) -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if self.algebra != other.algebra:
            raise AlgebraMismatch()

    def __and__(self, other: Element) -> Element:
        return meet(self, other)

    def __or__(self, other: Element) -> Element:
        return join(self, other)

    def __invert__(self) -> Element:
        return complement(self)

    def __le__(self, other: Element) -> bool:
        return leq(self, other)

    def implies(self, other: Element) -> Element:
        return implies(self, other)

    def is_top(self) -> bool:
        return self.bits == self.algebra.mask

    def is_bottom(self) -> bool:
        return self.bits == 0

    def bit(self, i: int) -> bool:
        return bool((self.bits >> i) & 1)

    def to_bitstring(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0"
                       for i in range(self.algebra.width))

    def __str__(self) -> str:
        return self.to_bitstring()

    def __repr__(self) -> str:
        return f"Element({self.to_bitstring()!r})"


def meet(x: Element, y: Element) -> Element:
    x._same(y)
    return Element(x.algebra, x.bits & y.bits)


def join(x: Element, y: Element) -> Element:
    x._same(y)
    return Element(x.algebra, x.bits | y.bits)


def complement(x: Element) -> Element:
    return Element(x.algebra, x.bits ^ x.algebra.mask)


def implies(x: Element, y: Element) -> Element:
    x._same(y)
    return Element(x.algebra, (x.bits ^ x.algebra.mask) | y.bits)


def leq(x: Element, y: Element) -> bool:
    x._same(y)
    return x.bits & y.bits == x.bits


def enumerate_elements(algebra: BoolAlgebra, cap: int | None = None) -> Iterator[Element]:
    """Yield every element once, in increasing bit-pattern order."""
    check_cap(algebra.n, cap)
    for bits in range(algebra.mask + 1):
        yield Element(algebra, bits)


def default_algebra(n: int) -> BoolAlgebra:
    """Algebra on ``n`` conventionally named generators (p, q, r, ...)."""
    letters = "pqrstuvwyz"
    if n <= len(letters):
        return BoolAlgebra(letters[:n])
    return BoolAlgebra(f"x{i}" for i in range(n))
