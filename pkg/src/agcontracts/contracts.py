"""Assume-guarantee contracts over a finite Boolean algebra.

A contract is a pair ``(a, g)`` of assumptions and guarantees with
``a | g == 1``.  Contracts are ordered by refinement:
``(a, g) <= (a', g')`` iff ``g <= g'`` and ``a' <= a``.

Every operation is first written as a kernel on raw truth-table bits.  The
kernels only use ``&``, ``|`` and ``^``, so they run unchanged on Python ints
and on numpy integer arrays; the law harness relies on that to sweep whole
contract spaces at once with exactly the code the scalar API uses.
"""

from __future__ import annotations

from typing import Iterator

from .boolalg import (AlgebraError, AlgebraMismatch, BoolAlgebra, Element,
                      check_cap)


class NotSaturated(AlgebraError):
    pass


# Bit-level kernels.  ``top`` is the all-ones mask of the algebra.

def _imp(x, y, top):
    return (x ^ top) | y


def saturate_bits(a, g, top):
    return a, _imp(a, g, top)


def conj_bits(a, g, a2, g2, top):
    return a | a2, g & g2


def disj_bits(a, g, a2, g2, top):
    return a & a2, g | g2


def merge_bits(a, g, a2, g2, top):
    m = a & a2
    return m, _imp(m, g & g2, top)


def compose_bits(a, g, a2, g2, top):
    m = g & g2
    return _imp(m, a & a2, top), m


def reciprocal_bits(a, g, top):
    return g, a


def act_left_bits(x, a, g, top):
    return x & a, _imp(x, g, top)


def act_right_bits(a, g, x, top):
    return a, _imp(a, x & g, top)


def act_left_disj_bits(x, a, g, top):
    return _imp(x, a, top), x & g


def act_right_disj_bits(a, g, x, top):
    return _imp(g, x & a, top), g


def refines_bits(a, g, a2, g2, top):
    """Truth value of ``(a, g) <= (a2, g2)``; vectorizes to a bool array."""
    return ((g & g2) == g) & ((a & a2) == a2)


class Contract:
    """A saturated assumption/guarantee pair.

    ``Contract(a, g)`` saturates (replaces ``g`` with ``a -> g``), so any pair
    of elements yields a valid contract; ``Contract.strict`` rejects pairs
    that are not already saturated.
    """

    __slots__ = ("a", "g")

    def __init__(self, a: Element, g: Element):
        if a.algebra != g.algebra:
            raise AlgebraMismatch()
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "g", a.implies(g))

    @classmethod
    def strict(cls, a: Element, g: Element) -> Contract:
        if a.algebra != g.algebra:
            raise AlgebraMismatch()
        if not (a | g).is_top():
            raise NotSaturated(
                f"assumptions {a} and guarantees {g} do not join to top")
        return cls(a, g)

    @classmethod
    def _from_bits(cls, algebra: BoolAlgebra, a: int, g: int) -> Contract:
        c = object.__new__(cls)
        object.__setattr__(c, "a", Element(algebra, a))
        object.__setattr__(c, "g", Element(algebra, g))
        return c

    def __setattr__(self, name, value):
        raise AttributeError("Contract is immutable")

    @property
    def algebra(self) -> BoolAlgebra:
        return self.a.algebra

    def __eq__(self, other):
        if not isinstance(other, Contract):
            return NotImplemented
        return self.a == other.a and self.g == other.g

    def __hash__(self):
        return hash((self.a, self.g))

    def __repr__(self):
        return f"Contract({self.a.to_bitstring()!r}, {self.g.to_bitstring()!r})"

    def __iter__(self):
        yield self.a
        yield self.g

    def __le__(self, other: Contract) -> bool:
        return refines(self, other)

    def __and__(self, other: Contract) -> Contract:
        return conj(self, other)

    def __or__(self, other: Contract) -> Contract:
        return disj(self, other)

    def is_saturated(self) -> bool:
        return (self.a | self.g).is_top()


def _check(c1: Contract, c2: Contract) -> BoolAlgebra:
    if c1.algebra != c2.algebra:
        raise AlgebraMismatch()
    return c1.algebra


def _binary(kernel, c1: Contract, c2: Contract) -> Contract:
    algebra = _check(c1, c2)
    a, g = kernel(c1.a.bits, c1.g.bits, c2.a.bits, c2.g.bits, algebra.mask)
    return Contract._from_bits(algebra, a, g)


def bottom(algebra: BoolAlgebra) -> Contract:
    """The most refined contract, ``(1, 0)``."""
    return Contract._from_bits(algebra, algebra.mask, 0)


def top(algebra: BoolAlgebra) -> Contract:
    """The least refined contract, ``(0, 1)``."""
    return Contract._from_bits(algebra, 0, algebra.mask)


def identity(algebra: BoolAlgebra) -> Contract:
    """``e = (1, 1)``, the unit of merging and composition."""
    return Contract._from_bits(algebra, algebra.mask, algebra.mask)


def saturate(a: Element, g: Element) -> Contract:
    return Contract(a, g)


def refines(c1: Contract, c2: Contract) -> bool:
    _check(c1, c2)
    return c1.g <= c2.g and c2.a <= c1.a


def conj(c1: Contract, c2: Contract) -> Contract:
    """Greatest lower bound: ``(a | a', g & g')``."""
    return _binary(conj_bits, c1, c2)


def disj(c1: Contract, c2: Contract) -> Contract:
    """Least upper bound: ``(a & a', g | g')``."""
    return _binary(disj_bits, c1, c2)


def merge(c1: Contract, c2: Contract) -> Contract:
    """Merger ``(a & a', (a & a') -> (g & g'))``.

    The most relaxed contract whose implementations implement both operands
    and which accepts every environment common to both.
    """
    return _binary(merge_bits, c1, c2)


def compose(c1: Contract, c2: Contract) -> Contract:
    """Composition ``((g & g') -> (a & a'), g & g')``."""
    return _binary(compose_bits, c1, c2)


def reciprocal(c: Contract) -> Contract:
    return Contract._from_bits(c.algebra, c.g.bits, c.a.bits)


def _action(kernel, x: Element, c: Contract, left: bool) -> Contract:
    if x.algebra != c.algebra:
        raise AlgebraMismatch()
    m = c.algebra.mask
    if left:
        a, g = kernel(x.bits, c.a.bits, c.g.bits, m)
    else:
        a, g = kernel(c.a.bits, c.g.bits, x.bits, m)
    return Contract._from_bits(c.algebra, a, g)


def act_left(x: Element, c: Contract) -> Contract:
    """``x . (a, g) = (x & a, x -> g)``: adds ``x`` to the assumptions."""
    return _action(act_left_bits, x, c, True)


def act_right(c: Contract, x: Element) -> Contract:
    """``(a, g) . x = (a, a -> (x & g))``: adds ``x`` to the guarantees."""
    return _action(act_right_bits, x, c, False)


def act_left_disj(x: Element, c: Contract) -> Contract:
    """Left action of the disjunctive view, ``(x -> a, x & g)``."""
    return _action(act_left_disj_bits, x, c, True)


def act_right_disj(c: Contract, x: Element) -> Contract:
    """Right action of the disjunctive view, ``(g -> (x & a), g)``."""
    return _action(act_right_disj_bits, x, c, False)


def enumerate_contracts(algebra: BoolAlgebra, cap: int | None = None) -> Iterator[Contract]:
    """All ``3**(2**n)`` contracts, ordered by ``(a, g)`` bit patterns."""
    check_cap(algebra.n, cap)
    m = algebra.mask
    for a in range(m + 1):
        for g in range(m + 1):
            if a | g == m:
                yield Contract._from_bits(algebra, a, g)
