"""Indexed enumeration of a finite contract algebra for vectorized sweeps.

Contracts are numbered ``0 .. K-1`` in the order of
:func:`~agcontracts.contracts.enumerate_contracts`; elements are their own
bit patterns.  Index-space operations gather bits, run the shared kernels from
:mod:`agcontracts.contracts` on numpy arrays and map the result back to
indices.
"""

from __future__ import annotations

import functools

import numpy as np

from . import contracts as C
from .boolalg import BoolAlgebra, Element, check_cap, default_algebra


def _dtype(width: int):
    for dt in (np.uint8, np.uint16, np.uint32, np.uint64):
        if width <= np.iinfo(dt).bits:
            return dt
    raise ValueError(f"truth tables of width {width} do not fit a machine word")


class ContractSpace:
    def __init__(self, algebra: BoolAlgebra, cap: int | None = None):
        check_cap(algebra.n, cap)
        self.algebra = algebra
        self.n = algebra.n
        self.width = algebra.width
        self.top = algebra.mask
        dt = _dtype(self.width)
        self.dtype = dt
        self.elements = np.arange(self.top + 1, dtype=np.int64).astype(dt)
        a, g = np.meshgrid(self.elements, self.elements, indexing="ij")
        a, g = a.ravel(), g.ravel()
        keep = (a | g) == self.top
        self.A = a[keep]
        self.G = g[keep]
        self.size = len(self.A)
        self._lookup = np.full((self.top + 1) ** 2, -1, dtype=np.int32)
        self._lookup[self._key(self.A, self.G)] = np.arange(self.size, dtype=np.int32)
        m = self.top
        self.bottom = int(self.index(m, 0))
        self.top_contract = int(self.index(0, m))
        self.unit = int(self.index(m, m))

    @classmethod
    @functools.lru_cache(maxsize=None)
    def of(cls, algebra: BoolAlgebra, cap: int | None = None) -> ContractSpace:
        return cls(algebra, cap)

    @classmethod
    def for_n(cls, n: int, cap: int | None = None) -> ContractSpace:
        return cls.of(default_algebra(n), cap)

    @property
    def n_elements(self) -> int:
        return self.top + 1

    def _key(self, a, g):
        return (np.asarray(a, dtype=np.int64) << self.width) | np.asarray(g, dtype=np.int64)

    def index(self, a, g):
        """Index of contract ``(a, g)``; ``-1`` for unsaturated pairs."""
        return self._lookup[self._key(a, g)]

    def contract(self, i: int) -> C.Contract:
        return C.Contract._from_bits(self.algebra, int(self.A[i]), int(self.G[i]))

    def index_of(self, c: C.Contract) -> int:
        if c.algebra != self.algebra:
            raise C.AlgebraMismatch()
        return int(self.index(c.a.bits, c.g.bits))

    def element(self, x: int) -> Element:
        return Element(self.algebra, int(x))

    def _binary(self, kernel, i, j):
        return self.index(*kernel(self.A[i], self.G[i], self.A[j], self.G[j], self.top))

    def conj(self, i, j):
        return self._binary(C.conj_bits, i, j)

    def disj(self, i, j):
        return self._binary(C.disj_bits, i, j)

    def merge(self, i, j):
        return self._binary(C.merge_bits, i, j)

    def compose(self, i, j):
        return self._binary(C.compose_bits, i, j)

    def reciprocal(self, i):
        return self.index(self.G[i], self.A[i])

    def act_left(self, x, i):
        return self.index(*C.act_left_bits(self._el(x), self.A[i], self.G[i], self.top))

    def act_right(self, i, x):
        return self.index(*C.act_right_bits(self.A[i], self.G[i], self._el(x), self.top))

    def act_left_disj(self, x, i):
        return self.index(*C.act_left_disj_bits(self._el(x), self.A[i], self.G[i], self.top))

    def act_right_disj(self, i, x):
        return self.index(*C.act_right_disj_bits(self.A[i], self.G[i], self._el(x), self.top))

    def refines(self, i, j):
        return C.refines_bits(self.A[i], self.G[i], self.A[j], self.G[j], self.top)

    def is_saturated(self, i):
        return (self.A[i] | self.G[i]) == self.top

    def _el(self, x):
        return np.asarray(x).astype(self.dtype)

    def all_indices(self) -> np.ndarray:
        return np.arange(self.size)

    def sample_contracts(self, rng: np.random.Generator, size) -> np.ndarray:
        return rng.integers(0, self.size, size=size)

    def sample_elements(self, rng: np.random.Generator, size) -> np.ndarray:
        return rng.integers(0, self.top + 1, size=size).astype(self.dtype)

    def describe(self, i) -> str:
        c = self.contract(int(i))
        return f"({c.a.to_bitstring()},{c.g.to_bitstring()})"
