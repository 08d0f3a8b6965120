"""Adjoint contract operations computed by residuation.

Each adjoint optimally undoes one binary operation:

=============  ===========  =========  ======================================
adjoint        undoes       direction  result
=============  ===========  =========  ======================================
quotient       compose      right      largest X with compose(X, c2) <= c1
implication    conj         right      largest X with conj(X, c2) <= c1
separation     merge        left       smallest X with c1 <= merge(X, c2)
coimplication  disj         left       smallest X with c1 <= disj(X, c2)
=============  ===========  =========  ======================================

No closed forms are used.  The candidate set is enumerated over the whole
contract algebra, its least upper (greatest lower) bound is taken, and the
bound is checked to be a candidate itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import contracts as C
from .boolalg import AlgebraError
from .contracts import Contract
from .space import ContractSpace

KERNELS = {
    "compose": C.compose_bits,
    "merge": C.merge_bits,
    "conj": C.conj_bits,
    "disj": C.disj_bits,
}
OPERATIONS = {"compose": C.compose, "merge": C.merge, "conj": C.conj, "disj": C.disj}
DIRECTIONS = {"compose": "right", "conj": "right", "merge": "left", "disj": "left"}


class AdjointWitnessFailed(AlgebraError):
    """The extremal bound of the candidate set is not itself a candidate."""


@dataclass(frozen=True)
class ResiduationProblem:
    op: str
    c1: Contract
    c2: Contract

    def __post_init__(self):
        if self.op not in KERNELS:
            raise ValueError(f"unknown base operation {self.op!r}")
        if self.c1.algebra != self.c2.algebra:
            raise C.AlgebraMismatch()

    @property
    def direction(self) -> str:
        return DIRECTIONS[self.op]

    def is_candidate(self, x: Contract) -> bool:
        y = OPERATIONS[self.op](x, self.c2)
        if self.direction == "right":
            return C.refines(y, self.c1)
        return C.refines(self.c1, y)

    def candidates(self, space: ContractSpace) -> np.ndarray:
        a, g = KERNELS[self.op](space.A, space.G, self.c2.a.bits, self.c2.g.bits, space.top)
        a1, g1 = self.c1.a.bits, self.c1.g.bits
        if self.direction == "right":
            return C.refines_bits(a, g, a1, g1, space.top)
        return C.refines_bits(a1, g1, a, g, space.top)

    def solve(self, cap: int | None = None) -> Contract:
        space = ContractSpace.of(self.c1.algebra, cap)
        mask = self.candidates(space)
        # bottom (right) / top (left) is always a candidate
        assert mask.any()
        a, g = space.A[mask], space.G[mask]
        if self.direction == "right":
            bits = int(np.bitwise_and.reduce(a)), int(np.bitwise_or.reduce(g))
        else:
            bits = int(np.bitwise_or.reduce(a)), int(np.bitwise_and.reduce(g))
        x = Contract._from_bits(space.algebra, *bits)
        if not self.is_candidate(x):
            raise AdjointWitnessFailed(
                f"adjoint witness failed: {self.op} bound {x!r} is not a candidate")
        return x


def quotient(c1: Contract, c2: Contract, cap: int | None = None) -> Contract:
    """Largest ``X`` with ``compose(X, c2) <= c1``."""
    return ResiduationProblem("compose", c1, c2).solve(cap)


def separation(c1: Contract, c2: Contract, cap: int | None = None) -> Contract:
    """Smallest ``X`` with ``c1 <= merge(X, c2)``."""
    return ResiduationProblem("merge", c1, c2).solve(cap)


def implication_c(c1: Contract, c2: Contract, cap: int | None = None) -> Contract:
    """Largest ``X`` with ``conj(X, c2) <= c1``."""
    return ResiduationProblem("conj", c1, c2).solve(cap)


def coimplication_c(c1: Contract, c2: Contract, cap: int | None = None) -> Contract:
    """Smallest ``X`` with ``c1 <= disj(X, c2)``."""
    return ResiduationProblem("disj", c1, c2).solve(cap)


ADJOINTS = {
    "quotient": (quotient, "compose"),
    "separation": (separation, "merge"),
    "implication": (implication_c, "conj"),
    "coimplication": (coimplication_c, "disj"),
}
