"""Assume-guarantee contracts over finite Boolean algebras."""

from .boolalg import (AlgebraError, AlgebraMismatch, BoolAlgebra, Element,
                      EnumerationCapExceeded, complement, default_algebra,
                      enumerate_elements, implies, join, leq, meet)
from .contracts import (Contract, NotSaturated, act_left, act_left_disj, act_right,
                        act_right_disj, bottom, compose, conj, disj,
                        enumerate_contracts, identity, merge, reciprocal, refines,
                        saturate, top)
from .adjoints import (AdjointWitnessFailed, coimplication_c, implication_c,
                       quotient, separation)
from .formula import FormulaSyntaxError, UnknownVariable, eval_to_element, parse, to_dnf

__version__ = "0.1.0"
