"""Command-line front end.

Exit codes: 0 success (or the checked relation holds), 1 the relation fails or
a law has violations, 2 usage, parse or enumeration-cap errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import adjoints as adj
from . import contracts as C
from . import laws
from .boolalg import AlgebraError, BoolAlgebra, EnumerationCapExceeded, check_cap
from .contracts import Contract
from .formula import FormulaError, eval_to_element, parse, to_dnf, variables


class UsageError(Exception):
    pass


@dataclass
class ContractFile:
    variables: list[str]
    assumptions: str
    guarantees: str
    source: dict | None = None
    path: str | None = field(default=None, compare=False)

    @classmethod
    def load(cls, path: str | Path) -> ContractFile:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"{path}: {exc}") from None
        if not isinstance(data, dict):
            raise UsageError(f"{path}: expected a JSON object")
        missing = [k for k in ("variables", "assumptions", "guarantees") if k not in data]
        if missing:
            raise UsageError(f"{path}: missing field {missing[0]!r}")
        cf = cls(list(data["variables"]), data["assumptions"], data["guarantees"],
                 data.get("source"), str(path))
        cf.validate()
        return cf

    def validate(self) -> None:
        where = self.path or "contract"
        try:
            BoolAlgebra(self.variables)
            used = variables(parse(self.assumptions)) | variables(parse(self.guarantees))
        except (AlgebraError, FormulaError) as exc:
            raise UsageError(f"{where}: {exc}") from None
        extra = sorted(used - set(self.variables))
        if extra:
            raise UsageError(f"{where}: formula variable {extra[0]!r} is not declared")

    def to_contract(self, algebra: BoolAlgebra) -> Contract:
        return Contract(eval_to_element(self.assumptions, algebra),
                        eval_to_element(self.guarantees, algebra))

    @classmethod
    def from_contract(cls, c: Contract, source: dict | None = None) -> ContractFile:
        return cls(list(c.algebra.generators), to_dnf(c.a), to_dnf(c.g), source)

    def to_json(self) -> dict:
        out = {"variables": self.variables, "assumptions": self.assumptions,
               "guarantees": self.guarantees}
        if self.source is not None:
            out["source"] = self.source
        return out


BINARY = {
    "conj": C.conj,
    "disj": C.disj,
    "compose": C.compose,
    "merge": C.merge,
}
ADJOINT = {name: fn for name, (fn, _) in adj.ADJOINTS.items()}
UNARY = {"reciprocal": C.reciprocal, "saturate": lambda c: c}
ACTIONS = {
    "act-left": lambda x, c: C.act_left(x, c),
    "act-right": lambda x, c: C.act_right(c, x),
    "act-left-disj": lambda x, c: C.act_left_disj(x, c),
    "act-right-disj": lambda x, c: C.act_right_disj(c, x),
}
OPERATIONS = [*BINARY, *ADJOINT, *UNARY, *ACTIONS]


def union_algebra(files: list[ContractFile], extra: set[str] = frozenset()) -> BoolAlgebra:
    names = set(extra)
    for f in files:
        names.update(f.variables)
    return BoolAlgebra(sorted(names))


def _source(cf: ContractFile) -> dict:
    return {"path": cf.path, "assumptions": cf.assumptions, "guarantees": cf.guarantees}


def cmd_op(args) -> int:
    op = args.operation
    inputs = args.inputs
    if op in ACTIONS:
        if len(inputs) != 2:
            raise UsageError(f"{op} takes a contract file and a formula")
        cf = ContractFile.load(inputs[0])
        try:
            x_formula = parse(inputs[1])
        except FormulaError as exc:
            raise UsageError(f"element formula: {exc}") from None
        algebra = union_algebra([cf], variables(x_formula))
        x = eval_to_element(x_formula, algebra)
        result = ACTIONS[op](x, cf.to_contract(algebra))
        source = {"operation": op, "inputs": [_source(cf), {"formula": inputs[1]}]}
    else:
        arity = 1 if op in UNARY else 2
        if len(inputs) != arity:
            raise UsageError(f"{op} takes {arity} contract file{'s' if arity > 1 else ''}")
        files = [ContractFile.load(p) for p in inputs]
        algebra = union_algebra(files)
        operands = [f.to_contract(algebra) for f in files]
        if op in UNARY:
            result = UNARY[op](*operands)
        elif op in BINARY:
            result = BINARY[op](*operands)
        else:
            check_cap(algebra.n, args.cap)
            result = ADJOINT[op](*operands, cap=args.cap)
        source = {"operation": op, "inputs": [_source(f) for f in files]}
    text = json.dumps(ContractFile.from_contract(result, source).to_json(), indent=2) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _witness(algebra: BoolAlgebra, bits: int) -> str:
    i = (bits & -bits).bit_length() - 1
    val = algebra.valuation(i)
    return " ".join(f"{k}={int(v)}" for k, v in val.items()) or "(empty valuation)"


def cmd_check(args) -> int:
    f1, f2 = ContractFile.load(args.first), ContractFile.load(args.second)
    algebra = union_algebra([f1, f2])
    c1, c2 = f1.to_contract(algebra), f2.to_contract(algebra)
    m = algebra.mask
    # valuations at which each half of the refinement fails
    bad_g = c1.g.bits & ~c2.g.bits & m
    bad_a = c2.a.bits & ~c1.a.bits & m
    if args.relation == "equiv":
        bad_g |= c1.g.bits ^ c2.g.bits
        bad_a |= c1.a.bits ^ c2.a.bits
    if not (bad_g | bad_a):
        print(f"{args.relation}: holds")
        return 0
    if args.relation == "equiv":
        part, bits = ("guarantees", bad_g) if bad_g else ("assumptions", bad_a)
        print(f"equiv: fails; {part} differ at {_witness(algebra, bits)}")
    elif bad_g:
        print(f"refines: fails at {_witness(algebra, bad_g)}: "
              "guarantees of the first contract hold, those of the second do not")
    else:
        print(f"refines: fails at {_witness(algebra, bad_a)}: "
              "assumptions of the second contract hold, those of the first do not")
    return 1


def cmd_laws(args) -> int:
    if args.list:
        for name in laws.LAWS:
            tag = "core" if name in laws.CORE_LAWS else "extra"
            print(f"{name:<20} {tag}")
        return 0
    if args.n is None:
        raise UsageError("--n is required")
    check_cap(args.n, args.cap)
    if args.all:
        names = list(laws.CORE_LAWS) + [n for n in (args.law or []) if n not in laws.CORE_LAWS]
    elif args.law:
        names = args.law
    else:
        raise UsageError("select laws with --all or --law")
    unknown = [n for n in names if n not in laws.LAWS]
    if unknown:
        raise UsageError(f"unknown law {unknown[0]!r}; see --list")
    if args.mode == "exhaustive" and args.n != 0 and any(n.startswith("tensor") for n in names):
        raise UsageError("exhaustive tensor checks need --n 0; use --mode constructive")
    kw = {"mode": args.mode, "seed": args.seed, "cap": args.cap}
    if args.budget is not None:
        kw["budget"] = args.budget
    if args.samples is not None:
        kw["samples"] = args.samples
    reports = []
    for name in names:
        report = laws.LAWS[name](args.n, **kw)
        reports.append(report)
        if args.format == "text":
            print(report.summary(), flush=True)
            for v in report.violations:
                print("    " + json.dumps(v))
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="agc", description="Assume-guarantee contract algebra.")
    sub = p.add_subparsers(dest="command", required=True)

    op = sub.add_parser("op", help="apply a contract operation to contract files")
    op.add_argument("operation", choices=OPERATIONS)
    op.add_argument("inputs", nargs="+",
                    help="contract files; for actions, one file followed by a formula")
    op.add_argument("-o", "--output", help="output file (default: stdout)")
    op.add_argument("--cap", type=int, default=None, help="enumeration cap for adjoints")
    op.set_defaults(func=cmd_op)

    check = sub.add_parser("check", help="check refinement or equivalence of two contracts")
    check.add_argument("relation", choices=["refines", "equiv"])
    check.add_argument("first")
    check.add_argument("second")
    check.set_defaults(func=cmd_check)

    lw = sub.add_parser("laws", help="run the algebraic law harness")
    lw.add_argument("--n", type=int, help="number of generators")
    lw.add_argument("--all", action="store_true", help="run the core laws")
    lw.add_argument("--law", action="append", help="law name (repeatable)")
    lw.add_argument("--list", action="store_true", help="list law names")
    lw.add_argument("--mode", choices=["exhaustive", "constructive"], default=None,
                    help="tensor-check mode (default: exhaustive at n=0, else constructive)")
    lw.add_argument("--format", choices=["text", "json"], default="text")
    lw.add_argument("--budget", type=int, default=None,
                    help="largest exhaustive sweep before switching to sampling")
    lw.add_argument("--samples", type=int, default=None, help="tuples per sampled sweep")
    lw.add_argument("--seed", type=int, default=0)
    lw.add_argument("--cap", type=int, default=None, help="enumeration cap on n")
    lw.set_defaults(func=cmd_laws)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, EnumerationCapExceeded, AlgebraError, FormulaError, ValueError) as exc:
        print(f"agc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
