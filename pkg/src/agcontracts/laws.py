"""Executable checks of the algebraic laws of contracts.

Every check sweeps tuples of contracts and Boolean-algebra elements, either
exhaustively (a broadcast grid over the whole space) or, when the grid would
exceed ``budget`` tuples, over ``samples`` uniformly drawn tuples.  Results are
collected in a :class:`LawReport`.

The universal-property checks for merging and composition treat maps between
contract bimodules as lookup tables indexed by :class:`ContractSpace`
indices.  The target bimodule of the bilinear maps is the contract bimodule
itself.  At ``n = 0`` all ``3**9`` binary operations are enumerable; for
larger ``n`` the checks run constructively, generating the linear maps
``m -> x . (m * D) . y`` and verifying the factorization for each of them.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import adjoints as adj
from .boolalg import check_cap, default_algebra
from .contracts import Contract, enumerate_contracts
from .space import ContractSpace

MAX_VIOLATIONS = 20
DEFAULT_BUDGET = 4_000_000
DEFAULT_SAMPLES = 200_000
ADJOINT_SAMPLES = 10_000
_CHUNK = 4_000_000


@dataclass
class LawReport:
    law: str
    n: int
    instances: int = 0
    violations: list[dict] = field(default_factory=list)
    millis: float = 0.0
    mode: str = "exhaustive"
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"law": self.law, "n": self.n, "instances": self.instances,
                "violations": self.violations, "millis": round(self.millis, 3),
                "mode": self.mode, "details": self.details}

    def summary(self) -> str:
        status = "ok" if self.ok else f"FAILED ({self.details.get('violation_count', len(self.violations))} violations)"
        return (f"{self.law:<20} n={self.n} {self.mode:<12} "
                f"instances={self.instances:<10} {self.millis:9.1f} ms  {status}")


@dataclass(frozen=True)
class View:
    """One bimodule structure on the contracts: addition, its unit, actions."""

    name: str
    add: Callable
    unit: int
    left: Callable
    right: Callable

    def act(self, x, i, y):
        return self.right(self.left(x, i), y)


def conjunctive(space: ContractSpace) -> View:
    return View("conj", space.conj, space.top_contract, space.act_left, space.act_right)


def disjunctive(space: ContractSpace) -> View:
    return View("disj", space.disj, space.bottom, space.act_left_disj, space.act_right_disj)


class _Sweep:
    """Tuples over slots of kind 'x' (element) or 'c' (contract index)."""

    def __init__(self, space, budget, samples, rng):
        self.space = space
        self.budget = budget
        self.samples = samples
        self.rng = rng
        self.sampled = False

    def total(self, kinds: str) -> int:
        sizes = [self.space.n_elements if k == "x" else self.space.size for k in kinds]
        return math.prod(sizes)

    def __call__(self, kinds: str) -> list[np.ndarray]:
        sp = self.space
        if self.total(kinds) <= self.budget:
            out = []
            for pos, k in enumerate(kinds):
                base = sp.elements if k == "x" else sp.all_indices()
                shape = [1] * len(kinds)
                shape[pos] = -1
                out.append(base.reshape(shape))
            return out
        self.sampled = True
        return [sp.sample_elements(self.rng, self.samples) if k == "x"
                else sp.sample_contracts(self.rng, self.samples) for k in kinds]


class _Recorder:
    def __init__(self, law: str, space: ContractSpace):
        self.report = LawReport(law, space.n)
        self.space = space
        self.count = 0
        self.checks: dict[str, int] = {}

    def render(self, kind, v):
        if kind == "x":
            return self.space.element(v).to_bitstring()
        if kind == "c":
            return "unsaturated" if v < 0 else self.space.describe(v)
        if kind == "b":
            return bool(v)
        if callable(kind):
            return kind(v)
        return int(v)

    def check(self, name: str, slots: list[tuple[str, str, np.ndarray]], lhs, rhs,
              kind: str = "c") -> bool:
        lhs, rhs = np.asarray(lhs), np.asarray(rhs)
        # scalar checks are treated as one-element sweeps
        shape = np.broadcast_shapes((1,), lhs.shape, rhs.shape, *(np.shape(a) for _, _, a in slots))
        size = math.prod(shape)
        self.report.instances += size
        self.checks[name] = self.checks.get(name, 0) + size
        bad = np.broadcast_to(lhs != rhs, shape)
        nbad = int(bad.sum())
        if not nbad:
            return True
        self.count += nbad
        room = MAX_VIOLATIONS - len(self.report.violations)
        if room > 0:
            where = tuple(w[:room] for w in np.nonzero(bad))
            lv = np.broadcast_to(lhs, shape)[where]
            rv = np.broadcast_to(rhs, shape)[where]
            vals = [np.broadcast_to(a, shape)[where] for _, _, a in slots]
            for t in range(len(lv)):
                self.report.violations.append({
                    "check": name,
                    "inputs": {label: self.render(k, v[t])
                               for (label, k, _), v in zip(slots, vals)},
                    "lhs": self.render(kind, lv[t]),
                    "rhs": self.render(kind, rv[t]),
                })
        return False

    def fail(self, name: str, **info) -> None:
        self.count += 1
        if len(self.report.violations) < MAX_VIOLATIONS:
            self.report.violations.append({"check": name, **info})

    def finish(self, sweep: _Sweep | None, start: float) -> LawReport:
        r = self.report
        r.millis = (time.perf_counter() - start) * 1000
        if sweep is not None and sweep.sampled:
            r.mode = "sampled"
        r.details.setdefault("checks", self.checks)
        r.details["violation_count"] = self.count
        return r


def _setup(law, n, budget, samples, seed, cap):
    check_cap(n, cap)
    space = ContractSpace.for_n(n, cap)
    rng = np.random.default_rng(seed)
    return space, _Sweep(space, budget, samples, rng), _Recorder(law, space), time.perf_counter()


# ---------------------------------------------------------------------------
# Carrier and bimodule structure


def check_contract_count(n: int, cap: int | None = None) -> LawReport:
    """Enumerated contract count against ``3**(2**n)``."""
    check_cap(n, cap)
    start = time.perf_counter()
    algebra = default_algebra(n)
    rec = _Recorder("contract-count", ContractSpace.for_n(n, cap))
    count = sum(1 for _ in enumerate_contracts(algebra, cap))
    expected = 3 ** (2 ** n)
    rec.report.instances = (algebra.mask + 1) ** 2
    rec.report.details.update(count=count, expected=expected)
    if count != expected:
        rec.fail("count", count=count, expected=expected)
    return rec.finish(None, start)


def check_bimodule_axioms(n: int, view: str = "conj", budget: int = DEFAULT_BUDGET,
                          samples: int = DEFAULT_SAMPLES, seed: int = 0,
                          cap: int | None = None) -> LawReport:
    """The five bimodule axioms for the conjunctive (or disjunctive) actions."""
    name = "bimodule" if view == "conj" else "bimodule-disj"
    space, sweep, rec, start = _setup(name, n, budget, samples, seed, cap)
    v = conjunctive(space) if view == "conj" else disjunctive(space)
    one = space.top

    (m,) = sweep("c")
    rec.check("unit-left", [("m", "c", m)], v.left(one, m), m)
    rec.check("unit-right", [("m", "c", m)], v.right(m, one), m)
    x, m = sweep("xc")
    slots = [("x", "x", x), ("m", "c", m)]
    rec.check("closed-left", slots, v.left(x, m) >= 0, True, kind="b")
    rec.check("closed-right", slots, v.right(m, x) >= 0, True, kind="b")

    x, y, m = sweep("xxc")
    slots = [("x", "x", x), ("y", "x", y), ("m", "c", m)]
    rec.check("left-assoc", slots, v.left(x & y, m), v.left(x, v.left(y, m)))
    rec.check("right-assoc", slots, v.right(m, x & y), v.right(v.right(m, x), y))
    rec.check("interchange", slots, v.right(v.left(x, m), y), v.left(x, v.right(m, y)))

    x, y, m, m2 = sweep("xxcc")
    rec.check("distributivity",
              [("x", "x", x), ("y", "x", y), ("m", "c", m), ("m2", "c", m2)],
              v.act(x, v.add(m, m2), y), v.add(v.act(x, m, y), v.act(x, m2, y)))
    return rec.finish(sweep, start)


def check_bimodule_iso(n: int, budget: int = DEFAULT_BUDGET, samples: int = DEFAULT_SAMPLES,
                       seed: int = 0, cap: int | None = None) -> LawReport:
    """Reciprocal as an isomorphism from the conjunctive to the disjunctive bimodule."""
    space, sweep, rec, start = _setup("bimodule-iso", n, budget, samples, seed, cap)
    cv, dv = conjunctive(space), disjunctive(space)
    inv = space.reciprocal

    (m,) = sweep("c")
    rec.check("involution", [("m", "c", m)], inv(inv(m)), m)
    every = np.zeros(space.size, dtype=bool)
    every[inv(space.all_indices())] = True
    rec.check("surjective", [], every.all(), True, kind="b")
    rec.check("unit", [], inv(cv.unit), dv.unit)
    rec.check("fixes-e", [], inv(space.unit), space.unit)

    m, m2 = sweep("cc")
    rec.check("additive", [("m", "c", m), ("m2", "c", m2)],
              inv(cv.add(m, m2)), dv.add(inv(m), inv(m2)))

    x, y, m = sweep("xxc")
    slots = [("x", "x", x), ("y", "x", y), ("m", "c", m)]
    rec.check("equivariant", slots, inv(cv.act(x, m, y)), dv.act(x, inv(m), y))
    rec.check("equivariant-left", slots[::2], inv(cv.left(x, m)), dv.left(x, inv(m)))
    rec.check("equivariant-right", slots[1:], inv(cv.right(m, y)), dv.right(inv(m), y))
    return rec.finish(sweep, start)


# ---------------------------------------------------------------------------
# Linear and bilinear maps


def _linear_eqs(fn, dom: View, cod: View, sweep: _Sweep):
    """Equations of a linear map ``fn`` (index array -> index array)."""
    m, m2 = sweep("cc")
    yield ("linear-additive", [("m", "c", m), ("m2", "c", m2)],
           fn(dom.add(m, m2)), cod.add(fn(m), fn(m2)))
    x, y, m = sweep("xxc")
    yield ("linear-equivariant", [("x", "x", x), ("y", "x", y), ("m", "c", m)],
           cod.act(x, fn(m), y), fn(dom.act(x, m, y)))


def _bilinear_eqs(fn2, dom: View, cod: View, sweep: _Sweep):
    """Equations of a bilinear map ``fn2``; both slots are checked."""
    m, m2, d = sweep("ccc")
    slots = [("m", "c", m), ("m2", "c", m2), ("d", "c", d)]
    yield ("additive-first", slots, fn2(dom.add(m, m2), d), cod.add(fn2(m, d), fn2(m2, d)))
    yield ("additive-second", slots, fn2(d, dom.add(m, m2)), cod.add(fn2(d, m), fn2(d, m2)))
    x, y, m, d = sweep("xxcc")
    slots = [("x", "x", x), ("y", "x", y), ("m", "c", m), ("d", "c", d)]
    out = cod.act(x, fn2(m, d), y)
    yield ("action-first", slots, out, fn2(dom.act(x, m, y), d))
    yield ("action-second", slots, out, fn2(m, dom.act(x, d, y)))


def _batch_ok(eqs, batch: int) -> np.ndarray:
    """Per-map truth of a family of equations whose arrays lead with the map axis."""
    ok = np.ones(batch, dtype=bool)
    for _, _, lhs, rhs in eqs:
        eq = np.asarray(lhs == rhs)
        ok &= eq.reshape(batch, -1).all(axis=1)
    return ok


def _tuple_size(sweep: _Sweep, kinds: list[str]) -> int:
    if sweep.total("".join(kinds)) <= sweep.budget:
        return sweep.total("".join(kinds))
    return sweep.samples


def _chunks(total: int, per_item: int) -> Iterator[slice]:
    step = max(1, _CHUNK // max(1, per_item))
    for s in range(0, total, step):
        yield slice(s, min(total, s + step))


def linear_mask(tables: np.ndarray, dom: View, cod: View, sweep: _Sweep) -> np.ndarray:
    """Which rows of ``tables`` (shape ``(M, K)``) are linear maps."""
    per = _tuple_size(sweep, ["xxc"])
    out = np.empty(len(tables), dtype=bool)
    for sl in _chunks(len(tables), per):
        t = tables[sl]
        out[sl] = _batch_ok(_linear_eqs(lambda i: t[:, i], dom, cod, sweep), len(t))
    return out


def bilinear_mask(fn2_factory, count: int, dom: View, cod: View, sweep: _Sweep) -> np.ndarray:
    """Which of ``count`` binary maps are bilinear.

    ``fn2_factory(slice)`` returns a function of two index arrays evaluating the
    selected maps, with the map axis first.
    """
    per = _tuple_size(sweep, ["xxcc"])
    out = np.empty(count, dtype=bool)
    for sl in _chunks(count, per):
        fn2 = fn2_factory(sl)
        out[sl] = _batch_ok(_bilinear_eqs(fn2, dom, cod, sweep), sl.stop - sl.start)
    return out


@dataclass(frozen=True)
class LinearMap:
    """A tabulated map of contracts; ``table[i]`` is the image of contract ``i``."""

    space: ContractSpace
    table: tuple[int, ...]

    def __call__(self, c: Contract) -> Contract:
        return self.space.contract(self.table[self.space.index_of(c)])


@dataclass(frozen=True)
class BilinearMap:
    space: ContractSpace
    table: tuple[tuple[int, ...], ...]

    def __call__(self, c1: Contract, c2: Contract) -> Contract:
        i, j = self.space.index_of(c1), self.space.index_of(c2)
        return self.space.contract(self.table[i][j])


def _all_unary_tables(space: ContractSpace) -> np.ndarray:
    k = space.size
    return np.array(list(itertools.product(range(k), repeat=k)), dtype=np.int32).reshape(-1, k)


def _all_binary_tables(space: ContractSpace) -> np.ndarray:
    k = space.size
    return np.array(list(itertools.product(range(k), repeat=k * k)),
                    dtype=np.int32).reshape(-1, k, k)


def _generated_tables(space, tau, cod: View, sweep: _Sweep):
    """Tables of ``m -> x . tau(m, D) . y`` over all (or sampled) ``x, y, D``.

    Returns ``(tables, generated)``; tables are deduplicated.
    """
    m = space.all_indices()
    total = space.n_elements ** 2 * space.size
    if total * space.size <= sweep.budget:
        x = space.elements.reshape(-1, 1, 1, 1)
        y = space.elements.reshape(1, -1, 1, 1)
        d = space.all_indices().reshape(1, 1, -1, 1)
        tables = cod.act(x, tau(m.reshape(1, 1, 1, -1), d), y).reshape(-1, space.size)
        generated = total
    else:
        sweep.sampled = True
        count = max(1, min(total, sweep.budget // space.size, 256))
        x = space.sample_elements(sweep.rng, count).reshape(-1, 1)
        y = space.sample_elements(sweep.rng, count).reshape(-1, 1)
        d = space.sample_contracts(sweep.rng, count).reshape(-1, 1)
        tables = cod.act(x, tau(m.reshape(1, -1), d), y)
        generated = count
    return np.unique(tables, axis=0), generated


def enumerate_linear_maps(n: int, view: str = "conj", mode: str | None = None,
                          budget: int = DEFAULT_BUDGET, cap: int | None = None) -> list[LinearMap]:
    """Linear endomaps of the contract bimodule.

    ``mode="filter"`` (n = 0 only) tests all ``3**3`` maps; ``"constructive"``
    tests the generated maps ``m -> x . (m * D) . y``.  Every returned map has
    passed the linearity check.
    """
    check_cap(n, cap)
    space = ContractSpace.for_n(n, cap)
    v = conjunctive(space) if view == "conj" else disjunctive(space)
    tau = space.merge if view == "conj" else space.compose
    mode = mode or ("filter" if n == 0 else "constructive")
    sweep = _Sweep(space, budget, DEFAULT_SAMPLES, np.random.default_rng(0))
    if mode == "filter":
        if n != 0:
            raise ValueError("filter mode enumerates all maps and needs n = 0")
        tables = _all_unary_tables(space)
    else:
        tables, _ = _generated_tables(space, tau, v, sweep)
    ok = linear_mask(tables, v, v, sweep)
    return [LinearMap(space, tuple(int(t) for t in row)) for row in tables[ok]]


# ---------------------------------------------------------------------------
# Tensor products


def check_bilinear(n: int, op: str = "merge", budget: int = DEFAULT_BUDGET,
                   samples: int = DEFAULT_SAMPLES, seed: int = 0,
                   cap: int | None = None) -> LawReport:
    """Bilinearity of merging (conjunctive view) or composition (disjunctive view)."""
    space, sweep, rec, start = _setup(f"bilinear-{op}", n, budget, samples, seed, cap)
    v = conjunctive(space) if op == "merge" else disjunctive(space)
    tau = space.merge if op == "merge" else space.compose
    for name, slots, lhs, rhs in _bilinear_eqs(tau, v, v, sweep):
        rec.check(name, slots, lhs, rhs)
    m, d = sweep("cc")
    rec.check("commutative", [("m", "c", m), ("d", "c", d)], tau(m, d), tau(d, m))
    return rec.finish(sweep, start)


def check_bilinear_merge(n: int, **kw) -> LawReport:
    return check_bilinear(n, "merge", **kw)


def check_bilinear_compose(n: int, **kw) -> LawReport:
    return check_bilinear(n, "compose", **kw)


class _TensorSetup:
    def __init__(self, space: ContractSpace, op: str):
        self.space = space
        self.op = op
        if op == "merge":
            self.view = conjunctive(space)
            self.tau = space.merge
            self.dual = None
        else:
            self.view = disjunctive(space)
            self.tau = space.compose
            # reciprocal carries compose-factorizations to merge-factorizations
            self.dual = (conjunctive(space), space.merge)
        self.cod = self.view
        self.e = space.unit


def _render_table(space: ContractSpace, row) -> list[str]:
    return [space.describe(t) for t in row]


def _check_factorizations(rec: _Recorder, ts: _TensorSetup, sweep: _Sweep,
                          fn2_factory, count: int, fhat: np.ndarray, row_render) -> None:
    """For bilinear maps ``f`` with ``fhat[k] = f_k(e, .)``: linearity of fhat,
    ``f = fhat . tau`` and, for composition, the transport through reciprocal."""
    sp, tau, v, e = ts.space, ts.tau, ts.view, ts.e
    per = _tuple_size(sweep, ["xxcc"])
    for sl in _chunks(count, per):
        ids = np.arange(sl.start, sl.stop)
        f2 = fn2_factory(sl)
        t = fhat[sl]
        fh = lambda i: t[:, i]  # noqa: E731

        def with_map(slots):
            ndim = max(np.ndim(a) for _, _, a in slots)
            return [("map", row_render, ids.reshape((-1,) + (1,) * ndim))] + slots

        for name, slots, lhs, rhs in _linear_eqs(fh, v, ts.cod, sweep):
            rec.check("fhat-" + name, with_map(slots), lhs, rhs)
        m, d = sweep("cc")
        pair = [("m", "c", m), ("d", "c", d)]
        rec.check("factorization", with_map(pair), f2(m, d), fh(tau(m, d)))
        if ts.dual is not None:
            dview, dtau = ts.dual
            inv = sp.reciprocal
            ftilde = lambda i, j: f2(inv(i), inv(j))  # noqa: E731
            for name, slots, lhs, rhs in _bilinear_eqs(ftilde, dview, ts.cod, sweep):
                rec.check("transport-" + name, with_map(slots), lhs, rhs)
            rec.check("transport-factorization", with_map(pair),
                      ftilde(m, d), fh(inv(dtau(m, d))))


def _tau_surjective(rec: _Recorder, ts: _TensorSetup) -> None:
    sp = ts.space
    idx = sp.all_indices()
    hit = np.zeros(sp.size, dtype=bool)
    hit[ts.tau(idx, ts.e)] = True
    rec.check("tau-surjective", [], hit.all(), True, kind="b")


def check_tensor_up(n: int, op: str = "merge", mode: str | None = None,
                    budget: int = DEFAULT_BUDGET, samples: int = DEFAULT_SAMPLES,
                    seed: int = 0, cap: int | None = None) -> LawReport:
    """Universal property of ``merge`` (or ``compose``) as a tensor product.

    ``mode="exhaustive"`` (n = 0): every binary operation on the 3 contracts
    is scanned; each bilinear ``f`` must factor as ``f = fhat . tau`` with
    ``fhat = f(e, .)`` linear and unique, and bilinear and linear maps must
    be equinumerous.  ``mode="constructive"``: each generated linear map
    ``fhat`` yields ``f = fhat . tau``, which must be bilinear and give back
    ``fhat`` as ``f(e, .)``.
    """
    mode = mode or ("exhaustive" if n == 0 else "constructive")
    if mode == "exhaustive" and n != 0:
        raise ValueError("exhaustive tensor check enumerates all binary operations and needs n = 0")
    if mode not in ("exhaustive", "constructive"):
        raise ValueError(f"unknown mode {mode!r}")
    space, sweep, rec, start = _setup(f"tensor-{op}", n, budget, samples, seed, cap)
    ts = _TensorSetup(space, op)
    v, tau, e = ts.view, ts.tau, ts.e
    rec.report.details["mode"] = mode
    rec.report.mode = mode

    # tau is itself bilinear
    tau_ok = bilinear_mask(lambda sl: (lambda i, j: tau(i, j)[None]), 1, v, ts.cod, sweep)
    rec.check("tau-bilinear", [], tau_ok[0], True, kind="b")
    _tau_surjective(rec, ts)

    if mode == "exhaustive":
        _tensor_exhaustive(rec, ts, sweep)
    else:
        _tensor_constructive(rec, ts, sweep)
    report = rec.finish(sweep, start)
    if sweep.sampled:
        report.mode = f"{mode}-sampled"
    return report


def _tensor_exhaustive(rec: _Recorder, ts: _TensorSetup, sweep: _Sweep) -> None:
    sp, v, tau, e = ts.space, ts.view, ts.tau, ts.e
    k = sp.size
    binary = _all_binary_tables(sp)
    bil = bilinear_mask(lambda sl: (lambda i, j: binary[sl][:, i, j]), len(binary), v, ts.cod, sweep)
    unary = _all_unary_tables(sp)
    lin = linear_mask(unary, v, ts.cod, sweep)
    F = binary[bil]
    L = unary[lin]
    fhat = F[:, e, :]
    rec.report.details.update(candidates=len(binary), bilinear_count=int(bil.sum()),
                              linear_count=int(lin.sum()), unary_candidates=len(unary))
    rec.report.instances = 0
    render = lambda i: [_render_table(sp, r) for r in F[int(i)]]  # noqa: E731
    _check_factorizations(rec, ts, sweep, lambda sl: (lambda i, j: F[sl][:, i, j]),
                          len(F), fhat, render)

    # uniqueness: linear h agreeing with fhat on every tau-image equals fhat
    i, j = np.meshgrid(np.arange(k), np.arange(k), indexing="ij")
    img = tau(i, j).ravel()
    agree = (fhat[:, None, img] == L[None, :, img]).all(axis=2)
    same = (fhat[:, None, :] == L[None, :, :]).all(axis=2)
    rec.check("unique", [("map", render, np.arange(len(F)))],
              agree.sum(axis=1), 1, kind="n")
    rec.check("unique-is-fhat", [("map", render, np.arange(len(F)))],
              (agree & same).sum(axis=1), 1, kind="n")

    # bijection between bilinear and linear maps
    rec.check("count", [], len(F), len(L), kind="n")
    composites = L[:, img].reshape(-1, k, k)
    bil_keys = {row.tobytes() for row in F}
    found = np.array([c.tobytes() in bil_keys for c in composites], dtype=bool)
    rec.check("linear-to-bilinear", [("h", lambda t: _render_table(sp, L[int(t)]), np.arange(len(L)))],
              found, True, kind="b")
    rec.check("injective", [], len({r.tobytes() for r in fhat}), len(F), kind="n")

    # the constructive generator lands inside the exhaustive filter
    gen, _ = _generated_tables(sp, tau, ts.cod, sweep)
    gen_comp = gen[:, img].reshape(-1, k, k)
    found = np.array([c.tobytes() in bil_keys for c in gen_comp], dtype=bool)
    rec.check("generated-in-filter", [("fhat", lambda t: _render_table(sp, gen[int(t)]), np.arange(len(gen)))],
              found, True, kind="b")
    rec.report.instances = len(binary)


def _tensor_constructive(rec: _Recorder, ts: _TensorSetup, sweep: _Sweep) -> None:
    sp, v, tau, e = ts.space, ts.view, ts.tau, ts.e
    k = sp.size
    tables, generated = _generated_tables(sp, tau, ts.cod, sweep)
    rec.report.details.update(generated=generated, distinct_maps=len(tables))
    render = lambda i: _render_table(sp, tables[int(i)])  # noqa: E731
    ids_all = np.arange(len(tables))

    lin = linear_mask(tables, v, ts.cod, sweep)
    rec.check("generated-linear", [("fhat", render, ids_all)], lin, True, kind="b")

    def f2_factory(sl):
        t = tables[sl]
        return lambda i, j: t[:, tau(i, j)]

    bil = bilinear_mask(f2_factory, len(tables), v, ts.cod, sweep)
    rec.check("composite-bilinear", [("fhat", render, ids_all)], bil, True, kind="b")

    # recovery: C -> f(e, C) gives back fhat
    idx = sp.all_indices()
    rec.check("recovery", [("fhat", render, ids_all.reshape(-1, 1)), ("m", "c", idx.reshape(1, -1))],
              tables[:, tau(e, idx)], tables)
    _check_factorizations(rec, ts, sweep, f2_factory, len(tables), tables, render)

    # distinct linear maps give distinct bilinear maps
    if k * k <= sweep.budget:
        i, j = np.meshgrid(idx, idx, indexing="ij")
        probe_i, probe_j = i.ravel(), j.ravel()
    else:
        s = sp.sample_contracts(sweep.rng, sweep.samples)
        s2 = sp.sample_contracts(sweep.rng, sweep.samples)
        probe_i = np.concatenate([idx, s])
        probe_j = np.concatenate([np.full(k, e), s2])
    comp = tables[:, tau(probe_i, probe_j)]
    rec.check("injective", [], len(np.unique(comp, axis=0)), len(tables), kind="n")
    rec.report.instances = generated


def check_tensor_up_merge(n: int, mode: str | None = None, **kw) -> LawReport:
    return check_tensor_up(n, "merge", mode, **kw)


def check_tensor_up_compose(n: int, mode: str | None = None, **kw) -> LawReport:
    return check_tensor_up(n, "compose", mode, **kw)


# ---------------------------------------------------------------------------
# Contract-level laws


def check_closed_forms(n: int, budget: int = DEFAULT_BUDGET, samples: int = DEFAULT_SAMPLES,
                       seed: int = 0, cap: int | None = None) -> LawReport:
    """Merge and compose against their closed forms, recomputed with Element
    operations, and saturation of every operation's output."""
    space, sweep, rec, start = _setup("closed-forms", n, budget, samples, seed, cap)
    m, d = sweep("cc")
    m, d = np.broadcast_arrays(m, d)
    m, d = m.ravel(), d.ravel()
    slots = [("m", "c", m), ("d", "c", d)]
    expect_merge = np.empty(len(m), dtype=np.int64)
    expect_compose = np.empty(len(m), dtype=np.int64)
    for t, (i, j) in enumerate(zip(m.tolist(), d.tolist())):
        c1, c2 = space.contract(i), space.contract(j)
        a = c1.a & c2.a
        expect_merge[t] = space.index(a.bits, a.implies(c1.g & c2.g).bits)
        g = c1.g & c2.g
        expect_compose[t] = space.index(g.implies(c1.a & c2.a).bits, g.bits)
    rec.check("merge", slots, space.merge(m, d), expect_merge)
    rec.check("compose", slots, space.compose(m, d), expect_compose)
    for name in ("conj", "disj", "merge", "compose"):
        rec.check(f"saturated-{name}", slots, getattr(space, name)(m, d) >= 0, True, kind="b")
    x, m = sweep("xc")
    for name in ("act_left", "act_left_disj"):
        rec.check(f"saturated-{name}", [("x", "x", x), ("m", "c", m)],
                  getattr(space, name)(x, m) >= 0, True, kind="b")
    for name in ("act_right", "act_right_disj"):
        rec.check(f"saturated-{name}", [("x", "x", x), ("m", "c", m)],
                  getattr(space, name)(m, x) >= 0, True, kind="b")
    return rec.finish(sweep, start)


def check_order(n: int, budget: int = DEFAULT_BUDGET, samples: int = DEFAULT_SAMPLES,
                seed: int = 0, cap: int | None = None) -> LawReport:
    """Refinement is a bounded partial order."""
    space, sweep, rec, start = _setup("order", n, budget, samples, seed, cap)
    r = space.refines
    (m,) = sweep("c")
    rec.check("reflexive", [("m", "c", m)], r(m, m), True, kind="b")
    rec.check("bottom", [("m", "c", m)], r(space.bottom, m), True, kind="b")
    rec.check("top", [("m", "c", m)], r(m, space.top_contract), True, kind="b")
    m, d = sweep("cc")
    rec.check("antisymmetric", [("m", "c", m), ("d", "c", d)],
              r(m, d) & r(d, m), m == d, kind="b")
    m, d, u = sweep("ccc")
    slots = [("m", "c", m), ("d", "c", d), ("u", "c", u)]
    rec.check("transitive", slots, r(m, d) & r(d, u) & ~r(m, u), False, kind="b")
    return rec.finish(sweep, start)


def check_glb_lub(n: int, budget: int = DEFAULT_BUDGET, samples: int = DEFAULT_SAMPLES,
                  seed: int = 0, cap: int | None = None) -> LawReport:
    """Conjunction is the greatest lower bound, disjunction the least upper bound."""
    space, sweep, rec, start = _setup("glb-lub", n, budget, samples, seed, cap)
    r = space.refines
    m, d, u = sweep("ccc")
    slots = [("c", "c", m), ("c2", "c", d), ("c3", "c", u)]
    rec.check("glb", slots, r(u, space.conj(m, d)), r(u, m) & r(u, d), kind="b")
    rec.check("lub", slots, r(space.disj(m, d), u), r(m, u) & r(d, u), kind="b")
    return rec.finish(sweep, start)


def check_saturated_identity(n: int, budget: int = DEFAULT_BUDGET, samples: int = DEFAULT_SAMPLES,
                             seed: int = 0, cap: int | None = None) -> LawReport:
    """``(a | a') -> (g & g') == g & g' == (a -> g) & (a' -> g')`` on contracts."""
    space, sweep, rec, start = _setup("saturated-identity", n, budget, samples, seed, cap)
    m, d = sweep("cc")
    slots = [("c", "c", m), ("c2", "c", d)]
    a, g, a2, g2, top = space.A[m], space.G[m], space.A[d], space.G[d], space.top
    gg = g & g2
    rec.check("first", slots, ((a | a2) ^ top) | gg, gg, kind="n")
    rec.check("second", slots, gg, ((a ^ top) | g) & ((a2 ^ top) | g2), kind="n")
    return rec.finish(sweep, start)


def check_duality(n: int, budget: int = DEFAULT_BUDGET, samples: int = DEFAULT_SAMPLES,
                  seed: int = 0, cap: int | None = None) -> LawReport:
    """Reciprocal exchanges merge with compose and conj with disj."""
    space, sweep, rec, start = _setup("duality", n, budget, samples, seed, cap)
    inv = space.reciprocal
    m, d = sweep("cc")
    slots = [("c", "c", m), ("c2", "c", d)]
    rec.check("merge-compose", slots, inv(space.merge(m, d)), space.compose(inv(m), inv(d)))
    rec.check("compose-merge", slots, inv(space.compose(m, d)), space.merge(inv(m), inv(d)))
    rec.check("conj-disj", slots, inv(space.conj(m, d)), space.disj(inv(m), inv(d)))
    rec.check("order-reversing", slots, space.refines(m, d), space.refines(inv(d), inv(m)), kind="b")
    return rec.finish(sweep, start)


def check_monoids(n: int, budget: int = DEFAULT_BUDGET, samples: int = DEFAULT_SAMPLES,
                  seed: int = 0, cap: int | None = None) -> LawReport:
    """Commutative monoid laws of conj, disj, merge and compose."""
    space, sweep, rec, start = _setup("monoid", n, budget, samples, seed, cap)
    units = {"conj": space.top_contract, "disj": space.bottom,
             "merge": space.unit, "compose": space.unit}
    for name, unit in units.items():
        op = getattr(space, name)
        (m,) = sweep("c")
        rec.check(f"{name}-identity", [("c", "c", m)], op(m, unit), m)
        m, d = sweep("cc")
        rec.check(f"{name}-commutative", [("c", "c", m), ("c2", "c", d)], op(m, d), op(d, m))
        m, d, u = sweep("ccc")
        rec.check(f"{name}-associative", [("c", "c", m), ("c2", "c", d), ("c3", "c", u)],
                  op(op(m, d), u), op(m, op(d, u)))
    (m,) = sweep("c")
    rec.check("merge-absorbs-top", [("c", "c", m)], space.merge(space.top_contract, m),
              space.top_contract)
    rec.check("compose-absorbs-bottom", [("c", "c", m)], space.compose(space.bottom, m),
              space.bottom)
    return rec.finish(sweep, start)


def check_adjoints(n: int, samples: int = ADJOINT_SAMPLES, seed: int = 0,
                   cap: int | None = None, exhaustive_max_n: int = 1) -> LawReport:
    """Galois connections of the four adjoints and their duality transport.

    Exhaustive over all triples for ``n <= exhaustive_max_n``, otherwise over
    ``samples`` uniformly drawn triples.
    """
    budget = 0 if n > exhaustive_max_n else DEFAULT_BUDGET
    space, sweep, rec, start = _setup("adjoints", n, budget, samples, seed, cap)
    x, c1, c2 = sweep("ccc")
    pairs = np.broadcast_arrays(c1, c2)
    need = set(zip(pairs[0].ravel().tolist(), pairs[1].ravel().tolist()))
    tables = {name: np.full((space.size, space.size), -1, dtype=np.int64) for name in adj.ADJOINTS}
    for i, j in sorted(need):
        a, b = space.contract(i), space.contract(j)
        for name, (fn, _) in adj.ADJOINTS.items():
            tables[name][i, j] = space.index_of(fn(a, b, cap=cap))
    rec.report.details["adjoint_solves"] = 4 * len(need)
    r = space.refines
    slots = [("X", "c", x), ("c1", "c", c1), ("c2", "c", c2)]
    rec.check("quotient", slots, r(space.compose(x, c2), c1), r(x, tables["quotient"][c1, c2]), kind="b")
    rec.check("implication", slots, r(space.conj(x, c2), c1), r(x, tables["implication"][c1, c2]), kind="b")
    rec.check("separation", slots, r(c1, space.merge(x, c2)), r(tables["separation"][c1, c2], x), kind="b")
    rec.check("coimplication", slots, r(c1, space.disj(x, c2)), r(tables["coimplication"][c1, c2], x), kind="b")

    # reciprocal carries each right adjoint to its dual left adjoint
    p1, p2 = pairs[0].ravel(), pairs[1].ravel()
    inv = space.reciprocal
    dual = [("quotient", "separation"), ("implication", "coimplication")]
    for right, left in dual:
        want = []
        for i, j in zip(inv(p1).tolist(), inv(p2).tolist()):
            if tables[left][i, j] < 0:
                fn = adj.ADJOINTS[left][0]
                tables[left][i, j] = space.index_of(fn(space.contract(i), space.contract(j), cap=cap))
            want.append(tables[left][i, j])
        rec.check(f"dual-{right}-{left}", [("c1", "c", p1), ("c2", "c", p2)],
                  inv(tables[right][p1, p2]), np.array(want))
    return rec.finish(sweep, start)


CORE_LAWS = {
    "contract-count": lambda n, **kw: check_contract_count(n, cap=kw.get("cap")),
    "bimodule": lambda n, **kw: check_bimodule_axioms(n, "conj", **_plain(kw)),
    "bimodule-disj": lambda n, **kw: check_bimodule_axioms(n, "disj", **_plain(kw)),
    "bimodule-iso": lambda n, **kw: check_bimodule_iso(n, **_plain(kw)),
    "bilinear-merge": lambda n, **kw: check_bilinear_merge(n, **_plain(kw)),
    "bilinear-compose": lambda n, **kw: check_bilinear_compose(n, **_plain(kw)),
    "tensor-merge": lambda n, **kw: check_tensor_up_merge(n, kw.get("mode"), **_plain(kw)),
    "tensor-compose": lambda n, **kw: check_tensor_up_compose(n, kw.get("mode"), **_plain(kw)),
}

EXTRA_LAWS = {
    "closed-forms": lambda n, **kw: check_closed_forms(n, **_plain(kw)),
    "order": lambda n, **kw: check_order(n, **_plain(kw)),
    "glb-lub": lambda n, **kw: check_glb_lub(n, **_plain(kw)),
    "saturated-identity": lambda n, **kw: check_saturated_identity(n, **_plain(kw)),
    "duality": lambda n, **kw: check_duality(n, **_plain(kw)),
    "monoid": lambda n, **kw: check_monoids(n, **_plain(kw)),
    "adjoints": lambda n, **kw: check_adjoints(n, seed=kw.get("seed", 0), cap=kw.get("cap")),
}

LAWS = {**CORE_LAWS, **EXTRA_LAWS}


def _plain(kw: dict) -> dict:
    return {k: v for k, v in kw.items() if k in ("budget", "samples", "seed", "cap")}


def run_laws(n: int, names=None, **kw) -> list[LawReport]:
    """Run the named laws (default: the core set) at ``n`` generators."""
    check_cap(n, kw.get("cap"))
    names = list(CORE_LAWS) if names is None else list(names)
    unknown = [name for name in names if name not in LAWS]
    if unknown:
        raise KeyError(f"unknown law {unknown[0]!r}")
    return [LAWS[name](n, **kw) for name in names]
