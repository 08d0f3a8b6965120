import json

import numpy as np
import pytest

from agcontracts import laws as L
from agcontracts.boolalg import EnumerationCapExceeded
from agcontracts.contracts import enumerate_contracts, identity, merge, top
from agcontracts.space import ContractSpace

FAST = [name for name in L.LAWS if not name.startswith("tensor")]


@pytest.mark.parametrize("n", [0, 1])
@pytest.mark.parametrize("name", list(L.LAWS))
def test_every_law_holds_small(name, n):
    (report,) = L.run_laws(n, [name])
    assert report.ok, report.violations[:3]
    assert report.instances > 0
    assert report.details["violation_count"] == 0


@pytest.mark.parametrize("name", FAST)
def test_fast_laws_hold_at_n2(name):
    (report,) = L.run_laws(2, [name])
    assert report.ok, report.violations[:3]


def test_sweep_sizes():
    r1 = L.check_bimodule_axioms(1)
    assert r1.details["checks"]["distributivity"] == 4 * 4 * 9 * 9
    r2 = L.check_bimodule_axioms(2)
    assert r2.details["checks"]["distributivity"] == 16 ** 2 * 81 ** 2 == 1_679_616
    assert r2.mode == "exhaustive"
    assert L.check_glb_lub(2).details["checks"]["glb"] == 81 ** 3
    assert L.check_closed_forms(2).details["checks"]["merge"] == 81 ** 2


def test_large_sweeps_switch_to_sampling():
    report = L.check_bimodule_axioms(3, samples=5000)
    assert report.mode == "sampled" and report.ok
    assert report.details["checks"]["distributivity"] == 5000


def test_adjoint_sampling_at_n2():
    report = L.check_adjoints(2)
    assert report.ok
    assert report.mode == "sampled"
    assert report.details["checks"]["quotient"] >= 10_000
    assert L.check_adjoints(1).details["checks"]["quotient"] == 729


def test_contract_counts():
    for n, want in enumerate([3, 9, 81, 6561]):
        report = L.check_contract_count(n)
        assert report.ok and report.details["count"] == want


def test_tensor_exhaustive_n0():
    report = L.check_tensor_up_merge(0)
    assert report.ok
    assert report.details["bilinear_count"] == report.details["linear_count"]
    with pytest.raises(ValueError):
        L.check_tensor_up(1, "merge", mode="exhaustive")


def test_tensor_constructive_n1_counts():
    report = L.check_tensor_up_compose(1)
    assert report.ok and report.mode == "constructive"
    assert report.details.get("generated", report.instances) >= 144


def test_constructive_generator_inside_filter_n0():
    # every generated map is among the linear maps found by brute force
    found = {m.table for m in L.enumerate_linear_maps(0, mode="filter")}
    made = {m.table for m in L.enumerate_linear_maps(0, mode="constructive")}
    assert made <= found
    space = ContractSpace.for_n(0)
    assert tuple(range(space.size)) in made
    assert len(found) == L.check_tensor_up_merge(0).details["linear_count"]


def test_linear_maps_are_callable():
    maps = L.enumerate_linear_maps(1)
    algebra = ContractSpace.for_n(1).algebra
    assert any(all(m(c) == c for c in enumerate_contracts(algebra)) for m in maps)
    with pytest.raises(ValueError):
        L.enumerate_linear_maps(1, mode="filter")


def test_constant_maps_n0():
    space = ContractSpace.for_n(0)
    found = {m.table for m in L.enumerate_linear_maps(0, mode="filter")}
    # the additive unit absorbs the actions, so constant-unit is linear
    assert tuple([space.top_contract] * space.size) in found
    # act_left(0, bottom) is top, so constant-bottom is not
    assert tuple([space.bottom] * space.size) not in found


def test_report_json_schema():
    report = L.check_duality(1)
    data = json.loads(json.dumps(report.to_json()))
    assert set(data) == {"law", "n", "instances", "violations", "millis", "mode", "details"}
    assert data["law"] == "duality" and data["violations"] == []
    assert "ok" in report.summary()


def test_run_laws_defaults_and_errors():
    assert [r.law for r in L.run_laws(0)] == list(L.CORE_LAWS)
    assert len(L.CORE_LAWS) == 8
    with pytest.raises(KeyError):
        L.run_laws(0, ["nope"])
    with pytest.raises(EnumerationCapExceeded):
        L.run_laws(4)


# Mutation tests: a deliberately broken operation must be caught.

def _broken(space, monkeypatch, name, fn):
    monkeypatch.setattr(space, name, fn)


def test_detects_broken_merge(monkeypatch):
    space = ContractSpace.for_n(1)
    _broken(space, monkeypatch, "merge", space.conj)
    assert not L.check_closed_forms(1).ok
    assert not L.check_duality(1).ok


def test_detects_broken_action(monkeypatch):
    space = ContractSpace.for_n(1)
    original = space.act_left
    _broken(space, monkeypatch, "act_left", lambda x, i: original(x ^ space.top, i))
    report = L.check_bimodule_axioms(1)
    assert not report.ok
    assert len(report.violations) == L.MAX_VIOLATIONS
    assert report.details["violation_count"] > len(report.violations)


def test_detects_broken_compose_in_tensor(monkeypatch):
    space = ContractSpace.for_n(0)
    _broken(space, monkeypatch, "compose", lambda i, j: space.conj(i, j))
    assert not L.check_tensor_up_compose(0).ok


def test_detects_broken_adjoint(monkeypatch):
    import agcontracts.adjoints as adj
    fake = dict(adj.ADJOINTS)
    fake["quotient"] = (lambda c1, c2, cap=None: identity(c1.algebra), "compose")
    monkeypatch.setattr(adj, "ADJOINTS", fake)
    assert not L.check_adjoints(1).ok


def test_merge_scalar_matches_space():
    space = ContractSpace.for_n(2)
    cs = list(enumerate_contracts(space.algebra))
    i = np.arange(space.size).reshape(-1, 1)
    j = np.arange(space.size).reshape(1, -1)
    table = space.merge(i, j)
    for a in range(0, space.size, 7):
        for b in range(space.size):
            assert space.contract(int(table[a, b])) == merge(cs[a], cs[b])
