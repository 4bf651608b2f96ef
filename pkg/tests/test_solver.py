import json
import random

import pytest

from superstable import (InvariantError, UniformMatroid, brute_force_all, ch_d, ch_h,
                         is_super_stable, solve)
from superstable import solver as solver_module
from superstable.solver import ChDTrace, ChHTrace, trace_records

from helpers import ALL_TIED, EMPTY, STRICT, two_element
from oracles import all_circuits, brute_rank, subsets
from test_stability import corpus

K1, K2, K3 = UniformMatroid(2, 1), UniformMatroid(2, 2), UniformMatroid(3, 3)


# --- Ch_D -------------------------------------------------------------------

def test_ch_d_empty():
    trace = ch_d(STRICT, set())
    assert trace.output == frozenset() and trace.level_count == 0


def test_ch_d_keeps_whole_tied_band_even_if_dependent():
    inst = two_element(K1, K2, (1, 1), (1, 1))
    trace = ch_d(inst, {0, 1})
    assert trace.output == {0, 1}
    assert not inst.m_d.is_independent(trace.output)
    assert trace.levels == [({0, 1}, {0, 1})]


def test_ch_d_contracts_band():
    from superstable import Instance, WeakOrder
    inst = Instance(3, UniformMatroid(3, 2), K3, WeakOrder((1, 1, 2)), WeakOrder((0, 0, 0), "H"))
    trace = ch_d(inst, {0, 1, 2})
    assert trace.output == {0, 1}
    assert trace.levels == [({0, 1}, {0, 1}), ({2}, frozenset())]


def test_ch_d_contracts_full_band_not_only_picked():
    """Contracting only the picked elements would accept element 3 here."""
    from superstable import GraphicMatroid, Instance, WeakOrder
    # edges 0:(0,1) 1:(0,1) 2:(1,2) 3:(0,2); bands {0,1}, {2}, {3}
    m = GraphicMatroid(3, ((0, 1), (0, 1), (1, 2), (0, 2)))
    inst = Instance(4, m, UniformMatroid(4, 4), WeakOrder((0, 0, 1, 2)), WeakOrder((0,) * 4, "H"))
    trace = ch_d(inst, range(4))
    assert trace.output == {0, 1, 2}
    assert trace.levels[-1] == ({3}, frozenset())


def check_ch_d_properties(inst, subset, circuits):
    m, order = inst.m_d, inst.order_d
    trace = ch_d(inst, subset)
    out = trace.output
    bands = [band for band, _ in trace.levels]
    assert frozenset().union(*bands) == subset
    assert all(order.strictly_prefers(e, f)
               for i, a in enumerate(bands) for b in bands[i + 1:] for e in a for f in b)
    assert all(picked <= band for band, picked in trace.levels)
    # contains a base of M_D|F
    assert brute_rank(m, out) == brute_rank(m, subset)
    if m.is_independent(out):
        prefix, chosen = frozenset(), frozenset()
        for band, picked in trace.levels:
            prefix, chosen = prefix | band, chosen | picked
            assert len(chosen) == brute_rank(m, prefix)
        for e in subset - out:
            assert not m.is_independent(out | {e})
            assert all(order.strictly_prefers(f, e)
                       for f in m.fundamental_circuit_minus(e, out))
    for c in circuits:
        if c <= subset:
            for e in c:
                if all(order.strictly_prefers(f, e) for f in c - {e}):
                    assert e not in out


def test_ch_d_properties_on_every_subset():
    for inst in corpus(40, 7, seed=10):
        fast = inst.cached()
        circuits = all_circuits(fast.m_d)
        for subset in subsets(inst.ground):
            check_ch_d_properties(fast, subset, circuits)


# --- Ch_H -------------------------------------------------------------------

def test_ch_h_examples():
    assert ch_h(STRICT, set()).output == frozenset()
    strict = two_element(K2, K1, (1, 1), (1, 2))
    trace = ch_h(strict, {0, 1})
    assert trace.output == {0}
    assert trace.steps == [(0, None), (1, frozenset({1}))]
    tied = two_element(K2, K1, (1, 1), (1, 1))
    assert ch_h(tied, {0, 1}).output == frozenset()


def test_ch_h_respects_order():
    strict = two_element(K2, K1, (1, 1), (1, 2))
    assert [e for e, _ in ch_h(strict, {0, 1}, order=[1, 0]).steps] == [1, 0]
    assert ch_h(strict, {0, 1}, order=[1, 0]).output == {0}


def test_ch_h_rejections_have_witness_circuits():
    rng = random.Random(0)
    for inst in corpus(40, 7, seed=11):
        fast = inst.cached()
        circuits = all_circuits(fast.m_h)
        order = list(range(inst.size))
        rng.shuffle(order)
        for subset in subsets(inst.ground):
            for o in (None, order):
                out = ch_h(fast, subset, o).output
                assert out <= subset
                assert fast.m_h.is_independent(out)
                for e in subset - out:
                    assert any(e in c and c <= subset and
                               all(fast.order_h.weakly_prefers(f, e) for f in c)
                               for c in circuits)


# --- solve ------------------------------------------------------------------

def test_solve_empty_instance():
    outcome = solve(EMPTY)
    assert outcome.found and outcome.solution == frozenset() and outcome.k == 0


def test_solve_all_tied_smti():
    outcome = solve(ALL_TIED)
    assert not outcome.found
    assert outcome.reason == "augmentable_from_R"
    assert outcome.rejected == {0, 1, 2, 3} and outcome.augmenting_element == 0


def test_solve_strict_smti():
    outcome = solve(STRICT)
    assert outcome.found and outcome.solution == {0, 3}
    assert is_super_stable(STRICT, outcome.solution)


def test_augmentable_reason_reports_element():
    for inst in corpus(150, 8, seed=15):
        outcome = solve(inst)
        if outcome.reason == "augmentable_from_R":
            e = outcome.augmenting_element
            assert e in outcome.rejected
            assert inst.m_h.is_independent(outcome.rounds[-1].kept | {e})


def test_trace_invariants_and_bounds():
    for inst in corpus(150, 8, seed=12):
        outcome = solve(inst, debug=True)
        history = outcome.rejected_history()
        assert all(a <= b for a, b in zip(history, history[1:]))
        # every round that does not end the run rejects something new
        assert all(a < b for a, b in zip(history[:-1], history[1:-1]))
        bound = inst.size + 1
        assert outcome.k <= bound
        assert max(outcome.choice_iterations, default=0) <= bound
        assert max(outcome.repair_iterations, default=0) <= bound
        if outcome.found:
            assert not outcome.solution & outcome.rejected
        for rnd in outcome.rounds:
            for step in rnd.repairs:
                assert not step.kept & step.rejected
        assert outcome.oracle_calls > 0 or inst.size == 0


def test_solver_agrees_with_brute_force():
    for inst in corpus(150, 8, seed=13):
        outcome = solve(inst)
        stable = brute_force_all(inst)
        assert outcome.found == bool(stable)
        if outcome.found:
            assert is_super_stable(inst, outcome.solution)
            assert outcome.solution in stable
        assert all(not s & outcome.rejected for s in stable)


def test_verdict_is_order_robust():
    rng = random.Random(5)
    for inst in corpus(120, 8, seed=14):
        base = solve(inst)
        for _ in range(3):
            order = list(range(inst.size))
            rng.shuffle(order)
            other = solve(inst, order=order)
            assert other.found == base.found
            if other.found:
                assert is_super_stable(inst, other.solution)


def test_bad_order_rejected():
    with pytest.raises(ValueError):
        solve(STRICT, order=[0, 1, 2])


def test_loop_bound_breach_aborts(monkeypatch):
    calls = {"n": 0}

    def flapping_ch_d(inst, subset):
        calls["n"] += 1
        return ChDTrace([], frozenset({calls["n"] % 2}))

    monkeypatch.setattr(solver_module, "ch_d", flapping_ch_d)
    monkeypatch.setattr(solver_module, "ch_h",
                        lambda inst, subset, order=None: ChHTrace([], frozenset(subset)))
    with pytest.raises(InvariantError):
        solve(two_element(K2, K2, (0, 0), (0, 0)))


def test_outcome_serializes():
    outcome = solve(STRICT)
    data = json.loads(json.dumps(outcome.to_dict(trace=True)))
    assert data["verdict"] == "found" and data["set"] == [0, 3]
    assert set(data["counters"]) == {"k", "i_t", "j_t"}
    assert data["counters"]["k"] == outcome.k
    assert isinstance(data["oracleCalls"], int)
    phases = {r["phase"] for r in data["trace"]}
    assert "round" in phases and "choice" in phases
    assert trace_records(outcome) == data["trace"]
