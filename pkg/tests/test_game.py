"""Game construction, exact values, exports, minimality search."""

from fractions import Fraction

import pytest

from ksverify.catalog import builtin
from ksverify.cyclotomic import omega
from ksverify.game import (
    build_game,
    classical_value,
    classical_value_bruteforce,
    classical_value_twolevel,
    event_probability,
    exclusivity_adjacency,
    export_exclusivity_graph,
    minimal_distribution_search,
    pair_is_refutable,
    quantum_value_maxent,
    winning_events,
)
from ksverify.orthograph import max_independent_set, parse_dimacs_edges
from ksverify.rays import Basis, Ray

from oracles import best_strategy_pairs

W = omega()


def ray(*components):
    return Ray(components)


def paper_game():
    inst = builtin("new33")
    from ksverify.cli import _default_split

    alice_idx, bob_idx = _default_split(inst)
    assert len(alice_idx) == 5 and len(bob_idx) == 9
    return build_game(
        [inst.bases[i] for i in alice_idx], [inst.bases[j] for j in bob_idx]
    )


@pytest.fixture(scope="module")
def game45():
    return paper_game()


def test_context_classification(game45):
    kinds = {}
    for c in game45.contexts:
        kinds.setdefault(c.kind, []).append(c)
    assert len(game45.contexts) == 45
    assert len(kinds["shared-vector"]) == 9
    assert len(kinds["orthogonal-pair"]) == 36
    for c in kinds["shared-vector"]:
        assert len(c.shared_pairs) == 1
        assert c.wins() == 5
    for c in kinds["orthogonal-pair"]:
        assert len(c.orthogonal_pairs) == 1
        assert c.wins() == 8


def test_total_winning_events(game45):
    assert game45.total_winning_events() == 333
    assert len(winning_events(game45)) == 333


def test_classical_value_is_44_45(game45):
    value = classical_value(game45)
    assert value.classical == Fraction(44, 45)
    assert classical_value_twolevel(game45) == Fraction(44, 45)


def test_quantum_value_is_exactly_one(game45):
    assert quantum_value_maxent(game45) == Fraction(1)


def test_losing_events_have_probability_zero(game45):
    for c in game45.contexts:
        for a in range(3):
            for b in range(3):
                if not (c.win_mask >> (3 * a + b) & 1):
                    p = event_probability(
                        game45.alice_bases[c.x][a], game45.bob_bases[c.y][b]
                    )
                    assert p.is_zero()


def test_winning_context_probability_adds_to_input_weight(game45):
    # in the perfect game every context's winning events carry all the weight
    for c in game45.contexts:
        total = sum(
            (
                event_probability(
                    game45.alice_bases[c.x][a], game45.bob_bases[c.y][b]
                ).as_fraction()
                for a in range(3)
                for b in range(3)
                if c.win_mask >> (3 * a + b) & 1
            ),
            Fraction(0),
        )
        assert total == 1


def test_win_tags_invariant_under_rescaling(game45):
    scaled_alice = [
        Basis(tuple(r.scaled(-2 * W) for r in basis)) for basis in game45.alice_bases
    ]
    scaled_bob = [
        Basis(tuple(r.scaled(W**2) for r in basis)) for basis in game45.bob_bases
    ]
    rebuilt = build_game(scaled_alice, scaled_bob)
    for c1, c2 in zip(game45.contexts, rebuilt.contexts):
        assert c1.win_mask == c2.win_mask


def test_identical_single_basis_game():
    basis = builtin("new33").bases[0]
    g = build_game([basis], [basis])
    assert g.contexts[0].kind == "shared-vector"
    assert classical_value(g).classical == 1
    assert quantum_value_maxent(g) == 1


def test_two_disjoint_nonorthogonal_bases():
    b1 = Basis((ray(1, 1, 1), ray(1, W, W**2), ray(W**2, W, 1)))
    b2 = Basis((ray(1, 1, -1), ray(1, W, -(W**2)), ray(W**2, W, -1)))
    g = build_game([b1], [b2])
    c = g.contexts[0]
    assert c.kind == "free"
    assert c.wins() == 9
    assert classical_value(g).classical == 1


def test_exclusivity_alpha_matches_bruteforce_on_small_games():
    inst = builtin("new33")
    cases = [
        ([0, 1], [5, 6]),
        ([0, 10], [1, 2, 3]),
        ([2, 3, 4], [0, 1, 11]),
        ([0, 1, 2, 3], [10, 11, 12, 13]),
    ]
    for ax, bx in cases:
        g = build_game([inst.bases[i] for i in ax], [inst.bases[j] for j in bx])
        via_alpha = classical_value(g).classical
        best = best_strategy_pairs(g)
        assert via_alpha == Fraction(best, g.n_contexts())
        assert classical_value_twolevel(g) == via_alpha
        assert classical_value_bruteforce(g) == via_alpha


def test_exclusivity_graph_export_roundtrip(tmp_path, game45):
    path = tmp_path / "excl.dimacs"
    legend = tmp_path / "excl.legend"
    export_exclusivity_graph(game45, str(path), str(legend))
    text = path.read_text()
    assert text.startswith("p edge 333 ")
    adj = parse_dimacs_edges(text)
    alpha, _ = max_independent_set(adj)
    assert alpha == 44
    legend_lines = legend.read_text().splitlines()
    assert legend_lines[0] == "index x y a b"
    assert len(legend_lines) == 334


def test_exclusivity_edges_are_strategy_conflicts(game45):
    events = winning_events(game45)
    adj = exclusivity_adjacency(events)
    for i in range(0, len(events), 37):
        for j in range(i + 1, min(i + 40, len(events))):
            xi, yi, ai, bi = events[i]
            xj, yj, aj, bj = events[j]
            conflict = (xi == xj and ai != aj) or (yi == yj and bi != bj)
            assert bool(adj[i] >> j & 1) == conflict


def test_minimal_distribution_for_new33():
    inst = builtin("new33")
    result = minimal_distribution_search(inst)
    assert result.complete
    assert result.product == 45
    assert result.split() == "5-9"
    assert pair_is_refutable(inst, result.alice_bases, result.bob_bases)


def test_minimal_search_deterministic():
    inst = builtin("new33")
    a = minimal_distribution_search(inst)
    b = minimal_distribution_search(inst)
    assert (a.product, a.alice_bases, a.bob_bases) == (
        b.product, b.alice_bases, b.bob_bases)


def test_no_smaller_product_is_refutable():
    """Spot-check monotonicity and the 45 floor on a few subset pairs."""
    inst = builtin("new33")
    # the paper split minus any single Bob basis becomes winnable
    result = minimal_distribution_search(inst)
    X = list(result.alice_bases)
    Y = list(result.bob_bases)
    for drop in range(3):
        assert not pair_is_refutable(inst, X, Y[:drop] + Y[drop + 1:])
    for drop in range(3):
        assert not pair_is_refutable(inst, X[:drop] + X[drop + 1:], Y)
    # supersets stay refutable
    extra = [i for i in range(14) if i not in Y][0]
    assert pair_is_refutable(inst, X, Y + [extra])


def test_single_basis_has_no_refutable_split():
    from ksverify.colorability import KSInstance

    inst = KSInstance("single", [ray(0, 0, 1), ray(0, 1, 0), ray(1, 0, 0)])
    result = minimal_distribution_search(inst)
    assert result.complete
    assert result.product is None


def test_budget_flag_reports_incomplete():
    inst = builtin("new33")
    result = minimal_distribution_search(inst, budget_seconds=0.0)
    assert not result.complete
