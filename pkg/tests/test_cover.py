import random
from fractions import Fraction

import pytest

from gamedim.certificates import BalanceCertificate, CertificateError, CertifiedFamily
from gamedim.cover import (
    COUNCIL_DUALS,
    COUNCIL_MAXIMAL_PARTS,
    CoverSolution,
    DualWeightCertificate,
    Hypergraph,
    council_hypergraph,
    enumerate_maximal_independent,
    hypergraph_from_json,
    hypergraph_to_json,
    is_council_family,
    is_independent,
    lower_bound_dimension,
    min_cover,
    no_k_cover,
    verify_dual_certificate,
)
from gamedim.games import Coalition, IntersectionGame, WeightedGame

from helpers import brute_maximal_independent, random_hypergraph

TRIANGLE = Hypergraph(3, [(1, 2), (2, 3), (1, 3)])
SINGLE_EDGE = Hypergraph(2, [(1, 2)])
EDGELESS_3 = Hypergraph(3, [])


class TestHypergraph:
    def test_canonical_edge_order(self):
        h = Hypergraph(5, [(3, 1), (1, 2), (2, 3, 4)])
        assert h.edges == (
            frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3, 4})
        )

    def test_duplicate_edges_merged(self):
        h = Hypergraph(3, [(1, 2), (2, 1)])
        assert len(h.edges) == 1

    def test_small_edge_rejected(self):
        with pytest.raises(ValueError, match="fewer than two"):
            Hypergraph(3, [(1,)])

    def test_node_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            Hypergraph(3, [(1, 4)])

    def test_redundant_superset_edge_dropped_with_warning(self):
        with pytest.warns(UserWarning, match="redundant"):
            h = Hypergraph(4, [(1, 2), (1, 2, 3)])
        assert h.edges == (frozenset({1, 2}),)

    def test_council_family_is_an_antichain(self, council_h):
        # No warning fired and all 80 edges survive: no pair sits in a triple.
        assert len(council_h.edges) == 80
        assert is_council_family(council_h)
        assert set(council_h.edges) == set(council_hypergraph().edges)
        for triple in (e for e in council_h.edges if len(e) == 3):
            for a in triple:
                assert frozenset(triple - {a}) not in council_h.edges

    def test_council_edges_cover_all_nodes(self, council_h):
        assert frozenset().union(*council_h.edges) == council_h.nodes

    def test_json_round_trip(self, council_h):
        again = hypergraph_from_json(hypergraph_to_json(council_h))
        assert again == council_h

    def test_malformed_json_rejected(self):
        with pytest.raises(ValueError):
            hypergraph_from_json({"edges": [[1, 2]]})


class TestIndependence:
    def test_empty_set_is_independent(self, council_h):
        assert is_independent((), council_h)

    def test_edge_is_dependent(self, council_h):
        assert not is_independent({1, 5}, council_h)

    def test_bundled_part_is_independent(self, council_h):
        assert is_independent({1, 3, 6}, council_h)

    def test_out_of_range_node_rejected(self, council_h):
        with pytest.raises(ValueError, match="out of range"):
            is_independent({16}, council_h)


class TestEnumerateMaximal:
    def test_council_family_has_exactly_21(self, council_h):
        got = enumerate_maximal_independent(council_h)
        assert len(got) == 21
        assert frozenset({15}) in got
        assert frozenset({2, 12, 14}) in got
        assert set(got) == set(COUNCIL_MAXIMAL_PARTS)

    def test_single_edge(self):
        assert enumerate_maximal_independent(SINGLE_EDGE) == (
            frozenset({1}), frozenset({2})
        )

    def test_edgeless_graph(self):
        assert enumerate_maximal_independent(EDGELESS_3) == (frozenset({1, 2, 3}),)

    def test_resource_guard(self):
        with pytest.raises(ValueError, match="24 nodes"):
            enumerate_maximal_independent(Hypergraph(25, [(1, 2)]))

    def test_matches_naive_double_loop(self, council_h):
        assert list(enumerate_maximal_independent(council_h)) == \
            brute_maximal_independent(council_h)

    def test_matches_naive_double_loop_on_random_hypergraphs(self):
        rng = random.Random(17)
        for _ in range(40):
            h = random_hypergraph(rng, rng.randint(2, 9), rng.randint(0, 12))
            assert list(enumerate_maximal_independent(h)) == brute_maximal_independent(h)


class TestMinCover:
    def test_council_minimum_is_eight(self, council_h):
        solution = min_cover(council_h, COUNCIL_MAXIMAL_PARTS)
        assert solution.k == 8
        assert solution.verify(council_h)

    def test_single_candidate_covers_edgeless(self):
        solution = min_cover(EDGELESS_3, [{1, 2, 3}])
        assert solution.k == 1

    def test_triangle_needs_three(self):
        solution = min_cover(TRIANGLE, enumerate_maximal_independent(TRIANGLE))
        assert solution.k == 3

    def test_dependent_candidate_rejected(self, council_h):
        with pytest.raises(ValueError, match="contains an edge"):
            min_cover(council_h, [{1, 5}])

    def test_noncovering_candidates_rejected(self):
        with pytest.raises(ValueError, match="jointly cover"):
            min_cover(EDGELESS_3, [{1, 2}])

    def test_parts_are_independent(self, council_h):
        solution = min_cover(council_h, COUNCIL_MAXIMAL_PARTS)
        assert all(is_independent(p, council_h) for p in solution.parts)

    def test_shrinking_a_candidate_never_helps(self, council_h):
        # Swap each 3-node candidate for a 2-node subset; the optimum cannot drop.
        baseline = min_cover(council_h, COUNCIL_MAXIMAL_PARTS).k
        for target in [p for p in COUNCIL_MAXIMAL_PARTS if len(p) == 3][:3]:
            shrunk = [p if p != target else frozenset(sorted(target)[:2])
                      for p in COUNCIL_MAXIMAL_PARTS]
            assert min_cover(council_h, shrunk).k >= baseline

    def test_deterministic_witness(self, council_h):
        a = min_cover(council_h, COUNCIL_MAXIMAL_PARTS)
        b = min_cover(council_h, list(reversed(COUNCIL_MAXIMAL_PARTS)))
        assert a == b

    def test_random_hypergraph_covers_verify(self):
        rng = random.Random(23)
        for _ in range(25):
            h = random_hypergraph(rng, rng.randint(2, 8), rng.randint(0, 8))
            candidates = enumerate_maximal_independent(h)
            solution = min_cover(h, candidates)
            assert solution.verify(h)


class TestCoverSolution:
    def test_verify_rejects_missing_node(self, council_h):
        assert not CoverSolution([{1}]).verify(council_h)

    def test_verify_rejects_dependent_part(self, council_h):
        parts = [set(range(1, 16))]
        assert not CoverSolution(parts).verify(council_h)


class TestDualCertificates:
    def test_first_council_dual(self, council_h):
        cert = COUNCIL_DUALS[0]
        assert verify_dual_certificate(cert, council_h)
        assert cert.total == Fraction(15, 2)
        assert cert.total > 7

    def test_second_council_dual(self, council_h):
        cert = COUNCIL_DUALS[1]
        assert verify_dual_certificate(cert, council_h)
        assert cert.total == Fraction(19, 3)
        assert cert.total > 6
        assert cert.weight_of(cert.excluded_part) == 0

    def test_all_zero_weights_rejected(self):
        cert = DualWeightCertificate([0, 0], bound=1)
        assert not verify_dual_certificate(cert, SINGLE_EDGE)

    def test_negative_weight_raises(self, council_h):
        cert = DualWeightCertificate([-1] + [0] * 14, bound=1)
        with pytest.raises(ValueError, match="negative"):
            verify_dual_certificate(cert, council_h)

    def test_wrong_length_raises(self, council_h):
        with pytest.raises(ValueError, match="weights"):
            verify_dual_certificate(DualWeightCertificate([1], bound=1), council_h)

    def test_excluded_part_must_be_maximal(self, council_h):
        cert = DualWeightCertificate([1] * 15, bound=1, excluded_part=(1, 5))
        with pytest.raises(ValueError, match="maximal"):
            verify_dual_certificate(cert, council_h)

    def test_heavy_part_rejected_without_exclusion(self, council_h):
        weights = COUNCIL_DUALS[0].weights
        cert = DualWeightCertificate(weights, bound=7)  # {1,3,6} weighs 5/2
        assert not verify_dual_certificate(cert, council_h)

    def test_hand_built_duals_agree_with_search(self):
        # single edge: both singletons weigh 1, total 2 > 1, so no 1-cover
        cert = DualWeightCertificate([1, 1], bound=1)
        assert verify_dual_certificate(cert, SINGLE_EDGE)
        assert no_k_cover(SINGLE_EDGE, 1).refuted
        # triangle: three singleton parts of weight 1, total 3 > 2
        cert = DualWeightCertificate([1, 1, 1], bound=2)
        assert verify_dual_certificate(cert, TRIANGLE)
        assert no_k_cover(TRIANGLE, 2).refuted


class TestNoKCover:
    def test_council_seven_refuted_by_both_paths(self, council_h):
        refutation = no_k_cover(council_h, 7)
        assert refutation.refuted
        assert refutation.exhaustive
        assert len(refutation.duals) == 2

    def test_council_eight_has_counterexample(self, council_h):
        refutation = no_k_cover(council_h, 8)
        assert not refutation.refuted
        assert refutation.counterexample.k <= 8
        assert refutation.counterexample.verify(council_h)

    def test_council_six_refuted_without_duals(self, council_h):
        refutation = no_k_cover(council_h, 6)
        assert refutation.refuted and refutation.exhaustive
        assert refutation.duals == ()

    def test_edgeless_graph_counterexample(self):
        refutation = no_k_cover(EDGELESS_3, 1)
        assert not refutation.refuted
        assert refutation.counterexample.parts == (frozenset({1, 2, 3}),)

    def test_k_must_be_positive(self, council_h):
        with pytest.raises(ValueError):
            no_k_cover(council_h, 0)


def tiny_certified_family(game, losing_pair, winning_pair):
    cert = BalanceCertificate(losing=losing_pair, winning=winning_pair)
    return CertifiedFamily(
        nodes=tuple(losing_pair),
        hypergraph=Hypergraph(2, [(1, 2)]),
        certificates={frozenset({1, 2}): cert},
    )


class TestLowerBoundDimension:
    def test_council_bound_is_eight(self, eu_game, family):
        assert lower_bound_dimension(eu_game.game, family) == 8

    def test_single_edge_gives_two(self):
        game = IntersectionGame([
            WeightedGame(4, [1, 1, 0, 0], 1),
            WeightedGame(4, [0, 0, 1, 1], 1),
        ])
        family = tiny_certified_family(
            game,
            (Coalition.from_indices([1, 2], 4), Coalition.from_indices([3, 4], 4)),
            (Coalition.from_indices([1, 3], 4), Coalition.from_indices([2, 4], 4)),
        )
        assert lower_bound_dimension(game, family) == 2

    def test_uncertified_edge_rejected(self):
        game = WeightedGame(4, [1, 1, 1, 1], 3)
        # the "winning" pair below is losing, so verification must fail
        family = tiny_certified_family(
            game,
            (Coalition.from_indices([1, 2], 4), Coalition.from_indices([3, 4], 4)),
            (Coalition.from_indices([1, 3], 4), Coalition.from_indices([2, 4], 4)),
        )
        with pytest.raises(CertificateError):
            lower_bound_dimension(game, family)
