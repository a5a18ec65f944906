import itertools

from twosilt import (
    enumerate_2silt,
    enumerate_2silt_epsilon,
    epsilon_bounds,
    build_A_epsilon,
    source_sink_simplify,
    duality_transport,
    sigma_transport,
    normalize_epsilon,
    total_g_vector,
    sign_region_of,
    g_matrix,
    projective_stalks,
    shifted_stalks,
    sigma_permutation,
    borel_schur_algebra,
)


def all_epsilons(n):
    return [eps for eps in itertools.product((1, -1), repeat=n)]


def test_square_full_enumeration(square):
    graph, report = enumerate_2silt(square)
    assert report.complete
    assert len(graph.nodes) == 46


def test_bipartite_region(bipartite):
    graph, report = enumerate_2silt_epsilon(bipartite, "+,-,+,-")
    assert report.complete
    assert len(graph.nodes) == 14
    assert graph.tau_count() == 8


def test_normalize_epsilon_forms():
    assert normalize_epsilon("-,-,+", 3) == (-1, -1, 1)
    assert normalize_epsilon("[-+-]", 3) == (-1, 1, -1)
    assert normalize_epsilon([1, -1], 2) == (1, -1)


def test_degenerate_regions(linear3):
    plus, _ = epsilon_bounds(linear3, (1, 1, 1))
    assert g_matrix(plus) == g_matrix(projective_stalks(linear3))
    minus, _ = epsilon_bounds(linear3, (-1, -1, -1))
    assert g_matrix(minus) == g_matrix(shifted_stalks(linear3))


def test_region_partition(square, bipartite):
    """Every two-term silting complex lies in exactly one sign region,
    and per-region enumeration recovers the full count."""
    for A in (square, bipartite):
        graph, report = enumerate_2silt(A)
        assert report.complete
        buckets = {}
        for key in graph.nodes:
            total = total_g_vector(key)
            assert all(c != 0 for c in total)
            region = tuple(1 if c > 0 else -1 for c in total)
            buckets.setdefault(region, set()).add(key)
        covered = 0
        for eps in all_epsilons(A.n):
            g_eps, r_eps = enumerate_2silt_epsilon(A, eps)
            assert r_eps.complete
            assert set(g_eps.nodes) == buckets.get(eps, set())
            covered += len(g_eps.nodes)
        assert covered == len(graph.nodes)


def test_reduction_identity(square, bipartite, bs242):
    """The reduced algebra of a region has the same region, with the same
    total g-vectors."""
    for A in (square, bipartite, bs242):
        for eps in all_epsilons(A.n):
            g1, r1 = enumerate_2silt_epsilon(A, eps)
            reduced = build_A_epsilon(A, eps)
            g2, r2 = enumerate_2silt_epsilon(reduced, eps)
            assert r1.complete and r2.complete
            assert len(g1.nodes) == len(g2.nodes)
            assert ({total_g_vector(k) for k in g1.nodes}
                    == {total_g_vector(k) for k in g2.nodes})


def test_source_sink_simplification(bs242):
    rep = source_sink_simplify(bs242, "-,-,-,+,+")
    assert rep["predicted_ok"]
    # the source (vertex 4, minus would isolate it) keeps its sign plus
    # here; the sink 0 carries a minus, so neither is forced -- check a
    # sign vector that forces both
    rep2 = source_sink_simplify(bs242, "+,-,-,+,-")
    assert rep2["predicted_ok"]
    assert 0 in rep2["predicted_isolated"]
    assert 4 in rep2["predicted_isolated"]


def test_duality_small(square):
    for eps in all_epsilons(4):
        assert duality_transport(square, eps)["pass"]


def test_sigma_transport_bs242(bs242):
    perm = sigma_permutation(4)
    eps_prime, rec = sigma_transport(bs242, perm, "-,-,-,+,+")
    assert eps_prime == (-1, -1, 1, 1, 1)
    assert rec["pass"]


def test_sign_region_of(square):
    assert sign_region_of(projective_stalks(square)) == (1, 1, 1, 1)
    assert sign_region_of(shifted_stalks(square)) == (-1, -1, -1, -1)


def test_s26p5_disputed_region_count():
    # This tau count (117) disagrees with one published table entry (115).
    # It is pinned here because four independent computations agree on it:
    # region-pruned BFS, the same enumeration over the reduced algebra,
    # a full unpruned enumeration of all 8876 two-term silting complexes
    # partitioned by region, and a silting check on every node.
    A = borel_schur_algebra(6, 5)
    graph, report = enumerate_2silt_epsilon(A, "-,-,-,-,+,+,+")
    assert report.complete
    assert len(graph.nodes) == 186
    assert graph.tau_count() == 117
