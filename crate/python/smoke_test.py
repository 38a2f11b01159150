"""Smoke test for the pybbcount extension module.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`
or `pip install crates/python`, then run `python python/smoke_test.py`.
"""

import itertools

import pybbcount as bb


def worked_example():
    adjacency = {0: [0, 1, 2, 3], 1: [0, 1, 2], 2: [0, 1, 3], 3: [0, 2, 3]}
    return bb.SignedBipartiteGraph([(u, v, 1) for u, vs in adjacency.items() for v in vs])


def main():
    g = worked_example()
    assert (g.left_count, g.right_count, g.edge_count) == (4, 4, 13)
    assert g.to_canonical().startswith("4 4 13\n")
    assert [v for v, _ in g.neighbors("left", 0)] == [0, 3, 2, 1]
    for algo in bb.ALGORITHMS:
        assert bb.count(g, 3, 3, algo=algo)["count"] == 0
    report = bb.count(g, 3, 3, algo="bbvp")
    assert report["subsets"] == 3 and report["anchor_side"] == "left"

    k44 = bb.SignedBipartiteGraph([(u, v, 1) for u, v in itertools.product(range(4), repeat=2)])
    assert bb.count(k44, 3, 3)["count"] == 16
    assert bb.count_all_bruteforce(k44, 3, 3) == 16

    r = bb.SignedBipartiteGraph.generate(10, 11, density=0.6, p_pos=0.5, seed=5)
    again = bb.SignedBipartiteGraph.parse(r.to_canonical())
    assert again == r
    for p, q in itertools.product([2, 3, 4], repeat=2):
        expected = bb.count_balanced_bruteforce(r, p, q)
        counts = {a: bb.count(r, p, q, algo=a, threads=2)["count"] for a in ("baseline", "bbwc", "bbvp")}
        assert set(counts.values()) == {expected}, (p, q, counts, expected)
        assert bb.count(r.sign_flipped(), p, q)["count"] == expected
        assert bb.count(r.transposed(), q, p)["count"] == expected

    assert bb.is_balanced_pairwise([[1, 1, -1], [-1, -1, 1]])
    assert bb.is_balanced_rank1([[1, 1, -1], [-1, -1, 1]])
    assert not bb.is_balanced_rank1([[1, 1], [1, -1]])

    star = bb.SignedBipartiteGraph([(0, 0, 1), (1, 0, -1), (2, 0, 1)])
    assert bb.wedge_type(star, "left", 0, 0, [1, 2]) == "ds"

    rated = bb.SignedBipartiteGraph.parse("a x 5\nb x 3\n", format="ratings", pos_rule="epinions")
    assert rated.edges() == [(0, 0, 1), (1, 0, -1)]

    signed = bb.assign_random_signs([(i // 100, i % 100) for i in range(10_000)], 0.7, 1)
    share = signed.stats()["positive_edges"] / 10_000
    assert abs(share - 0.7) <= 0.02, share

    try:
        bb.count(g, 1, 3)
    except ValueError as e:
        assert "star" in str(e)
    else:
        raise AssertionError("p = 1 accepted")

    try:
        bb.SignedBipartiteGraph([(0, 0, 1), (0, 0, -1)])
    except ValueError:
        pass
    else:
        raise AssertionError("duplicate edge accepted")

    big = bb.SignedBipartiteGraph([(u, v, 1) for u, v in itertools.product(range(140), repeat=2)])
    try:
        bb.count(big, 2, 70)
    except bb.CountOverflowError:
        pass
    else:
        raise AssertionError("overflow not reported")

    print("pybbcount smoke test passed")


if __name__ == "__main__":
    main()
