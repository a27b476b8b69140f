import numpy as np
import pytest

from fofsem.generators import (
    GeneratorSpec,
    InvalidSpecError,
    generate,
    generate_ba,
    generate_er,
    generate_ws,
)


class TestErdosRenyi:
    def test_p0_empty(self):
        g = generate_er(10, 0.0, 1)
        assert (g.vertex_count, g.edge_count) == (10, 0)

    def test_p1_complete(self):
        g = generate_er(10, 1.0, 1)
        assert g.edge_count == 45
        g.validate()

    def test_mean_edge_count_matches_binomial_expectation(self):
        # oracle: E[edges] = C(100,2) * 0.1 = 495
        counts = [generate_er(100, 0.1, seed).edge_count for seed in range(1000)]
        assert abs(np.mean(counts) - 495) < 15

    def test_density_within_three_standard_errors(self):
        n, p, trials = 60, 0.25, 1000
        pairs = n * (n - 1) // 2
        dens = [generate_er(n, p, s).edge_count / pairs for s in range(trials)]
        se = np.sqrt(p * (1 - p) / pairs / trials)
        assert abs(np.mean(dens) - p) < 3 * se


class TestBarabasiAlbert:
    def test_m1_is_tree(self):
        for power in (0.0, 1.0, 2.5):
            g = generate_ba(50, power, 1, 9)
            assert g.edge_count == 49
            g.validate()
            # connected: BFS from 0 reaches everything
            seen = {0}
            stack = [0]
            while stack:
                for w in g.neighbors(stack.pop()):
                    if int(w) not in seen:
                        seen.add(int(w))
                        stack.append(int(w))
            assert len(seen) == 50

    def test_n2(self):
        g = generate_ba(2, 1.0, 1, 0)
        assert g.edge_count == 1
        assert list(g.neighbors(0)) == [1]

    def test_m_exceeding_vertices_attaches_to_all(self):
        g = generate_ba(4, 1.0, 3, 0)
        # vertex 1 attaches to {0}, vertex 2 to {0,1}, vertex 3 to all three
        assert g.degree(3) == 3
        assert g.edge_count == 1 + 2 + 3

    def test_power0_m1_uniform_attachment_expected_root_degree(self):
        # uniform random recursive tree: E[deg(0)] = sum_{j=1}^{n-1} 1/j
        n, trials = 20, 10000
        harmonic = sum(1.0 / j for j in range(1, n))
        degs = [generate_ba(n, 0.0, 1, s).degree(0) for s in range(trials)]
        assert abs(np.mean(degs) - harmonic) < 0.1


class TestWattsStrogatz:
    def test_p0_lattice_regular(self):
        g = generate_ws(10, 2, 0.0, 3)
        assert g.edge_count == 20
        assert all(g.degree(v) == 4 for v in range(10))

    def test_nei1_p0_is_cycle(self):
        g = generate_ws(10, 1, 0.0, 3)
        assert g.edge_count == 10
        assert all(g.degree(v) == 2 for v in range(10))

    def test_edge_count_preserved_under_rewiring(self):
        for seed in range(20):
            g = generate_ws(200, 5, 0.3, seed)
            assert g.edge_count == 1000
            g.validate()

    def test_infeasible_nei_rejected(self):
        with pytest.raises(InvalidSpecError):
            generate_ws(10, 5, 0.1, 0)


def test_determinism_bit_for_bit():
    specs = [
        GeneratorSpec("er", 50, p=0.3, seed=11),
        GeneratorSpec("ba", 50, power=1.5, m=2, seed=11),
        GeneratorSpec("ws", 50, p=0.4, nei=3, seed=11),
    ]
    for spec in specs:
        a, b = generate(spec), generate(spec)
        assert np.array_equal(a.indptr, b.indptr)
        assert np.array_equal(a.indices, b.indices)
        different = generate(GeneratorSpec(**{**spec.__dict__, "seed": 12}))
        assert a != different  # seed changes the stream


def test_all_outputs_satisfy_graph_invariants():
    rng = np.random.default_rng(0)
    for _ in range(30):
        n = int(rng.integers(5, 60))
        generate_er(n, float(rng.uniform(0, 1)), int(rng.integers(1 << 30))).validate()
        generate_ba(n, float(rng.uniform(0, 3)), int(rng.integers(1, 4)),
                    int(rng.integers(1 << 30))).validate()
        nei = int(rng.integers(1, max(2, (n - 1) // 2 + 1)))
        generate_ws(n, nei, float(rng.uniform(0, 1)), int(rng.integers(1 << 30))).validate()


def test_spec_validation():
    with pytest.raises(InvalidSpecError):
        GeneratorSpec("er", 10, p=1.5).validate()
    with pytest.raises(InvalidSpecError):
        GeneratorSpec("ba", 1).validate()
    with pytest.raises(InvalidSpecError):
        GeneratorSpec("ba", 10, power=-1).validate()
    with pytest.raises(InvalidSpecError):
        GeneratorSpec("xx", 10).validate()
