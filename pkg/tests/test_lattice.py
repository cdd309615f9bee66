import itertools
from collections import Counter

import numpy as np
import pytest

from loewner_lab import (
    Color,
    NavigatorVariant,
    WalkMode,
)
from loewner_lab.lattice import (
    HexDomain,
    LatticeWalk,
    SquareDomain,
    altitude_lengths,
    enumerate_lerw,
    explore,
    lerw_domain,
    lerw_halfplane,
    lerw_reflecting,
    loop_erase,
    navigator_interface,
    path_distribution,
    percolation_interface,
    pivot_chain,
    saw_pivot,
    step_counts,
    straight_walk,
    triangle_crossing,
)
from loewner_lab.estimators import fit_dimension
from loewner_lab.lattice.hexagonal import ahead
from loewner_lab.rng import substream

SMALL = HexDomain.from_cells({(0, 0), (1, 0), (0, 1)})


def total_variation(law, counts):
    n = sum(counts.values())
    keys = set(law) | set(counts)
    return 0.5 * sum(abs(law.get(k, 0.0) - counts.get(k, 0) / n) for k in keys)


def test_loop_erase_months():
    assert "".join(loop_erase("jfmamjjasond")) == "jasond"
    assert loop_erase("jasond") == list("jasond")
    assert loop_erase([1, 2, 1, 3, 3, 2]) == [1, 3, 2]


def test_loop_erase_is_idempotent():
    rng = np.random.default_rng(0)
    seq = rng.integers(0, 6, 200).tolist()
    once = loop_erase(seq)
    assert loop_erase(once) == once
    assert len(set(once)) == len(once)
    assert once[0] == seq[0] and once[-1] == seq[-1]


def test_loop_erase_rejects_empty_input():
    with pytest.raises(ValueError):
        loop_erase([])


def test_lattice_walk_validation():
    with pytest.raises(ValueError):
        LatticeWalk([[0, 0], [1, 1]])
    with pytest.raises(ValueError):
        LatticeWalk(np.empty((0, 2)))
    walk = straight_walk(5)
    assert walk.length == 5
    assert walk.end_to_end == 5.0
    assert walk.is_self_avoiding()


def test_halfplane_lerw():
    walk = lerw_halfplane(20, 3)
    assert walk.mode is WalkMode.bessel3
    assert walk.is_self_avoiding()
    assert tuple(walk.sites[0]) == (0, 0)
    assert walk.sites[-1, 1] == 20
    assert walk.max_altitude == 20
    assert np.all(walk.sites[1:, 1] >= 1)


def test_reflecting_lerw():
    walk = lerw_reflecting(300, 4)
    assert walk.length == 300
    assert walk.is_self_avoiding()
    assert np.all(walk.sites[:, 1] >= 0)


def test_altitude_lengths():
    out = altitude_lengths([4, 8], 5, 1)
    assert set(out) == {4, 8}
    assert np.all(out[8] >= 8)


def test_square_domain_validation():
    with pytest.raises(ValueError):
        SquareDomain({(0, 0)}, (0, -1), (0, -1))
    with pytest.raises(ValueError):
        SquareDomain({(0, 0)}, (0, 0), (0, 1))
    with pytest.raises(ValueError):
        SquareDomain({(0, 0)}, (0, -1), (5, 5))


def test_domain_lerw_matches_its_exact_law():
    d = SquareDomain.rectangle(2, 2)
    law, lost = enumerate_lerw(d, 40)
    assert lost < 1e-9
    assert sum(law.values()) == pytest.approx(1.0)

    counts = Counter(lerw_domain(d, substream(2, i)).key for i in range(5000))
    assert total_variation(law, counts) < 0.05
    for key in counts:
        assert key[0] == d.a and key[-1] == d.b


def test_pivot_keeps_the_walk_self_avoiding():
    walk = straight_walk(30)
    for walk in pivot_chain(walk, 500, 6):
        assert walk.length == 30
        assert walk.is_self_avoiding()
        assert tuple(walk.sites[0]) == (0, 0)


def test_pivot_is_reproducible():
    a = saw_pivot(straight_walk(10), 5)
    b = saw_pivot(straight_walk(10), 5)
    assert a.key == b.key


@pytest.mark.slow
def test_pivot_chain_is_uniform_on_short_walks():
    counts = Counter(w.key for w in pivot_chain(straight_walk(3), 200_000, 1))
    # 36 self-avoiding walks of three steps
    assert len(counts) == 36
    law = dict.fromkeys(counts, 1 / 36)
    assert total_variation(law, counts) < 0.03


def test_hex_domain_validation():
    with pytest.raises(ValueError):
        HexDomain.strip(0, 4)
    with pytest.raises(ValueError):
        HexDomain.from_cells([])
    d = HexDomain.strip(4, 3)
    assert len(d.inner) == 12
    left, right = d.start
    assert left in d.black and right in d.white
    with pytest.raises(ValueError):
        HexDomain(d.inner, d.black, d.white, (right, left))


def test_exploration_follows_a_fixed_colouring():
    d = HexDomain.strip(3, 3)
    black = explore(d, dict.fromkeys(d.inner, Color.black))
    white = explore(d, dict.fromkeys(d.inner, Color.white))
    assert black.key != white.key
    for path in (black, white):
        assert path.vertices[0] == d.a
        assert path.length == len(path.vertices) - 1


def test_percolation_interface_edges_separate_colours():
    d = HexDomain.strip(8, 8)
    path = percolation_interface(d, 12)
    assert path.tosses <= len(d.inner)
    for left, right in path.edges:
        assert path.colors.get(left, d.boundary_color(left)) is Color.black
        assert path.colors.get(right, d.boundary_color(right)) is Color.white
    assert percolation_interface(d, 12).key == path.key


def test_exact_law_of_the_small_domain():
    law = path_distribution(SMALL)
    assert sum(law.values()) == pytest.approx(1.0)
    assert all(p > 0 for p in law.values())


def test_percolation_matches_its_exact_law():
    law = path_distribution(SMALL)
    counts = Counter(
        percolation_interface(SMALL, substream(9, i)).key
        for i in range(20_000)
    )
    assert total_variation(law, counts) < 0.03


@pytest.mark.parametrize("variant", list(NavigatorVariant))
def test_navigator_variants(variant):
    d = HexDomain.strip(6, 6)
    path = navigator_interface(d, 3, variant)
    assert path.vertices[0] == d.a
    assert path.tosses <= len(d.inner)
    assert navigator_interface(d, 3, variant).key == path.key


def test_step_counts():
    out = step_counts([3, 5], 4, 2)
    assert set(out) == {3, 5}
    assert out[5].shape == (4,)
    assert np.all(out[5] >= 5)


def test_triangle_crossing():
    assert all(triangle_crossing(16, 1.0, i) for i in range(5))
    with pytest.raises(ValueError):
        triangle_crossing(1, 0.5, 0)
    with pytest.raises(ValueError):
        triangle_crossing(16, 1.5, 0)


@pytest.mark.slow
def test_interface_after_its_first_step_lives_in_the_cut_domain():
    d = HexDomain.strip(3, 2)
    first = ahead(*d.start)
    assert first in d.inner
    rest = sorted(d.inner - {first})
    cut: Counter = Counter()
    for choice in itertools.product((Color.black, Color.white),
                                    repeat=len(rest)):
        coloring = dict(zip(rest, choice))
        coloring[first] = Color.black
        cut[explore(d, coloring).key] += 0.5 ** len(rest)

    counts = Counter()
    for i in range(40_000):
        path = percolation_interface(d, substream(19, i))
        if path.colors[first] is Color.black:
            counts[path.key] += 1
    assert sum(counts.values()) > 15_000
    assert total_variation(dict(cut), counts) < 0.03


@pytest.mark.slow
def test_self_avoiding_walk_end_to_end_exponent():
    samples = []
    for n in (25, 50, 100, 200):
        chain = pivot_chain(straight_walk(n), 25_000, n)
        kept = [
            w.end_to_end for k, w in enumerate(chain)
            if k >= 5_000 and k % 20 == 0
        ]
        samples.extend((n, r) for r in kept)
    assert fit_dimension(samples).exponent == pytest.approx(0.75, abs=0.05)
