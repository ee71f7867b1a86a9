import random

import pytest

import flagposet as fp
from flagposet.generate import RandomPosetSpec, random_graded_poset

BOTTOMS = ("x1", "x2", "x3")
TOPS = ("y1", "y2", "y3")
ALL_EDGES = [(b, t) for b in BOTTOMS for t in TOPS]


def corpus_poset(seed: int) -> fp.GradedPoset:
    """Deterministic corpus member: rank 2..4, at most 12 elements."""
    rng = random.Random(10_000 + seed)
    r = 2 + seed % 3
    total = rng.randint(max(r, 4), 12)
    widths = [1] * r
    for _ in range(total - r):
        widths[rng.randrange(r)] += 1
    q = (0.15, 0.3, 0.5, 0.75)[seed % 4]
    return random_graded_poset(RandomPosetSpec(tuple(widths), q, seed))


def sweep_edges(bits: int) -> list[tuple[str, str]]:
    return [e for k, e in enumerate(ALL_EDGES) if (bits >> k) & 1]


def sweep_poset(bits: int, include_isolated: bool) -> fp.GradedPoset:
    edges = sweep_edges(bits)
    if include_isolated:
        bottom, top = BOTTOMS, TOPS
    else:
        bottom = tuple(b for b in BOTTOMS if any(e[0] == b for e in edges))
        top = tuple(t for t in TOPS if any(e[1] == t for e in edges))
    g = fp.rank_function(fp.bipartite_poset(bottom, top, edges))
    assert g is not None
    return g


def sweep_layer(bits: int) -> fp.BipartiteLayer:
    edges = sweep_edges(bits)
    bottom = tuple(b for b in BOTTOMS if any(e[0] == b for e in edges))
    top = tuple(t for t in TOPS if any(e[1] == t for e in edges))
    return fp.BipartiteLayer(bottom, top, frozenset(edges))


@pytest.fixture(scope="session")
def corpus_b():
    return [corpus_poset(seed) for seed in range(200)]


@pytest.fixture(scope="session")
def named_graded():
    """Bundled graded posets with interesting classifications."""
    out = {
        "3.4": fp.example_3_4(),
        "3.6": fp.example_3_6(),
        "4.9": fp.example_4_9(),
        "chain4": fp.chain(4),
        "antichain3": fp.antichain(3),
        "lp_2_v11": fp.letterplace_poset(2, fp.v_poset(1, 1)),
    }
    for r in (1, 2, 3):
        for t in (1, 2, 3):
            out[f"hom{r}{t}"] = fp.hom_rt_poset(r, t)
    return out
