"""The fixed gallery of 4-chromatic target graphs and their weightings.

The twelve-graph scan sequence is, in order:

    K4, W5, W7, C7bar, W9, H2plus, W11, H2, W13, T0, W15, H1plusplus

plus the Petersen graph as an extra named construction. The non-wheel
members all live on a 7-cycle v0..v6 (vertices 0..6, extra vertices after):

* ``C7bar``  -- the 7-cycle plus all seven distance-2 chords. As a labelled
  graph this is the square of the cycle; it is isomorphic to the complement.
* ``H2``     -- C7bar minus the chord {1, 6} (13 edges).
* ``H2plus`` -- H2 plus vertex 7 adjacent to {0, 2, 5}.
* ``T0``     -- the 7-cycle, vertex 7 adjacent to every cycle vertex but 1,
  vertex 8 adjacent to every cycle vertex but 6, and vertex 9 adjacent to
  {0, 7, 8}.
* ``H1plusplus`` -- the 7-cycle with chords {3,5}, {5,0}, {0,2}, {2,4},
  {6,1}, plus vertex 7 adjacent to {0, 2, 3} and vertex 8 adjacent to
  {0, 3, 5}.

Each graph is checked on first construction: the scan members must be
4-chromatic, and the four stored weightings must blow up to the exact
(min degree, order) pairs (5, 9), (6, 11), (7, 13), (8, 15). Any slip in
an edge list fails loudly here rather than corrupting results downstream.
"""

from __future__ import annotations

from .errors import InvalidParameterError, UnsupportedError
from .graphs import Graph, Weighting, blow_up, complete, degree_profile, petersen, wheel
from .hom import chromatic_number

SEQUENCE = (
    "K4",
    "W5",
    "W7",
    "C7bar",
    "W9",
    "H2plus",
    "W11",
    "H2",
    "W13",
    "T0",
    "W15",
    "H1plusplus",
)
TAGS = SEQUENCE + ("Petersen",)
WEIGHTED_TAGS = ("H2plus", "H2", "T0", "H1plusplus")

_CYCLE7 = [(v, (v + 1) % 7) for v in range(7)]
_H2_CHORDS = [(1, 3), (3, 5), (5, 0), (0, 2), (2, 4), (4, 6)]


def _build_c7bar() -> Graph:
    chords = [(v, (v + 2) % 7) for v in range(7)]
    return Graph.from_edges(7, _CYCLE7 + chords)


def _build_h2() -> Graph:
    return Graph.from_edges(7, _CYCLE7 + _H2_CHORDS)


def _build_h2plus() -> Graph:
    extra = [(7, 0), (7, 2), (7, 5)]
    return Graph.from_edges(8, _CYCLE7 + _H2_CHORDS + extra)


def _build_t0() -> Graph:
    near1 = [(7, v) for v in range(7) if v != 1]
    near6 = [(8, v) for v in range(7) if v != 6]
    low = [(9, 0), (9, 7), (9, 8)]
    return Graph.from_edges(10, _CYCLE7 + near1 + near6 + low)


def _build_h1plusplus() -> Graph:
    chords = [(3, 5), (5, 0), (0, 2), (2, 4), (6, 1)]
    extra = [(7, 0), (7, 2), (7, 3), (8, 0), (8, 5), (8, 3)]
    return Graph.from_edges(9, _CYCLE7 + chords + extra)


_BUILDERS = {
    "K4": lambda: complete(4),
    "W5": lambda: wheel(5),
    "W7": lambda: wheel(7),
    "C7bar": _build_c7bar,
    "W9": lambda: wheel(9),
    "H2plus": _build_h2plus,
    "W11": lambda: wheel(11),
    "H2": _build_h2,
    "W13": lambda: wheel(13),
    "T0": _build_t0,
    "W15": lambda: wheel(15),
    "H1plusplus": _build_h1plusplus,
    "Petersen": petersen,
}

# Weights indexed by gallery vertex number; see the layouts above.
_WEIGHTS = {
    "H2plus": (2, 0, 2, 1, 1, 2, 0, 1),
    "H2": (3, 1, 2, 1, 1, 2, 1),
    "T0": (4, 0, 0, 1, 1, 0, 0, 3, 3, 1),
    "H1plusplus": (5, 0, 3, 2, 0, 3, 0, 1, 1),
}

_EXPECTED_RATIO = {
    "H2plus": (5, 9),
    "H2": (6, 11),
    "T0": (7, 13),
    "H1plusplus": (8, 15),
}

_graph_cache: dict[str, Graph] = {}
_weighting_cache: dict[str, Weighting] = {}

_CANONICAL = {tag.lower(): tag for tag in TAGS}
_CANONICAL.update({f"f{i}": tag for i, tag in enumerate(SEQUENCE, start=1)})


def canonical_tag(name: str) -> str:
    """Normalize a gallery name; F1..F12 are accepted as positional aliases."""
    tag = _CANONICAL.get(name.strip().lower())
    if tag is None:
        raise InvalidParameterError(f"unknown gallery graph {name!r}")
    return tag


def gallery_graph(name: str) -> Graph:
    tag = canonical_tag(name)
    if tag not in _graph_cache:
        g = _BUILDERS[tag]()
        if tag in SEQUENCE and chromatic_number(g) != 4:
            raise AssertionError(f"gallery transcription of {tag} is not 4-chromatic")
        _graph_cache[tag] = g
    return _graph_cache[tag]


def sequence_graph(index: int) -> Graph:
    """The index-th scan graph, 1-based over the twelve-member sequence."""
    if not 1 <= index <= len(SEQUENCE):
        raise InvalidParameterError(f"sequence index must be in 1..{len(SEQUENCE)}")
    return gallery_graph(SEQUENCE[index - 1])


def gallery_weighting(name: str) -> Weighting:
    """The stored extremal weighting for H2plus, H2, T0 or H1plusplus.

    These maximise the blow-up's minimum degree relative to its order;
    their exact (min degree, order) pairs are asserted on first build.
    """
    tag = canonical_tag(name)
    if tag not in _WEIGHTS:
        raise UnsupportedError(f"no stored weighting for gallery graph {tag}")
    if tag not in _weighting_cache:
        w = Weighting(gallery_graph(tag), _WEIGHTS[tag])
        blown = blow_up(w)
        profile = degree_profile(blown)
        if (profile.min_degree, blown.order) != _EXPECTED_RATIO[tag]:
            raise AssertionError(f"stored weighting for {tag} misses its degree ratio")
        _weighting_cache[tag] = w
    return _weighting_cache[tag]
