"""Exact minimum-degree stability thresholds.

For a graph ``h`` with chromatic number r + 1 >= 3 the threshold is the
least minimum-degree ratio above which every graph avoiding ``h`` is within
a vanishing edge fraction of r-partite. The classification is driven
entirely by homomorphism scans:

* r = 2: find the least g with no homomorphism into the odd cycle of
  length 2g + 1; the threshold is exactly 2/(2g + 1).
* r >= 3: scan the twelve-member gallery sequence joined with a clique on
  r - 3 vertices, in table order and without assuming monotonicity. If
  index j is the least failure the threshold is exactly
  1 - 1/(r - 1 + C(j - 1)) with C drawn from the constant table. If all
  twelve pass, scan joins of a clique on r - 2 vertices with growing odd
  cycles; the least failure g gives the rigorous interval
  1 - 1/(r - 1 + 2/(2g - 1)) <= value <= 1 - 1/(r - 1 + 1/7).

All thresholds are exact rationals end to end; floats appear only in
display code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidParameterError,
    ParseError,
    UndefinedThresholdError,
    WrongBranchError,
)
from .gallery import SEQUENCE, sequence_graph
from .graphs import Graph, complete, cycle, join, odd_girth
from .hom import HomWitness, chromatic_number, homomorphism_search

__all__ = [
    "CONSTANT_TABLE",
    "threshold_constant",
    "degree_threshold",
    "cycle_join_threshold",
    "interval_upper",
    "CertificateEntry",
    "ScanResult",
    "DeltaResult",
    "scan_odd_cycles",
    "scan_gallery_joins",
    "scan_cycle_joins",
    "classify",
]

CONSTANT_TABLE: dict[int, Fraction] = {
    1: Fraction(2, 3),
    2: Fraction(2, 5),
    3: Fraction(1, 3),
    4: Fraction(2, 7),
    5: Fraction(1, 4),
    6: Fraction(2, 9),
    7: Fraction(1, 5),
    8: Fraction(2, 11),
    9: Fraction(1, 6),
    10: Fraction(2, 13),
    11: Fraction(1, 7),
}


def threshold_constant(index: int) -> Fraction:
    """Table constant for scan index 1..11."""
    if index not in CONSTANT_TABLE:
        raise InvalidParameterError("constant table index must be in 1..11")
    return CONSTANT_TABLE[index]


def degree_threshold(r: int, index: int) -> Fraction:
    """The exact threshold 1 - 1/(r - 1 + C(index)) for r >= 3."""
    if r < 3:
        raise InvalidParameterError("r must be at least 3")
    return 1 - 1 / (r - 1 + threshold_constant(index))


def cycle_join_threshold(r: int, g: int) -> Fraction:
    """Degree ratio of the regular clique-plus-odd-cycle witness family.

    Equals 1 - 1/(r - 1 + 2/(2g - 1)); this is also the interval branch's
    lower bound at failure index g.
    """
    if r < 3:
        raise InvalidParameterError("r must be at least 3")
    if g < 1:
        raise InvalidParameterError("g must be at least 1")
    return 1 - 1 / (r - 1 + Fraction(2, 2 * g - 1))


def interval_upper(r: int) -> Fraction:
    # Fixed at the last table constant, 1/7; the scan has no thirteenth entry.
    if r < 3:
        raise InvalidParameterError("r must be at least 3")
    return 1 - 1 / (r - 1 + Fraction(1, 7))


@dataclass(frozen=True)
class CertificateEntry:
    """One passing homomorphism from a scan, with enough data to rebuild
    the target: kind is "odd-cycle", "gallery-join" or "cycle-join"."""

    kind: str
    index: int
    witness: HomWitness

    def target(self, r: int) -> Graph:
        if self.kind == "odd-cycle":
            return cycle(2 * self.index + 1)
        if self.kind == "gallery-join":
            return join(complete(r - 3), sequence_graph(self.index))
        if self.kind == "cycle-join":
            return join(complete(r - 2), cycle(2 * self.index + 1))
        raise InvalidParameterError(f"unknown certificate kind {self.kind!r}")


@dataclass(frozen=True)
class ScanResult:
    """Outcome of one scan: the least failing index (None if every target
    admitted a homomorphism), witnesses for all passes before the failure,
    and the total backtracking nodes expended."""

    index: int | None
    certificate: tuple[CertificateEntry, ...]
    nodes_expanded: int


def scan_odd_cycles(h: Graph) -> ScanResult:
    """Least g >= 1 with no homomorphism h -> C(2g+1). Needs chi(h) = 3.

    Terminates because a homomorphism into a (2g+1)-cycle forces every odd
    cycle of h to have length at least 2g + 1.
    """
    if chromatic_number(h) != 3:
        raise WrongBranchError("odd-cycle scan requires a 3-chromatic graph")
    bound = odd_girth(h)
    assert bound is not None
    entries = []
    nodes = 0
    g = 1
    while True:
        witness, n = homomorphism_search(h, cycle(2 * g + 1))
        nodes += n
        if witness is None:
            return ScanResult(g, tuple(entries), nodes)
        entries.append(CertificateEntry("odd-cycle", g, witness))
        g += 1
        if 2 * g + 1 > bound + 2:
            raise AssertionError("odd-cycle scan ran past its girth bound")


def scan_gallery_joins(h: Graph, r: int) -> ScanResult:
    """Least sequence index j with no homomorphism into the join of a
    clique on r - 3 vertices with the j-th gallery graph, scanning all
    twelve in order (the sequence is not homomorphism-monotone). Returns
    index None if every join admits one. Needs chi(h) = r + 1.
    """
    if r < 3:
        raise InvalidParameterError("r must be at least 3")
    if chromatic_number(h) != r + 1:
        raise WrongBranchError(f"gallery scan with r={r} requires chromatic number {r + 1}")
    head = complete(r - 3)
    entries = []
    nodes = 0
    for j in range(1, len(SEQUENCE) + 1):
        witness, n = homomorphism_search(h, join(head, sequence_graph(j)))
        nodes += n
        if witness is None:
            return ScanResult(j, tuple(entries), nodes)
        entries.append(CertificateEntry("gallery-join", j, witness))
    return ScanResult(None, tuple(entries), nodes)


def scan_cycle_joins(h: Graph, r: int) -> ScanResult:
    """Least g with no homomorphism into the join of a clique on r - 2
    vertices with the (2g+1)-cycle. Needs chi(h) = r + 1.

    Terminates: a homomorphic image would pull an odd cycle of length at
    least 2g + 1 out of h, so g cannot pass beyond |h|/2.
    """
    if r < 3:
        raise InvalidParameterError("r must be at least 3")
    if chromatic_number(h) != r + 1:
        raise WrongBranchError(f"cycle-join scan with r={r} requires chromatic number {r + 1}")
    head = complete(r - 2)
    entries = []
    nodes = 0
    g = 1
    while True:
        witness, n = homomorphism_search(h, join(head, cycle(2 * g + 1)))
        nodes += n
        if witness is None:
            return ScanResult(g, tuple(entries), nodes)
        entries.append(CertificateEntry("cycle-join", g, witness))
        g += 1
        if 2 * g + 1 > h.order + 2:
            raise AssertionError("cycle-join scan ran past its termination bound")


@dataclass(frozen=True)
class DeltaResult:
    """The classified threshold.

    branch is "odd-cycle" (exact, r = 2), "gallery" (exact, r >= 3) or
    "interval" (rigorous bounds only). index is the least failing scan
    index (g for the cycle scans, j for the gallery scan). Exactly one of
    value or (lower, upper) is populated. certificate holds witnesses for
    every index that passed before the failure.
    """

    r: int
    branch: str
    index: int
    value: Fraction | None
    lower: Fraction | None
    upper: Fraction | None
    certificate: tuple[CertificateEntry, ...]
    nodes_expanded: int

    def describe(self) -> str:
        if self.branch == "interval":
            return (
                f"{self.lower}..{self.upper} ({float(self.lower):g}..{float(self.upper):g}) "
                f"[interval branch, g={self.index}]"
            )
        label = "g" if self.branch == "odd-cycle" else "j"
        return (
            f"{self.value} ({float(self.value):g}) "
            f"[{self.branch} branch, {label}={self.index}]"
        )

    def to_json(self) -> dict:
        def frac(x: Fraction | None):
            return None if x is None else {"den": x.denominator, "num": x.numerator}

        return {
            "branch": self.branch,
            "certificate": [
                {"index": e.index, "kind": e.kind, "mapping": list(e.witness.mapping)}
                for e in self.certificate
            ],
            "index": self.index,
            "lower": frac(self.lower),
            "nodes_expanded": self.nodes_expanded,
            "r": self.r,
            "upper": frac(self.upper),
            "value": frac(self.value),
        }

    @classmethod
    def from_json(cls, data: dict) -> "DeltaResult":
        def frac(obj):
            return None if obj is None else Fraction(obj["num"], obj["den"])

        try:
            return cls(
                r=data["r"],
                branch=data["branch"],
                index=data["index"],
                value=frac(data["value"]),
                lower=frac(data["lower"]),
                upper=frac(data["upper"]),
                certificate=tuple(
                    CertificateEntry(e["kind"], e["index"], HomWitness(tuple(e["mapping"])))
                    for e in data["certificate"]
                ),
                nodes_expanded=data["nodes_expanded"],
            )
        except (KeyError, TypeError) as e:
            raise ParseError(f"malformed threshold result: {e}") from None

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def loads(cls, text: str) -> "DeltaResult":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", e.pos) from None
        return cls.from_json(data)

    def validate(self, h: Graph) -> bool:
        """Recheck the stored certificate and threshold arithmetic against h."""
        try:
            if chromatic_number(h) != self.r + 1:
                return False
            for entry in self.certificate:
                if not entry.witness.is_valid(h, entry.target(self.r)):
                    return False
            if self.branch == "odd-cycle":
                return self.r == 2 and self.value == Fraction(2, 2 * self.index + 1)
            if self.branch == "gallery":
                return self.value == degree_threshold(self.r, self.index - 1)
            if self.branch == "interval":
                return (
                    self.lower == cycle_join_threshold(self.r, self.index)
                    and self.upper == interval_upper(self.r)
                )
        except InvalidParameterError:
            return False
        return False


def classify(h: Graph) -> DeltaResult:
    """Compute the stability threshold of h, exactly or as an interval.

    Raises UndefinedThresholdError for graphs of chromatic number below 3.
    """
    chi = chromatic_number(h)
    if chi < 3:
        raise UndefinedThresholdError(
            "the threshold is defined only for chromatic number at least 3"
        )
    r = chi - 1
    if r == 2:
        scan = scan_odd_cycles(h)
        assert scan.index is not None
        return DeltaResult(
            r=2,
            branch="odd-cycle",
            index=scan.index,
            value=Fraction(2, 2 * scan.index + 1),
            lower=None,
            upper=None,
            certificate=scan.certificate,
            nodes_expanded=scan.nodes_expanded,
        )
    scan = scan_gallery_joins(h, r)
    if scan.index is not None:
        return DeltaResult(
            r=r,
            branch="gallery",
            index=scan.index,
            value=degree_threshold(r, scan.index - 1),
            lower=None,
            upper=None,
            certificate=scan.certificate,
            nodes_expanded=scan.nodes_expanded,
        )
    tail = scan_cycle_joins(h, r)
    assert tail.index is not None
    return DeltaResult(
        r=r,
        branch="interval",
        index=tail.index,
        value=None,
        lower=cycle_join_threshold(r, tail.index),
        upper=interval_upper(r),
        certificate=scan.certificate + tail.certificate,
        nodes_expanded=scan.nodes_expanded + tail.nodes_expanded,
    )
