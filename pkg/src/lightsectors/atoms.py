"""Splitting verdicts and mixing-cluster combinatorics.

The sector package splits exactly when every off-diagonal interaction entry
vanishes.  On top of the binary verdict we report the mixing graph: nodes
are sectors, edges are nonzero off-diagonal entries, and the connected
components ("mixing clusters") are the groups of sectors that fail to split
apart.  The same classification applies verbatim to the block-level reduced
matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix
from .blocks import ReducedInteractionMatrix
from .transport import InteractionMatrix


@dataclass(frozen=True)
class AtomSplittingReport:
    """Splitting verdict plus mixing structure over r sectors (0-based indices).

    Invariant: is_split iff there are no mixing edges iff every cluster is
    a singleton.
    """

    r: int
    is_split: bool
    mixing_edges: tuple[tuple[int, int], ...]
    clusters: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        singletons = all(len(c) == 1 for c in self.clusters)
        if self.is_split != (not self.mixing_edges) or self.is_split != singletons:
            raise ValueError("splitting verdict inconsistent with mixing structure")


def _splitting_from_skew(entries: Matrix) -> AtomSplittingReport:
    r = entries.rows
    edges = tuple(
        (i, j)
        for i in range(r)
        for j in range(i + 1, r)
        if entries.entries[i][j] != 0
    )
    parent = list(range(r))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for k in range(r):
        groups.setdefault(find(k), []).append(k)
    clusters = tuple(tuple(groups[root]) for root in sorted(groups))
    return AtomSplittingReport(r, not edges, edges, clusters)


def atom_splitting(lam: InteractionMatrix) -> AtomSplittingReport:
    """Classify the nodewise package: split iff all off-diagonal entries vanish."""
    return _splitting_from_skew(lam.entries)


def blockwise_atom_splitting(lam_blk: ReducedInteractionMatrix) -> AtomSplittingReport:
    """Same classification applied to the surviving block sectors."""
    return _splitting_from_skew(lam_blk.entries)
