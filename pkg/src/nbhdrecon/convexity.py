"""Digital convexity: membership tests, full enumeration, complement bridge.

A vertex set S is digitally convex when every outside vertex v keeps a
private neighbor, i.e. some x in N[v] that N[S] does not reach.  Membership
is checked straight from that definition; the enumeration sweeps all 2^n
subsets.  Complementation connects the convex sets to the family of
neighborhood unions, and that bridge is what the reconstruction code uses,
so the definition-based functions here stay independent of the family
algebra and can cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError, ResourceLimitError
from .families import SetFamily
from .graphs import Graph, VertexSet, mask_members

#: The enumeration is a 2^n sweep; past this it is out of desk scale.
CONVEXITY_ENUMERATION_CEILING = 20


def is_digitally_convex(g: Graph, s: VertexSet) -> bool:
    """True iff every vertex outside ``s`` has a private neighbor."""
    if s.universe != g.n:
        raise InputError(f"universe mismatch: set on {s.universe}, graph on {g.n}")
    reach = g.closed_mask_of_set(s.bits)
    outside = ((1 << g.n) - 1) & ~s.bits
    for v in mask_members(outside):
        if g.closed_mask(v) & ~reach == 0:
            return False
    return True


@dataclass(frozen=True, slots=True)
class ConvexityWitness:
    """Outcome of a convexity check with certificates.

    When convex, ``private_neighbors`` maps each outside vertex to one
    private neighbor.  Otherwise ``violator`` is an outside vertex whose
    closed neighborhood is fully covered.
    """

    convex: bool
    private_neighbors: dict | None
    violator: int | None

    def __bool__(self) -> bool:
        return self.convex


def convexity_witness(g: Graph, s: VertexSet) -> ConvexityWitness:
    """Like :func:`is_digitally_convex`, but returns certificates."""
    if s.universe != g.n:
        raise InputError(f"universe mismatch: set on {s.universe}, graph on {g.n}")
    reach = g.closed_mask_of_set(s.bits)
    outside = ((1 << g.n) - 1) & ~s.bits
    private = {}
    for v in mask_members(outside):
        free = g.closed_mask(v) & ~reach
        if free == 0:
            return ConvexityWitness(False, None, v)
        private[v] = (free & -free).bit_length() - 1
    return ConvexityWitness(True, private, None)


def digital_convexity(g: Graph) -> SetFamily:
    """All digitally convex sets of ``g``; always contains the empty set and V.

    Sweeps every subset, reusing a table of N[S] masks built by dynamic
    programming over the subset lattice.
    """
    n = g.n
    if n > CONVEXITY_ENUMERATION_CEILING:
        raise ResourceLimitError(
            f"digital convexity enumeration is capped at "
            f"{CONVEXITY_ENUMERATION_CEILING} vertices (got {n})"
        )
    closed = [g.closed_mask(v) for v in range(n)]
    total = 1 << n
    reach = [0] * total  # reach[S] = N[S]
    for s_bits in range(1, total):
        low = s_bits & -s_bits
        reach[s_bits] = reach[s_bits ^ low] | closed[low.bit_length() - 1]
    full = total - 1
    convex = []
    for s_bits in range(total):
        cover = reach[s_bits]
        ok = True
        for v in mask_members(full & ~s_bits):
            if closed[v] & ~cover == 0:
                ok = False
                break
        if ok:
            convex.append(s_bits)
    return SetFamily(n, convex)


def complement_family(f: SetFamily) -> SetFamily:
    """Member-wise complement within the universe; involutive."""
    full = (1 << f.universe) - 1
    return SetFamily(f.universe, (full & ~m for m in f.masks))


@dataclass(frozen=True, slots=True)
class AxiomReport:
    """Result of a convexity-axiom check, with the first violation found."""

    ok: bool
    missing_empty: bool = False
    missing_universe: bool = False
    violating_pair: tuple[VertexSet, VertexSet] | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "family satisfies the convexity axioms"
        if self.missing_empty:
            return "the empty set is missing"
        if self.missing_universe:
            return "the full vertex set is missing"
        a, b = self.violating_pair
        return f"not intersection-closed: {a!r} and {b!r} meet outside the family"


def check_convexity_axioms(f: SetFamily) -> AxiomReport:
    """Check that ``f`` contains the empty set and V and is intersection-closed.

    Reports the first violating pair in canonical member order.  The pairwise
    sweep is vectorized; families of convex sets can run to 2^n members.
    """
    full = (1 << f.universe) - 1
    if not f.contains_mask(0):
        return AxiomReport(False, missing_empty=True)
    if not f.contains_mask(full):
        return AxiomReport(False, missing_universe=True)
    masks = f.masks
    k = len(masks)
    if k <= 2:
        return AxiomReport(True)
    arr = np.array(masks, dtype=np.uint64)
    sorted_masks = np.sort(arr)
    block = max(1, (1 << 22) // k)  # keep each pairwise slab around 32 MB
    for i0 in range(0, k, block):
        rows = arr[i0:i0 + block]
        inter = (rows[:, None] & arr[None, :]).ravel()
        pos = np.searchsorted(sorted_masks, inter)
        pos[pos >= k] = k - 1
        missing = sorted_masks[pos] != inter
        if missing.any():
            flat = int(np.flatnonzero(missing)[0])
            i = i0 + flat // k
            j = flat % k
            if j < i:  # report with canonical (i <= j) orientation
                i, j = j, i
            return AxiomReport(
                False,
                violating_pair=(VertexSet(masks[i], f.universe),
                                VertexSet(masks[j], f.universe)),
            )
    return AxiomReport(True)
