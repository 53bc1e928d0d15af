"""Witnessing partition numbers, witnessing sequences and certificates.

A witnessing k-sequence (F_1,...,F_k) for H is a list of hereditary
families such that no k-partition of V(H) puts every induced part inside
its family; a graph partitioned that way is therefore H-free, and the
partition is a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .families import (
    FamilySpec,
    basis_of,
    is_clique_graph,
    is_stable_graph,
    member,
)
from .graphs import Graph, bits, clique, cycle, empty, is_isomorphic, path


@dataclass(frozen=True)
class Partition:
    """Total assignment vertex -> part index with declared arity."""

    arity: int
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError("arity must be positive")
        if any(not 0 <= a < self.arity for a in self.assignment):
            raise ValueError("assignment entry out of range")

    def part_mask(self, i: int) -> int:
        m = 0
        for v, a in enumerate(self.assignment):
            if a == i:
                m |= 1 << v
        return m


@dataclass(frozen=True)
class WitnessSequence:
    parts: tuple[FamilySpec, ...]

    def __post_init__(self) -> None:
        if len(self.parts) < 1:
            raise ValueError("witnessing sequence needs at least one family")

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class PartitionCertificate:
    partition: Partition
    sequence: WitnessSequence

    def verify(self, g: Graph) -> bool:
        return all(
            member(f, g.induced(self.partition.part_mask(i)))
            for i, f in enumerate(self.sequence.parts)
        )


class BudgetExhausted(RuntimeError):
    """Search budget ran out before the enumeration completed."""


# -- clique/stable partitions and wpn ----------------------------------------


def clique_stable_partition_exists(h: Graph, c: int, s: int) -> bool:
    """Can V(h) be partitioned into c cliques and s stable sets?  Empty
    parts are allowed."""
    if c < 0 or s < 0:
        raise ValueError("part counts must be nonnegative")
    kinds = [True] * c + [False] * s  # True = clique
    masks = [0] * (c + s)

    def rec(v: int) -> bool:
        if v == h.n:
            return True
        row = h.adj[v]
        tried_empty_clique = False
        tried_empty_stable = False
        for i, is_cl in enumerate(kinds):
            m = masks[i]
            if m == 0:
                # identical empty parts are interchangeable; try one per kind
                if is_cl:
                    if tried_empty_clique:
                        continue
                    tried_empty_clique = True
                else:
                    if tried_empty_stable:
                        continue
                    tried_empty_stable = True
            if is_cl:
                if row & m != m:
                    continue
            else:
                if row & m:
                    continue
            masks[i] = m | 1 << v
            if rec(v + 1):
                return True
            masks[i] = m
        return False

    return rec(0)


def wpn(h: Graph) -> int:
    """Witnessing partition number: max k such that for some c+s=k there is
    no partition of V(h) into c cliques and s stable sets (0 for K1/K0)."""
    if h.n == 0:
        return 0
    for k in range(h.n, 0, -1):
        for c in range(k + 1):
            if not clique_stable_partition_exists(h, c, k - c):
                return k
    return 0


# -- sequence validity and certificates --------------------------------------


def is_witnessing_sequence(h: Graph, seq: WitnessSequence) -> bool:
    """True iff no partition of V(h) into len(seq) (possibly empty) parts
    has every induced part inside its family."""
    k = len(seq)
    memo: list[dict[int, bool]] = [dict() for _ in range(k)]

    def part_ok(i: int, mask: int) -> bool:
        cache = memo[i]
        got = cache.get(mask)
        if got is None:
            got = member(seq.parts[i], h.induced(mask))
            cache[mask] = got
        return got

    masks = [0] * k

    def rec(v: int) -> bool:
        # True iff some completion certifies h against itself
        if v == h.n:
            return True
        for i in range(k):
            m = masks[i] | 1 << v
            if part_ok(i, m):
                masks[i] = m
                if rec(v + 1):
                    return True
                masks[i] = m ^ 1 << v
        return False

    if any(not part_ok(i, 0) for i in range(k)):
        # a family rejecting the empty graph rejects everything
        return True
    return not rec(0)


def _clique_like(f: FamilySpec) -> bool:
    if f.name in ("clique", "clique-or-e2"):
        return True
    return False


def find_certificate(g: Graph, seq: WitnessSequence) -> PartitionCertificate | None:
    """A partition of V(g) with part i inside family i, or None.

    Backtracking vertex by vertex; heredity makes pruning on the current
    part content sound.  Clique-family slots are branched first since they
    prune fastest.
    """
    k = len(seq)
    order = sorted(range(k), key=lambda i: (0 if _clique_like(seq.parts[i]) else 1, i))
    memo: list[dict[int, bool]] = [dict() for _ in range(k)]

    def part_ok(i: int, mask: int) -> bool:
        cache = memo[i]
        got = cache.get(mask)
        if got is None:
            got = member(seq.parts[i], g.induced(mask))
            cache[mask] = got
        return got

    if any(not part_ok(i, 0) for i in range(k)):
        return None
    masks = [0] * k
    assignment = [0] * g.n

    def rec(v: int) -> bool:
        if v == g.n:
            return True
        for i in order:
            m = masks[i] | 1 << v
            if part_ok(i, m):
                masks[i] = m
                assignment[v] = i
                if rec(v + 1):
                    return True
                masks[i] = m ^ 1 << v
        return False

    if not rec(0):
        return None
    return PartitionCertificate(
        partition=Partition(arity=k, assignment=tuple(assignment)),
        sequence=seq,
    )


# -- the four theorems -------------------------------------------------------


def theorem_sequence(theorem: str) -> WitnessSequence:
    """The witnessing sequence of theorem 'c6', 'c8', 'c10' or 'c2l:<l>'."""
    if theorem == "c6":
        fams = [FamilySpec.named("co-girth-5"), FamilySpec.named("stable")]
    elif theorem == "c8":
        fams = [FamilySpec.named("split-join-components-co")] + \
            [FamilySpec.named("clique")] * 2
    elif theorem == "c10":
        fams = [FamilySpec.named("stars-cliques-co")] + \
            [FamilySpec.named("clique")] * 3
    elif theorem.startswith("c2l:"):
        l = int(theorem.split(":", 1)[1])
        if l <= 5:
            raise ValueError("c2l theorem requires l > 5")
        fams = [FamilySpec.named("stars-triangles-co")] + \
            [FamilySpec.named("clique")] * (l - 2)
    else:
        raise ValueError(f"unknown theorem {theorem!r}")
    return WitnessSequence(parts=tuple(fams))


def theorem_cycle(theorem: str) -> Graph:
    if theorem == "c6":
        return cycle(6)
    if theorem == "c8":
        return cycle(8)
    if theorem == "c10":
        return cycle(10)
    if theorem.startswith("c2l:"):
        return cycle(2 * int(theorem.split(":", 1)[1]))
    raise ValueError(f"unknown theorem {theorem!r}")


def theorem_certifier(g: Graph, theorem: str) -> PartitionCertificate | None:
    return find_certificate(g, theorem_sequence(theorem))


# -- really canonical sequences ----------------------------------------------


def is_really_canonical(seq: WitnessSequence) -> bool:
    """Each family contains all cliques (no basis pattern is a clique) or
    all stable sets (no basis pattern is stable)."""
    for f in seq.parts:
        basis = basis_of(f)
        if any(is_clique_graph(p) for p in basis) and \
                any(is_stable_graph(p) for p in basis):
            return False
    return True


# -- exhaustive partition search for the cycle claims ------------------------


def partition_into_parts(g: Graph, parts: list[Graph]) -> list[int] | None:
    """Partition V(g) into parts inducing the given graphs (up to
    isomorphism per part); returns part masks in the caller's order or None.

    The lowest remaining vertex must land in one of the still-unused parts;
    branching only over isomorphism-distinct unused parts kills the symmetry
    between interchangeable parts.
    """
    from .graphs import canonical_key

    if sum(p.n for p in parts) != g.n:
        return None
    result = [0] * len(parts)
    nonempty = [i for i, p in enumerate(parts) if p.n > 0]

    def rec(remaining: int, unused: list[int]) -> bool:
        if not unused:
            return True
        low = remaining & -remaining
        pool = list(bits(remaining & ~low))
        tried: set = set()
        for pos, i in enumerate(unused):
            key = canonical_key(parts[i])
            if key in tried:
                continue
            tried.add(key)
            rest = unused[:pos] + unused[pos + 1:]
            for combo_mask in _subsets_of_size(pool, parts[i].n - 1):
                mask = low | combo_mask
                if is_isomorphic(g.induced(mask), parts[i]):
                    result[i] = mask
                    if rec(remaining ^ mask, rest):
                        return True
        return False

    if not rec(g.vertex_mask(), nonempty):
        return None
    return result


def _subsets_of_size(pool: list[int], size: int):
    n = len(pool)
    if size > n:
        return
    idx = list(range(size))
    while True:
        m = 0
        for i in idx:
            m |= 1 << pool[i]
        yield m
        for i in reversed(range(size)):
            if idx[i] != i + n - size:
                break
        else:
            return
        idx[i] += 1
        for j in range(i + 1, size):
            idx[j] = idx[j - 1] + 1


_LMH_SMALL = {"P3": path(3), "coP3": path(3).complement(), "E3": empty(3)}


def _four_vertex_sparse() -> dict[str, Graph]:
    e2 = empty(2)
    return {
        "E4": empty(4),
        "K2+E2": clique(2).disjoint_union(e2),
        "2K2": clique(2).disjoint_union(clique(2)),
        "P3+K1": path(3).disjoint_union(empty(1)),
    }


@dataclass
class ClaimResult:
    item: str
    parameters: dict
    found: bool
    witness: list[int] | None = None
    expected_found: bool | None = None


def verify_cycle_partition_claims(l: int) -> list[ClaimResult]:
    """Exhaustively check the stated partitions of C_{2l}.

    For l > 5 this covers all three items of the even-cycle partition
    claim plus a negative control (l-1 cliques of size 2, which cannot
    cover the cycle).  For l in {3, 4, 5} it checks the finitely many
    partition facts stated for C6, C8 and C10.
    """
    if l < 3:
        raise ValueError("need l >= 3")
    g = cycle(2 * l)
    k2, e2 = clique(2), empty(2)
    results: list[ClaimResult] = []

    def run(item: str, params: dict, parts: list[Graph], expected: bool | None = True):
        masks = partition_into_parts(g, parts)
        results.append(ClaimResult(item=item, parameters=params,
                                   found=masks is not None, witness=masks,
                                   expected_found=expected))

    if l > 5:
        for lname, lg in _LMH_SMALL.items():
            for mname, mg in _LMH_SMALL.items():
                if lname > mname:
                    continue
                for a in range(l - 2):
                    b = l - 3 - a
                    run("a", {"L": lname, "M": mname, "edges": a, "nonedges": b},
                        [lg, mg] + [k2] * a + [e2] * b)
        for a in range(l - 1):
            b = l - 2 - a
            run("b", {"edges": a, "nonedges": b},
                [path(4)] + [k2] * a + [e2] * b)
        for hname, hg in _four_vertex_sparse().items():
            for a in range(l - 1):
                b = l - 2 - a
                run("c", {"H": hname, "edges": a, "nonedges": b},
                    [hg] + [k2] * a + [e2] * b)
        run("control", {"cliques": l - 1, "size": 2}, [k2] * (l - 1),
            expected=False)
    elif l == 5:
        for lname, lg in _LMH_SMALL.items():
            for mname, mg in _LMH_SMALL.items():
                if lname > mname:
                    continue
                for a in range(3):
                    b = 2 - a
                    run("a", {"L": lname, "M": mname, "edges": a, "nonedges": b},
                        [lg, mg] + [k2] * a + [e2] * b)
        run("b", {"edges": 3, "nonedges": 0}, [path(4)] + [k2] * 3)
        for hname in ("K2+E2", "2K2", "P3+K1"):
            run("c", {"H": hname, "edges": 3, "nonedges": 0},
                [_four_vertex_sparse()[hname]] + [k2] * 3)
        run("stable+4cliques", {}, [e2] + [k2] * 4)
        run("control", {"cliques": 4, "size": 2}, [k2] * 4, expected=False)
    elif l == 4:
        run("two-stable", {}, [empty(4), empty(4)])
        run("four-cliques", {}, [k2] * 4)
        run("stable+3cliques", {}, [e2] + [k2] * 3)
        run("control", {"cliques": 3, "size": 2}, [k2] * 3, expected=False)
    else:  # l == 3
        run("two-stable", {}, [empty(3), empty(3)])
        run("three-cliques", {}, [k2] * 3)
        run("stable+2cliques", {}, [e2, k2, k2])
        run("two-P3", {}, [path(3), path(3)])
        run("two-coP3", {}, [path(3).complement(), path(3).complement()])
        run("control", {"cliques": 2, "size": 2}, [k2] * 2, expected=False)
    return results
