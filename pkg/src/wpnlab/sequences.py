"""Enumeration and classification of really canonical witnessing sequences.

The witnessing property of a sequence (F_1,...,F_k) against H depends only
on which isomorphism classes of induced subgraphs of H each family keeps.
We therefore work over the finite poset of those classes: a sequence is a
k-tuple of forbidden antichains J_i, and "witnessing" means every
realizable assignment of part-classes to slots is rejected somewhere.
That turns minimal-sequence enumeration into minimal hitting set
enumeration (MMCS-style), which is exact and fast at cycle scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .families import FamilySpec, basis_of, family_subset, is_clique_graph, \
    is_stable_graph
from .graphs import Graph, bits, canonical_key, cycle, empty, path
from .witnessing import BudgetExhausted, WitnessSequence, is_really_canonical, \
    is_witnessing_sequence, wpn


@dataclass
class SubgraphPoset:
    reps: list[Graph]            # canonical representative per class
    class_of_mask: list[int]     # class id for every vertex subset of h
    below: list[list[int]]       # below[c] = class ids p with p induced in c
    clique_classes: set[int]
    stable_classes: set[int]
    trivial_classes: set[int]    # K0 and K1: in every hereditary family


def subgraph_poset(h: Graph) -> SubgraphPoset:
    from .graphs import contains_induced

    ids: dict = {}
    reps: list[Graph] = []
    class_of_mask = []
    for mask in range(1 << h.n):
        sub = h.induced(mask)
        key = canonical_key(sub)
        c = ids.get(key)
        if c is None:
            c = len(reps)
            ids[key] = c
            reps.append(Graph(key[0], key[1]))
        class_of_mask.append(c)
    m = len(reps)
    below = [[] for _ in range(m)]
    for c in range(m):
        for p in range(m):
            if reps[p].n <= reps[c].n and contains_induced(reps[c], reps[p]):
                below[c].append(p)
    return SubgraphPoset(
        reps=reps,
        class_of_mask=class_of_mask,
        below=below,
        clique_classes={c for c, g in enumerate(reps) if is_clique_graph(g)},
        stable_classes={c for c, g in enumerate(reps) if is_stable_graph(g)},
        trivial_classes={c for c, g in enumerate(reps) if g.n <= 1},
    )


def part_class_multisets(h: Graph, k: int, poset: SubgraphPoset) -> set[tuple[int, ...]]:
    """Sorted k-tuples of part classes realizable by partitioning V(h) into
    at most k blocks (missing blocks padded with the 0-vertex class)."""
    empty_class = poset.class_of_mask[0]
    cls = poset.class_of_mask
    memo: dict[tuple[int, int], set[tuple[int, ...]]] = {}

    def solve(mask: int, blocks: int) -> set[tuple[int, ...]]:
        if mask == 0:
            return {()}
        if blocks == 0:
            return set()
        key = (mask, blocks)
        got = memo.get(key)
        if got is not None:
            return got
        out: set[tuple[int, ...]] = set()
        low = mask & -mask
        rest = mask ^ low
        # iterate over all blocks containing the lowest vertex
        sub = rest
        while True:
            block = sub | low
            c = cls[block]
            for tail in solve(mask ^ block, blocks - 1):
                out.add(tuple(sorted(tail + (c,))))
            if sub == 0:
                break
            sub = (sub - 1) & rest
        memo[key] = out
        return out

    result = set()
    for t in solve((1 << h.n) - 1, k):
        result.add(tuple(sorted(t + (empty_class,) * (k - len(t)))))
    return result


def _assignments(multiset: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Distinct orderings of a sorted k-tuple."""
    out: set[tuple[int, ...]] = set()

    def rec(prefix: tuple[int, ...], remaining: list[int]) -> None:
        if not remaining:
            out.add(prefix)
            return
        seen = set()
        for i, c in enumerate(remaining):
            if c in seen:
                continue
            seen.add(c)
            rec(prefix + (c,), remaining[:i] + remaining[i + 1:])

    rec((), list(multiset))
    return out


def _build_constraints(poset: SubgraphPoset, multisets: set[tuple[int, ...]],
                       types: tuple[str, ...]) -> list[frozenset] | None:
    """One constraint per (realizable multiset, slot assignment): the set of
    (slot, pattern-class) pairs that would reject it.  Returns None when a
    constraint has no hitters (no witnessing sequence of these slot types).
    """
    k = len(types)
    allowed: list[set[int]] = []
    for t in types:
        protected = poset.clique_classes if t == "C" else poset.stable_classes
        allowed.append({c for c in range(len(poset.reps))
                        if c not in protected and c not in poset.trivial_classes})
    constraints: set[frozenset] = set()
    for ms in multisets:
        for assign in _assignments(ms):
            opts = frozenset(
                (i, p)
                for i in range(k)
                for p in poset.below[assign[i]]
                if p in allowed[i]
            )
            if not opts:
                return None
            constraints.add(opts)
    # drop subsumed constraints (supersets of another constraint)
    kept: list[frozenset] = []
    for c in sorted(constraints, key=len):
        if not any(other <= c for other in kept):
            kept.append(c)
    return kept


def _minimal_hitting_sets(constraints: list[frozenset], budget: list[int]):
    """Yield all minimal hitting sets (MMCS with criticality pruning)."""
    index: dict = {}
    for ci, c in enumerate(constraints):
        for e in c:
            index.setdefault(e, set()).add(ci)

    def solve(chosen: dict, uncov: set[int]):
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExhausted("sequence enumeration budget exhausted")
        if not uncov:
            yield frozenset(chosen)
            return
        ci = min(uncov, key=lambda i: len(constraints[i]))
        for e in sorted(constraints[ci]):
            hits = index[e] & uncov
            new_crit = {v: crit - index[e] for v, crit in chosen.items()}
            if any(not crit for crit in new_crit.values()):
                continue  # e would make an earlier pick redundant
            new_crit[e] = set(hits)
            yield from solve(new_crit, uncov - hits)

    yield from solve({}, set(range(len(constraints))))


def enumerate_really_canonical_sequences(
    h: Graph, k: int, budget: int = 10_000_000
) -> list[WitnessSequence]:
    """All minimal really canonical witnessing k-sequences for h, with
    forbidden bases drawn from the induced-subgraph classes of h, up to
    reordering of the k slots.

    Minimal means removing any pattern from any basis breaks the witnessing
    property; minimality forces each basis to be an antichain.  Raises
    BudgetExhausted (distinct from returning an empty list) when the search
    budget runs out.
    """
    if k < 1:
        raise ValueError("k must be positive")
    poset = subgraph_poset(h)
    multisets = part_class_multisets(h, k, poset)
    remaining = [budget]
    solutions: dict[tuple, WitnessSequence] = {}
    for n_clique_slots in range(k + 1):
        types = ("C",) * n_clique_slots + ("S",) * (k - n_clique_slots)
        constraints = _build_constraints(poset, multisets, types)
        if constraints is None:
            continue
        for hs in _minimal_hitting_sets(constraints, remaining):
            slots: list[list[int]] = [[] for _ in range(k)]
            for (i, p) in hs:
                slots[i].append(p)
            fams = tuple(
                FamilySpec.forbidden(poset.reps[p] for p in js)
                for js in slots
            )
            norm = tuple(sorted(
                tuple(canonical_key(p) for p in f.patterns) for f in fams))
            if norm not in solutions:
                ordered = tuple(sorted(
                    fams, key=lambda f: tuple(canonical_key(p) for p in f.patterns)))
                solutions[norm] = WitnessSequence(parts=ordered)
    return [solutions[key] for key in sorted(solutions)]


# -- classification into the structural case lists ----------------------------


@lru_cache(maxsize=None)
def _target(name: str) -> FamilySpec:
    p3 = path(3)
    cop3 = p3.complement()
    if name == "cliques-or-tiny":
        # cliques plus every graph on <= 2 vertices
        return FamilySpec.forbidden([empty(3), p3, cop3])
    if name == "cliques-and-stables":
        return FamilySpec.forbidden([p3, cop3])
    if name == "clique-or-co-star":
        # cliques plus complements of stars (a clique and an isolated vertex)
        from .graphs import clique as kn
        return FamilySpec.forbidden(
            [empty(3), p3, kn(2).disjoint_union(kn(2))])
    return FamilySpec.named(name)


def _sub(f: FamilySpec, target_name: str) -> bool:
    return family_subset(f, _target(target_name))


def classify_sequence(h: Graph, seq: WitnessSequence) -> str:
    """Match a really canonical witnessing wpn(h)-sequence against the
    case list for its cycle; 'NoMatch' would falsify the classification."""
    n = h.n
    if n < 6 or n % 2 or not is_isomorphic_cycle(h):
        raise ValueError("classification supports even cycles C6, C8, C10, C2l")
    k = wpn(h)
    if len(seq) != k:
        raise ValueError(f"expected a {k}-sequence for C{n}")
    if not is_really_canonical(seq):
        raise ValueError("sequence is not really canonical")
    if not is_witnessing_sequence(h, seq):
        raise ValueError("sequence is not witnessing")
    fams = list(seq.parts)
    if n == 6:
        a, b = fams
        for x, y in ((a, b), (b, a)):
            if _sub(x, "co-girth-5") and _sub(y, "stable"):
                return "case1"
        # Case 2 admits stable sets of any size in the second family (as in
        # the C8 case list): e.g. (Forb{E3,2K2,P4}, cliques-and-stables) is
        # witnessing and really canonical, and fits no narrower case.
        for x, y in ((a, b), (b, a)):
            if _sub(x, "cograph") and _sub(y, "cliques-and-stables"):
                return "case2"
        for x, y in ((a, b), (b, a)):
            if _sub(x, "complete-multipartite") and _sub(y, "clique-or-co-star"):
                return "case3"
        for x, y in ((a, b), (b, a)):
            if _sub(x, "co-matching") and _sub(y, "clique-union-stable"):
                return "case4"
        return "NoMatch"
    if n == 8:
        import itertools

        for a, b, c in itertools.permutations(fams):
            if (_sub(a, "split-join-components-co")
                    and _sub(b, "cliques-or-tiny") and _sub(c, "cliques-or-tiny")):
                return "case1"
        for a, b, c in itertools.permutations(fams):
            if (_sub(a, "cliques-and-stables") and _sub(b, "cliques-or-tiny")
                    and _sub(c, "co-matching")):
                return "case2"
        return "NoMatch"
    special = "stars-cliques-co" if n == 10 else "stars-triangles-co"
    for i, f in enumerate(fams):
        rest = fams[:i] + fams[i + 1:]
        if _sub(f, special) and all(_sub(r, "cliques-or-tiny") for r in rest):
            return "case1"
    return "NoMatch"


def is_isomorphic_cycle(h: Graph) -> bool:
    from .graphs import is_isomorphic

    return h.n >= 3 and is_isomorphic(h, cycle(h.n))
