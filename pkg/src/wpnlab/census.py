"""Exhaustive censuses of small graphs: H-free counts, theorem-certifiable
counts, and girth-5 degree statistics.

Two modes.  Labeled mode walks every edge subset (n <= 8) and is shardable
by edge-mask prefix for parallel runs.  Unlabeled-weighted mode walks one
representative per isomorphism class (n <= 10) and weights by orbit size
n!/|Aut|, which reproduces the labeled totals exactly; agreement of the two
modes is itself a census invariant for n <= 7.

All fractions are exact rationals; reports contain no wall-clock data, so a
report is byte-identical for a fixed configuration regardless of thread
count or resume history.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import math
import multiprocessing
import os
from dataclasses import dataclass, field
from decimal import Decimal, getcontext
from fractions import Fraction
from functools import lru_cache

from .families import FamilySpec, girth, heavy_degree_check, s_statistic
from .graphs import (
    Graph,
    bits,
    automorphism_count,
    contains_induced,
    cycle,
    emit_graph6,
    is_isomorphic,
    parse_graph6,
)
from .witnessing import theorem_certifier

MAX_LABELED_N = 8
MAX_UNLABELED_N = 10


class ConfigMismatch(Exception):
    """Resume manifest was produced under a different configuration."""


# -- canonical JSON -----------------------------------------------------------


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def config_hash(config: dict) -> str:
    return hashlib.sha256(canonical_json(config).encode()).hexdigest()


def render_fraction(fr: Fraction) -> dict:
    """Exact p/q plus a 15-significant-digit decimal rendering."""
    getcontext().prec = 15
    dec = Decimal(fr.numerator) / Decimal(fr.denominator) if fr.denominator else Decimal(0)
    return {
        "exact": f"{fr.numerator}/{fr.denominator}",
        "decimal": str(dec),
    }


# -- enumerators ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _pair_order(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    for e, (i, j) in enumerate(_pair_order(n)):
        if mask >> e & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def enumerate_labeled(n: int, visitor) -> None:
    """Visit every labeled graph on [n] exactly once, in edge-mask order."""
    if n > MAX_LABELED_N:
        raise ValueError(
            f"labeled enumeration capped at n = {MAX_LABELED_N}; "
            "use unlabeled-weighted mode for larger n")
    for mask in range(1 << (n * (n - 1) // 2)):
        visitor(graph_from_edge_mask(n, mask))


@lru_cache(maxsize=None)
def _unlabeled_classes(n: int) -> tuple[Graph, ...]:
    if n > MAX_UNLABELED_N:
        raise ValueError(f"unlabeled enumeration capped at n = {MAX_UNLABELED_N}")
    from .families import _unlabeled_up_to

    return tuple(g for g in _unlabeled_up_to(n) if g.n == n)


def orbit_size(g: Graph) -> int:
    return math.factorial(g.n) // automorphism_count(g)


def enumerate_unlabeled(n: int, visitor) -> None:
    """Visit one representative per isomorphism class with its orbit size."""
    for g in _unlabeled_classes(n):
        visitor(g, orbit_size(g))


# -- fast per-graph predicates -------------------------------------------------


@lru_cache(maxsize=None)
def _subset_masks(n: int, m: int) -> tuple[int, ...]:
    return tuple(sum(1 << v for v in combo)
                 for combo in itertools.combinations(range(n), m))


def has_induced_cycle(g: Graph, m: int) -> bool:
    """Induced C_m on m chosen vertices = 2-regular and connected there."""
    if m > g.n:
        return False
    for mask in _subset_masks(g.n, m):
        degs_ok = True
        for v in bits(mask):
            if (g.adj[v] & mask).bit_count() != 2:
                degs_ok = False
                break
        if not degs_ok:
            continue
        # 2-regular on m vertices is a disjoint union of cycles; connected
        # iff a walk from any start covers all m vertices
        start = (mask & -mask).bit_length() - 1
        seen = 1 << start
        frontier = g.adj[start] & mask
        while frontier:
            seen |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v] & mask
            frontier = nxt & ~seen
        if seen == mask:
            return True
    return False


def _maximal_stable_sets(g: Graph):
    """Bron-Kerbosch with pivot on the non-adjacency graph."""
    full = g.vertex_mask()
    non = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]

    def rec(r: int, p: int, x: int):
        if p == 0 and x == 0:
            yield r
            return
        pivot_pool = p | x
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        best = -1
        for u in bits(pivot_pool):
            k = (p & non[u]).bit_count()
            if k > best:
                best, pivot = k, u
        for v in bits(p & ~non[pivot]):
            yield from rec(r | (1 << v), p & non[v], x & non[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        yield 0
        return
    yield from rec(0, full, 0)


def is_cogirth5_mask(g: Graph, r: int) -> bool:
    """No stable triple and no induced 2K2 within the vertex set r
    (equivalently: the complement of g[r] has girth >= 5)."""
    verts = list(bits(r))
    edges = []
    for a, u in enumerate(verts):
        for v in verts[a + 1:]:
            if g.adj[u] >> v & 1:
                edges.append((u, v))
            elif r & ~g.adj[u] & ~g.adj[v] & ~(1 << u) & ~(1 << v):
                return False  # stable triple {u, v, w}
    for a, (u, v) in enumerate(edges):
        for (x, y) in edges[a + 1:]:
            if x in (u, v) or y in (u, v):
                continue
            cross = (g.adj[u] | g.adj[v]) & ((1 << x) | (1 << y))
            if not cross:
                return False  # induced 2K2
    return True


def c6_certifiable(g: Graph) -> bool:
    """Partition into a co-girth-5 part and a stable part exists.

    By heredity of co-girth-5 it is enough to try maximal stable sets.
    """
    full = g.vertex_mask()
    return any(is_cogirth5_mask(g, full ^ s) for s in _maximal_stable_sets(g))


# -- census --------------------------------------------------------------------


_THEOREMS = ("c6", "c8", "c10")


def _theorem_cycle_length(theorem: str) -> int:
    if theorem.startswith("c2l:"):
        return 2 * int(theorem.split(":", 1)[1])
    if theorem in _THEOREMS:
        return int(theorem[1:])
    raise ValueError(f"unknown theorem id {theorem!r}")


@dataclass(frozen=True)
class CensusConfig:
    n: int
    forbidden_g6: str
    theorem: str
    mode: str  # "labeled" | "unlabeled"
    shard_prefix_bits: int = 0

    def __post_init__(self) -> None:
        if self.mode not in ("labeled", "unlabeled"):
            raise ValueError("mode must be labeled or unlabeled")
        nmax = MAX_LABELED_N if self.mode == "labeled" else MAX_UNLABELED_N
        if not 1 <= self.n <= nmax:
            raise ValueError(f"{self.mode} census supports 1 <= n <= {nmax}")
        m = _theorem_cycle_length(self.theorem)
        forb = parse_graph6(self.forbidden_g6)
        if not is_isomorphic(forb, cycle(m)):
            raise ValueError(
                f"theorem {self.theorem} expects the forbidden graph C{m}")
        nbits = self.n * (self.n - 1) // 2
        if not 0 <= self.shard_prefix_bits <= min(nbits, 12):
            raise ValueError("bad shard prefix length")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "forbidden": self.forbidden_g6,
            "theorem": self.theorem,
            "mode": self.mode,
            "shard_prefix_bits": self.shard_prefix_bits,
        }

    def hash(self) -> str:
        return config_hash(self.to_dict())


@dataclass
class CensusReport:
    config: CensusConfig
    total: int
    hfree: int
    certifiable: int
    shards: list = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.certifiable <= self.hfree <= self.total:
            raise ValueError("census counts violate certifiable <= hfree <= total")

    def certifiable_fraction(self) -> Fraction:
        return Fraction(self.certifiable, self.hfree) if self.hfree else Fraction(0)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "config_hash": self.config.hash(),
            "mode": "labeled" if self.config.mode == "labeled" else "unlabeled-weighted",
            "total": str(self.total),
            "hfree": str(self.hfree),
            "certifiable": str(self.certifiable),
            "certifiable_fraction": render_fraction(self.certifiable_fraction()),
            "shards": self.shards,
        }


def _certifiable(g: Graph, theorem: str) -> bool:
    if theorem == "c6":
        return c6_certifiable(g)
    return theorem_certifier(g, theorem) is not None


def _count_shard(config: CensusConfig, prefix: int) -> dict:
    """Exact counts over one edge-mask-prefix shard of the labeled census."""
    n, m = config.n, _theorem_cycle_length(config.theorem)
    forb = cycle(m)
    nbits = n * (n - 1) // 2
    low = nbits - config.shard_prefix_bits
    total = hfree = certifiable = 0
    exhaustive_check = n <= 6
    for rest in range(1 << low):
        mask = (prefix << low) | rest
        g = graph_from_edge_mask(n, mask)
        total += 1
        if has_induced_cycle(g, m):
            continue
        hfree += 1
        if _certifiable(g, config.theorem):
            certifiable += 1
            if exhaustive_check or certifiable % 1024 == 1:
                if contains_induced(g, forb):
                    raise RuntimeError(
                        "soundness cross-check failed: certifiable graph "
                        f"{emit_graph6(g)} contains the forbidden cycle")
    return {"prefix": prefix, "done": True,
            "total": total, "hfree": hfree, "certifiable": certifiable}


def _count_shard_star(args):
    return _count_shard(*args)


def _census_unlabeled(config: CensusConfig) -> CensusReport:
    m = _theorem_cycle_length(config.theorem)
    forb = cycle(m)
    total = hfree = certifiable = 0
    checked = 0
    for g in _unlabeled_classes(config.n):
        w = orbit_size(g)
        total += w
        if has_induced_cycle(g, m):
            continue
        hfree += w
        if _certifiable(g, config.theorem):
            certifiable += w
            checked += 1
            if config.n <= 6 or checked % 1024 == 1:
                if contains_induced(g, forb):
                    raise RuntimeError(
                        "soundness cross-check failed: certifiable graph "
                        f"{emit_graph6(g)} contains the forbidden cycle")
    return CensusReport(config=config, total=total, hfree=hfree,
                        certifiable=certifiable, shards=[])


def _merge_report(config: CensusConfig, shard_counts: list[dict]) -> CensusReport:
    ordered = sorted(shard_counts, key=lambda s: s["prefix"])
    return CensusReport(
        config=config,
        total=sum(s["total"] for s in ordered),
        hfree=sum(s["hfree"] for s in ordered),
        certifiable=sum(s["certifiable"] for s in ordered),
        shards=ordered,
    )


def _load_manifest(path: str, config: CensusConfig) -> list[dict]:
    with open(path, "r", encoding="utf-8") as fh:
        manifest = json.load(fh)
    if manifest.get("config_hash") != config.hash():
        raise ConfigMismatch(
            "manifest was produced under a different configuration")
    return manifest["shards"]


def _write_manifest(path: str, config: CensusConfig, shards: list[dict]) -> None:
    payload = {"config_hash": config.hash(),
               "shards": sorted(shards, key=lambda s: s["prefix"])}
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(payload))
    os.replace(tmp, path)


def census(n: int, forbidden: Graph, theorem: str, mode: str = "labeled",
           threads: int = 1, shard_prefix_bits: int | None = None,
           manifest_path: str | None = None) -> CensusReport:
    """Exact H-free / certifiable counts; see module docstring for modes."""
    if shard_prefix_bits is None:
        # fixed default so reports are byte-identical for any thread count
        shard_prefix_bits = min(6, n * (n - 1) // 2)
    config = CensusConfig(n=n, forbidden_g6=emit_graph6(forbidden),
                          theorem=theorem, mode=mode,
                          shard_prefix_bits=shard_prefix_bits if mode == "labeled" else 0)
    if mode == "unlabeled":
        return _census_unlabeled(config)

    done: dict[int, dict] = {}
    if manifest_path and os.path.exists(manifest_path):
        for s in _load_manifest(manifest_path, config):
            if s.get("done"):
                done[s["prefix"]] = s
    prefixes = [p for p in range(1 << config.shard_prefix_bits) if p not in done]
    tasks = [(config, p) for p in prefixes]
    if threads > 1 and len(tasks) > 1:
        with multiprocessing.Pool(threads) as pool:
            fresh = pool.map(_count_shard_star, tasks)
    else:
        fresh = [_count_shard(*t) for t in tasks]
    shards = list(done.values()) + fresh
    if manifest_path:
        _write_manifest(manifest_path, config, shards)
    return _merge_report(config, shards)


# -- girth-5 statistics --------------------------------------------------------


@dataclass
class Girth5Report:
    n: int
    mode: str
    graphs: int                 # girth >= 5 graphs (forests included)
    heavy_check_passed: int
    s_distribution: dict        # s(G) -> count
    max_degree_distribution: dict

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "graphs": str(self.graphs),
            "heavy_check_passed": str(self.heavy_check_passed),
            "s_distribution": {str(k): str(v) for k, v in
                               sorted(self.s_distribution.items())},
            "max_degree_distribution": {str(k): str(v) for k, v in
                                        sorted(self.max_degree_distribution.items())},
        }


def girth5_census(n: int, mode: str = "labeled") -> Girth5Report:
    """Statistics over all girth->=5 graphs on n vertices.

    All statistics are isomorphism-invariant, so labeled counts come from
    orbit weighting; heavy_degree_check must pass on every graph.
    """
    nmax = MAX_LABELED_N if mode == "labeled" else MAX_UNLABELED_N
    if not 1 <= n <= nmax:
        raise ValueError(f"{mode} girth-5 census supports 1 <= n <= {nmax}")
    graphs = heavy_ok = 0
    s_dist: dict[int, int] = {}
    deg_dist: dict[int, int] = {}
    for g in _unlabeled_classes(n):
        if girth(g) < 5:
            continue
        w = orbit_size(g) if mode == "labeled" else 1
        graphs += w
        if heavy_degree_check(g):
            heavy_ok += w
        s = s_statistic(g)
        s_dist[s] = s_dist.get(s, 0) + w
        dmax = max(g.degrees(), default=0)
        deg_dist[dmax] = deg_dist.get(dmax, 0) + w
    return Girth5Report(n=n, mode=mode, graphs=graphs,
                        heavy_check_passed=heavy_ok,
                        s_distribution=s_dist,
                        max_degree_distribution=deg_dist)
