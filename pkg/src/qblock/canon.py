"""Rooted canonical codes, brute-force isomorphism, and classical perm groups.

Canonical codes are explicit byte strings, never hashes: equality of codes must
coincide exactly with rooted colored isomorphism, since merged classes feed
directly into the quantum-group composition.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Optional, Sequence

from .blocks import RootedGraph, biconnected_components, block_tree, cut_vertices
from .classrec import hamiltonian_cycle
from .errors import (
    NotConnectedError,
    NotOuterplanarBlockError,
    TooLargeError,
    UnsupportedBlockError,
)
from .graph import ColoredGraph, induced_subgraph, is_connected

Perm = tuple[int, ...]

BRUTE_ISO_LIMIT = 10
BRUTE_AUT_LIMIT = 12


def pack(tag: bytes, parts: Iterable[bytes]) -> bytes:
    """Length-prefixed framing; injective for fixed tag arity conventions."""
    out = bytearray(tag)
    for p in parts:
        out += len(p).to_bytes(4, "big")
        out += p
    return bytes(out)


def enc_int(i: int) -> bytes:
    return str(i).encode("ascii")


@dataclass(frozen=True, order=True)
class CanonCode:
    data: bytes


# ---------------------------------------------------------------------------
# classical permutation groups
# ---------------------------------------------------------------------------


def _compose(p: Perm, q: Perm) -> Perm:
    """(p after q)[i] = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


def _closure(degree: int, gens: Sequence[Perm]) -> frozenset[Perm]:
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for s in gens:
                c = _compose(s, e)
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(seen)


@dataclass(frozen=True)
class ClassicalPermGroup:
    degree: int
    generators: tuple[Perm, ...]
    order: int

    def elements(self) -> frozenset[Perm]:
        return _closure(self.degree, self.generators)


def group_from_elements(degree: int, elements: Iterable[Perm]) -> ClassicalPermGroup:
    """Minimal-ish deterministic generating set via greedy closure growth."""
    elems = sorted(set(elements))
    ident = tuple(range(degree))
    if not elems:
        elems = [ident]
    gens: list[Perm] = []
    known: set[Perm] = {ident}
    for e in elems:
        if e not in known:
            gens.append(e)
            known = set(_closure(degree, gens))
    return ClassicalPermGroup(degree=degree, generators=tuple(gens), order=len(elems))


def trivial_group(degree: int) -> ClassicalPermGroup:
    return ClassicalPermGroup(degree=degree, generators=(), order=1)


def orbits(group: ClassicalPermGroup, subset: Sequence[int]) -> list[tuple[int, ...]]:
    """Orbit partition of `subset` under the generated group, sorted by minimum."""
    remaining = set(subset)
    for v in remaining:
        if not (0 <= v < group.degree):
            raise ValueError(f"point {v} outside degree {group.degree}")
    out: list[tuple[int, ...]] = []
    while remaining:
        start = min(remaining)
        orb = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for gperm in group.generators:
                y = gperm[x]
                if y not in orb:
                    orb.add(y)
                    frontier.append(y)
        orb &= set(subset)
        remaining -= orb
        out.append(tuple(sorted(orb)))
    return sorted(out, key=lambda t: t[0])


def element_order(p: Perm) -> int:
    n = len(p)
    seen = [False] * n
    out = 1
    for s in range(n):
        if seen[s]:
            continue
        length = 0
        x = s
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        out = out * length // gcd(out, length)
    return out


# ---------------------------------------------------------------------------
# brute-force isomorphism and automorphisms
# ---------------------------------------------------------------------------


def _iter_isomorphisms(
    a: ColoredGraph,
    b: ColoredGraph,
    fixed: dict[int, int],
):
    """Yield all color-preserving isomorphisms a -> b extending `fixed`.

    Candidates are tried in ascending order, so the first yield is the
    lexicographically least mapping (in vertex order 0..n-1 of a).
    """
    n = a.n
    dega = [a.degree(v) for v in range(n)]
    degb = [b.degree(v) for v in range(n)]
    mapping: list[Optional[int]] = [None] * n
    used = [False] * n
    for v, w in fixed.items():
        mapping[v] = w
        used[w] = True

    def backtrack(v: int):
        if v == n:
            yield tuple(mapping)  # type: ignore[arg-type]
            return
        preset = mapping[v] is not None
        candidates = (
            [mapping[v]] if preset else [w for w in range(n) if not used[w]]
        )
        for w in candidates:
            assert w is not None
            if a.colors[v] != b.colors[w] or dega[v] != degb[w]:
                continue
            ok = True
            for u in range(n):
                mu = mapping[u]
                if u != v and mu is not None and a.has_edge(v, u) != b.has_edge(w, mu):
                    ok = False
                    break
            if not ok:
                continue
            if not preset:
                mapping[v] = w
                used[w] = True
            yield from backtrack(v + 1)
            if not preset:
                mapping[v] = None
                used[w] = False

    yield from backtrack(0)


def brute_force_isomorphism(a: RootedGraph, b: RootedGraph) -> Optional[Perm]:
    """Lexicographically least root/color-preserving isomorphism, or None."""
    ga, gb = a.graph, b.graph
    if ga.n > BRUTE_ISO_LIMIT or gb.n > BRUTE_ISO_LIMIT:
        raise TooLargeError(f"brute-force isomorphism capped at {BRUTE_ISO_LIMIT} vertices")
    if ga.n != gb.n or ga.m != gb.m:
        return None
    if sorted(ga.colors) != sorted(gb.colors):
        return None
    if (a.root is None) != (b.root is None):
        return None
    fixed = {} if a.root is None else {a.root: b.root}
    for iso in _iter_isomorphisms(ga, gb, fixed):
        return iso
    return None


def automorphism_group(
    g: ColoredGraph, pins: Sequence[int] = ()
) -> ClassicalPermGroup:
    """All color- and pin-preserving automorphisms, as generators + exact order."""
    if g.n > BRUTE_AUT_LIMIT:
        raise TooLargeError(f"brute-force automorphisms capped at {BRUTE_AUT_LIMIT} vertices")
    fixed = {v: v for v in pins}
    ident = tuple(range(g.n))
    gens: list[Perm] = []
    known: set[Perm] = {ident}
    order = 0
    for p in _iter_isomorphisms(g, g, fixed):
        order += 1
        if p not in known:
            gens.append(p)
            known = set(_closure(g.n, gens))
    return ClassicalPermGroup(degree=g.n, generators=tuple(gens), order=order)


# ---------------------------------------------------------------------------
# dihedral machinery for outerplanar blocks
# ---------------------------------------------------------------------------


def dihedral_orders(cycle: Sequence[int]) -> list[tuple[int, ...]]:
    """All 2m rotations/reflections of a cyclic order, as vertex sequences."""
    m = len(cycle)
    out = []
    for s in range(m):
        out.append(tuple(cycle[(s + i) % m] for i in range(m)))
        out.append(tuple(cycle[(s - i) % m] for i in range(m)))
    return out


def _order_encoding(
    order: Sequence[int],
    chords: Iterable[frozenset[int]],
    label_of: dict[int, bytes],
) -> bytes:
    pos = {v: i for i, v in enumerate(order)}
    chpos = sorted(tuple(sorted((pos[u], pos[v]))) for u, v in (tuple(c) for c in chords))
    parts = [enc_int(len(order))]
    parts.extend(label_of[v] for v in order)
    parts.append(pack(b"ch", [enc_int(i) + b"," + enc_int(j) for i, j in chpos]))
    return pack(b"seq", parts)


def dihedral_symmetries(
    cycle: Sequence[int],
    chords: Iterable[tuple[int, int]],
    label_of: dict[int, bytes],
) -> tuple[tuple[int, ...], list[dict[int, int]]]:
    """Canonical cyclic order plus all label/chord-preserving dihedral maps.

    Returns (best_order, symmetries); each symmetry maps vertex -> vertex.
    The canonical order minimizes the (label sequence, chord positions) bytes.
    """
    base = tuple(cycle)
    chordset = {frozenset(c) for c in chords}
    best_order: Optional[tuple[int, ...]] = None
    best_key: Optional[bytes] = None
    elements: list[dict[int, int]] = []
    for cand in dihedral_orders(base):
        key = _order_encoding(cand, chordset, label_of)
        if best_key is None or key < best_key:
            best_key, best_order = key, cand
        sigma = {base[i]: cand[i] for i in range(len(base))}
        if any(label_of[v] != label_of[sigma[v]] for v in base):
            continue
        if {frozenset((sigma[u], sigma[v])) for u, v in (tuple(c) for c in chordset)} != chordset:
            continue
        elements.append(sigma)
    assert best_order is not None
    return best_order, elements


# ---------------------------------------------------------------------------
# rooted canonical codes over the block tree
# ---------------------------------------------------------------------------


class _CodeCtx:
    def __init__(self, g: ColoredGraph):
        self.g = g
        self.blocks = biconnected_components(g)
        self.cuts = frozenset(cut_vertices(g))
        self.incident: dict[int, list[int]] = {}
        for i, blk in enumerate(self.blocks):
            for v in blk:
                self.incident.setdefault(v, []).append(i)
        self._cut_memo: dict[tuple[int, Optional[int]], bytes] = {}

    def vertex_label(self, v: int, parent_block: int, root: Optional[int]) -> bytes:
        child = b""
        if v in self.cuts and v != root:
            child = self.cut_code(v, parent_block)
        return pack(b"L", [enc_int(self.g.colors[v]), child])

    def cut_code(self, v: int, parent_block: Optional[int]) -> bytes:
        key = (v, parent_block)
        if key in self._cut_memo:
            return self._cut_memo[key]
        children = [b for b in self.incident[v] if b != parent_block]
        parts = [enc_int(self.g.colors[v])]
        parts.extend(sorted(self.block_code(b, v) for b in children))
        code = pack(b"c", parts)
        self._cut_memo[key] = code
        return code

    def block_code(self, bid: int, root: Optional[int]) -> bytes:
        verts = self.blocks[bid]
        labels = {v: self.vertex_label(v, bid, root) for v in verts}
        k = len(verts)
        complete = all(
            self.g.has_edge(verts[i], verts[j])
            for i in range(k)
            for j in range(i + 1, k)
        )
        if complete:
            if root is None:
                return pack(b"K0", [enc_int(k)] + sorted(labels.values()))
            others = sorted(labels[v] for v in verts if v != root)
            return pack(b"K1", [enc_int(k), labels[root]] + others)
        sub, rel = induced_subgraph(self.g, verts)
        try:
            cs = hamiltonian_cycle(sub)
        except NotOuterplanarBlockError as exc:
            raise UnsupportedBlockError(
                f"block {verts} is neither complete nor outerplanar"
            ) from exc
        inv = {new: old for old, new in rel.items()}
        gcycle = [inv[x] for x in cs.cycle]
        gchords = [frozenset((inv[u], inv[v])) for u, v in cs.chords]
        candidates = dihedral_orders(gcycle)
        if root is not None:
            candidates = [c for c in candidates if c[0] == root]
        tag = b"O0" if root is None else b"O1"
        best = min(tag + _order_encoding(c, gchords, labels) for c in candidates)
        return best


def rooted_code(g: ColoredGraph, root: Optional[int]) -> bytes:
    """Canonical byte code of a connected colored graph, optionally rooted."""
    if not is_connected(g):
        raise NotConnectedError("canonical codes require a connected graph")
    if g.n == 0:
        return b"E"
    if g.n == 1:
        return pack(b"V", [enc_int(g.colors[0])])
    ctx = _CodeCtx(g)
    if root is None:
        t = block_tree(g)
        kind, idx = t.center
        if kind == "c":
            return ctx.cut_code(idx, None)
        # the block tuples in _CodeCtx and block_tree share the ordering
        bid = ctx.blocks.index(t.blocks[idx])
        return ctx.block_code(bid, None)
    if not (0 <= root < g.n):
        raise ValueError("root outside vertex range")
    if root in ctx.cuts:
        return ctx.cut_code(root, None)
    bid = ctx.incident[root][0]
    return ctx.block_code(bid, root)


def canon_code(r: RootedGraph, graph_class=None) -> CanonCode:
    """Canonical code under rooted colored isomorphism.

    `graph_class` is accepted for callers that already classified the graph;
    unsupported blocks are rejected during coding either way.
    """
    tag = b"U" if r.root is None else b"R"
    return CanonCode(pack(tag, [rooted_code(r.graph, r.root)]))
