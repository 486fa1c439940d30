"""Recursive computation of quantum automorphism groups over the block tree.

The recursion follows the center of the block tree: a central cut vertex
contributes a free product of free wreaths over isomorphism classes of its
branches; a central block contributes a free inhomogeneous wreath of branch
stabilizers over the orbits of the block's own quantum group, with child cut
vertices colored by the rooted-isomorphism type of what hangs below them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from . import canon
from .blocks import (
    BlockTree,
    RootedGraph,
    biconnected_components,
    block_tree,
    cut_vertices,
    subgraph_below,
)
from .classrec import GraphClass, classify, hamiltonian_cycle
from .errors import (
    ClassRefusedError,
    NotConnectedError,
    NotOuterplanarBlockError,
    UnsupportedBlockError,
)
from .graph import (
    ColoredGraph,
    complement,
    connected_components,
    induced_subgraph,
    is_connected,
)
from .qexpr import (
    TRIVIAL,
    QGroupExpr,
    classical,
    free_product,
    free_wreath,
    inhom_free_wreath,
    is_classical,
    quantum_orbits,
    symq,
)
from .wl import stable_coloring, vertex_classes

FORCED_ASSUMPTION = (
    "iso <=> quantum-iso assumed for encountered rooted subgraphs (mixed-class mode)"
)


@dataclass(frozen=True)
class QutResult:
    expr: QGroupExpr
    assumptions: tuple[str, ...]
    graph_class: GraphClass


class _Ctx:
    """Per-computation memo keyed by rooted canonical codes."""

    def __init__(self) -> None:
        self.memo: dict[bytes, QGroupExpr] = {}


# ---------------------------------------------------------------------------
# block atoms
# ---------------------------------------------------------------------------


def _labeled(b: ColoredGraph, labels: Sequence[bytes]) -> ColoredGraph:
    uniq = sorted(set(labels))
    rank = {lab: i for i, lab in enumerate(uniq)}
    return ColoredGraph(
        n=b.n, edges=b.edges, colors=tuple(rank[lab] for lab in labels)
    )


def _four_atom(
    bb: ColoredGraph, labels: Sequence[bytes]
) -> tuple[QGroupExpr, list[tuple[int, ...]]]:
    """Qut of an unpinned 4-vertex non-complete block via its complement.

    The complement of such a block is a disjoint union of K2 and K1 pieces;
    isomorphism classes of pieces drive the composition, label classes within
    a piece class drive the orbit partition.
    """
    h = complement(bb)
    comps = connected_components(h)
    groups: dict[tuple, list[tuple[int, ...]]] = {}
    for comp in comps:
        key = (len(comp), tuple(sorted(labels[v] for v in comp)))
        groups.setdefault(key, []).append(comp)
    parts: list[QGroupExpr] = []
    orbits: list[tuple[int, ...]] = []
    for key in sorted(groups):
        members = groups[key]
        k = len(members)
        size = key[0]
        if size == 1:
            parts.append(free_wreath(TRIVIAL, symq(k)))
            orbits.append(tuple(sorted(v for comp in members for v in comp)))
            continue
        u, v = members[0]
        if labels[u] == labels[v]:
            parts.append(free_wreath(symq(2), symq(k)))
            orbits.append(tuple(sorted(x for comp in members for x in comp)))
            continue
        if k == 1:
            parts.append(TRIVIAL)
            for x in sorted((u, v), key=lambda y: labels[y]):
                orbits.append((x,))
            continue
        # two complement-K2 copies with distinct endpoint labels: the copies
        # can only be swapped label-respectingly and simultaneously, giving a
        # diagonal involution on all four vertices
        group = canon.ClassicalPermGroup(
            degree=4, generators=((1, 0, 3, 2),), order=2
        )
        by_label: dict[bytes, list[int]] = {}
        for comp in members:
            for x in comp:
                by_label.setdefault(labels[x], []).append(x)
        return classical(group), [
            tuple(sorted(by_label[lab])) for lab in sorted(by_label)
        ]
    return free_product(parts), orbits


def _dihedral_atom(
    bb: ColoredGraph, labels: Sequence[bytes], pin: Optional[int]
) -> tuple[QGroupExpr, list[tuple[int, ...]]]:
    """Classical route for outerplanar blocks: all symmetry is dihedral."""
    try:
        cs = hamiltonian_cycle(bb)
    except NotOuterplanarBlockError as exc:
        raise UnsupportedBlockError(
            "block is neither complete nor outerplanar"
        ) from exc
    n = bb.n
    lab_of = {v: labels[v] for v in range(n)}
    best_order, sym_maps = canon.dihedral_symmetries(cs.cycle, cs.chords, lab_of)
    elements = [tuple(sigma[v] for v in range(n)) for sigma in sym_maps]
    raw_group = canon.group_from_elements(n, elements)
    aut_orbits = canon.orbits(raw_group, range(n))
    wl_classes = vertex_classes(stable_coloring(bb))
    orbs = quantum_orbits(aut_orbits, wl_classes)
    phi = {v: i for i, v in enumerate(best_order)}
    orbs = sorted(orbs, key=lambda orb: min(phi[v] for v in orb))
    order = raw_group.order
    if order == 1:
        return TRIVIAL, orbs
    if n == 4 and pin is not None:
        moved = [
            v
            for v in range(n)
            if any(p[v] != v for p in elements)
        ]
        if order == 2 and len(moved) == 2:
            # pinned 4-vertex stabilizer: a single transposition, i.e. the
            # full quantum vertex stabilizer of C4 or the diamond
            return symq(2), orbs
    conj = [
        tuple(phi[sigma[best_order[i]]] for i in range(n)) for sigma in sym_maps
    ]
    group = canon.group_from_elements(n, conj)
    return classical(group), orbs


def _block_atom(
    b: ColoredGraph, labels: Sequence[bytes], pin: Optional[int]
) -> tuple[QGroupExpr, list[tuple[int, ...]]]:
    """Dispatch for a single block, returning (expression, canonical orbits)."""
    bb = _labeled(b, labels)
    n = bb.n
    if n == 0:
        return TRIVIAL, []
    if n == 1:
        return TRIVIAL, [(0,)]
    complete = all(
        bb.has_edge(i, j) for i in range(n) for j in range(i + 1, n)
    )
    if complete:
        classes: dict[bytes, list[int]] = {}
        for v in range(n):
            classes.setdefault(labels[v], []).append(v)
        ordered = [tuple(sorted(classes[lab])) for lab in sorted(classes)]
        expr = free_product([symq(len(c)) for c in ordered])
        return expr, ordered
    if n == 4 and pin is None:
        return _four_atom(bb, labels)
    return _dihedral_atom(bb, labels, pin)


def qut_block_atom(b: ColoredGraph, pin: Optional[int] = None) -> QGroupExpr:
    """Quantum automorphism group of a single (colored, optionally pinned) block."""
    labels = [
        canon.pack(
            b"L",
            [
                canon.enc_int(b.colors[v]),
                b"",
                b"P" if v == pin else b"",
            ],
        )
        for v in range(b.n)
    ]
    expr, _ = _block_atom(b, labels, pin)
    return expr


# ---------------------------------------------------------------------------
# recursion over the block tree
# ---------------------------------------------------------------------------


def _components_without(g: ColoredGraph, removed: int) -> list[tuple[int, ...]]:
    seen = {removed}
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def _cut_formula(g: ColoredGraph, alpha: int, ctx: _Ctx) -> QGroupExpr:
    groups: dict[bytes, tuple[ColoredGraph, int, int]] = {}
    for comp in _components_without(g, alpha):
        verts = sorted(set(comp) | {alpha})
        sub, rel = induced_subgraph(g, verts)
        root = rel[alpha]
        code = canon.rooted_code(sub, root)
        if code in groups:
            rep, r, k = groups[code]
            groups[code] = (rep, r, k + 1)
        else:
            groups[code] = (sub, root, 1)
    factors = []
    for code in sorted(groups):
        rep, root, k = groups[code]
        factors.append(free_wreath(_qut_rooted(rep, root, ctx), symq(k)))
    return free_product(factors)


def _block_formula(
    g: ColoredGraph,
    block_verts: Sequence[int],
    root: Optional[int],
    ctx: _Ctx,
) -> QGroupExpr:
    cuts = set(cut_vertices(g))
    bset = set(block_verts)
    branch: dict[int, tuple[ColoredGraph, int]] = {}
    branch_code: dict[int, bytes] = {}
    for w in block_verts:
        if w not in cuts or w == root:
            continue
        below = {w}
        for comp in _components_without(g, w):
            if not (set(comp) & (bset - {w})):
                below.update(comp)
        sub, rel = induced_subgraph(g, sorted(below))
        branch[w] = (sub, rel[w])
        branch_code[w] = canon.rooted_code(sub, rel[w])
    labels_by_vertex = {
        v: canon.pack(
            b"L",
            [
                canon.enc_int(g.colors[v]),
                branch_code.get(v, b""),
                b"P" if v == root else b"",
            ],
        )
        for v in block_verts
    }
    sub_b, rel_b = induced_subgraph(g, sorted(block_verts))
    inv_b = {new: old for old, new in rel_b.items()}
    local_labels = [labels_by_vertex[inv_b[x]] for x in range(sub_b.n)]
    pin = rel_b[root] if root is not None else None
    base_expr, orbits = _block_atom(sub_b, local_labels, pin)
    factors: list[tuple[QGroupExpr, int]] = []
    for orb in orbits:
        gverts = [inv_b[x] for x in orb]
        members = [v for v in gverts if v in branch]
        if members:
            sub, r = branch[members[0]]
            factors.append((_qut_rooted(sub, r, ctx), len(orb)))
        else:
            factors.append((TRIVIAL, len(orb)))
    return inhom_free_wreath(factors, base_expr)


def _qut_rooted(g: ColoredGraph, root: Optional[int], ctx: _Ctx) -> QGroupExpr:
    code = (b"R" if root is not None else b"U") + canon.rooted_code(g, root)
    if code in ctx.memo:
        return ctx.memo[code]
    if g.n == 1:
        expr: QGroupExpr = TRIVIAL
    elif root is None:
        t = block_tree(g)
        if len(t.blocks) == 1:
            expr = _block_formula(g, t.blocks[0], None, ctx)
        elif t.center[0] == "c":
            expr = _cut_formula(g, t.center[1], ctx)
        else:
            expr = _block_formula(g, t.blocks[t.center[1]], None, ctx)
    elif root in set(cut_vertices(g)):
        expr = _cut_formula(g, root, ctx)
    else:
        blocks = biconnected_components(g)
        top = next(b for b in blocks if root in b)
        expr = _block_formula(g, top, root, ctx)
    ctx.memo[code] = expr
    return expr


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------


def qut_connected(g: ColoredGraph) -> QGroupExpr:
    if not is_connected(g):
        raise NotConnectedError("qut_connected requires a connected graph")
    return _qut_rooted(g, None, _Ctx())


def qut(g: ColoredGraph, force: bool = False) -> QutResult:
    cls = classify(g)
    assumptions: tuple[str, ...] = ()
    if cls is GraphClass.UNSUPPORTED:
        if not force:
            raise ClassRefusedError(
                "graph is outside the supported classes (forest, outerplanar,"
                " block graph); rerun with force to assume the rooted"
                " iso <=> quantum-iso hypothesis"
            )
        assumptions = (FORCED_ASSUMPTION,)
    ctx = _Ctx()
    comps = connected_components(g)
    if not comps:
        expr: QGroupExpr = TRIVIAL
    elif len(comps) == 1:
        expr = _qut_rooted(g, None, ctx)
    else:
        groups: dict[bytes, tuple[ColoredGraph, int]] = {}
        for comp in comps:
            sub, _ = induced_subgraph(g, comp)
            code = canon.rooted_code(sub, None)
            if code in groups:
                rep, k = groups[code]
                groups[code] = (rep, k + 1)
            else:
                groups[code] = (sub, 1)
        factors = []
        for code in sorted(groups):
            rep, k = groups[code]
            factors.append(free_wreath(_qut_rooted(rep, None, ctx), symq(k)))
        expr = free_product(factors)
    return QutResult(expr=expr, assumptions=assumptions, graph_class=cls)


def qut_central_cut(g: ColoredGraph, t: BlockTree, alpha: int) -> QGroupExpr:
    if t.center != ("c", alpha):
        raise ValueError(f"vertex {alpha} is not the central cut vertex")
    return _cut_formula(g, alpha, _Ctx())


def qut_rooted_cut(g: ColoredGraph, t: BlockTree, alpha: int) -> QGroupExpr:
    rg, _ = subgraph_below(g, t, ("c", alpha))
    assert rg.root is not None
    return _qut_rooted(rg.graph, rg.root, _Ctx())


def qut_central_block(g: ColoredGraph, t: BlockTree, block_index: int) -> QGroupExpr:
    if t.center != ("b", block_index):
        raise ValueError(f"block {block_index} is not the central block")
    return _block_formula(g, t.blocks[block_index], None, _Ctx())


def qut_rooted_block(
    g: ColoredGraph, t: BlockTree, block_index: int, alpha: int
) -> QGroupExpr:
    if alpha not in t.blocks[block_index]:
        raise ValueError(f"vertex {alpha} is not in block {block_index}")
    rg, rel = subgraph_below(g, t, ("b", block_index))
    return _qut_rooted(rg.graph, rel[alpha], _Ctx())


def has_quantum_symmetry(g: ColoredGraph) -> bool:
    return not is_classical(qut(g).expr)
