"""Biconnected decomposition, block tree with center/levels, rooted subgraphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import NotConnectedError, UnknownNodeError
from .graph import ColoredGraph, induced_subgraph, is_connected

# Block-tree nodes: ('b', block_index) or ('c', cut_vertex)
Node = tuple[str, int]


@dataclass(frozen=True)
class RootedGraph:
    """A graph with an optional pinned root vertex."""

    graph: ColoredGraph
    root: Optional[int] = None

    def __post_init__(self):
        if self.root is not None and not (0 <= self.root < self.graph.n):
            raise ValueError("root outside vertex range")


@dataclass(frozen=True)
class BlockTree:
    blocks: tuple[tuple[int, ...], ...]
    cuts: tuple[int, ...]
    tree_edges: frozenset[tuple[int, int]]  # (block index, cut vertex)
    center: Node
    level: dict[Node, int]
    parent: dict[Node, Optional[Node]]

    def nodes(self) -> list[Node]:
        return [("b", i) for i in range(len(self.blocks))] + [
            ("c", v) for v in self.cuts
        ]

    def children(self, node: Node) -> list[Node]:
        return sorted(n for n, p in self.parent.items() if p == node)


def _dfs_blocks(g: ColoredGraph) -> tuple[list[set[int]], set[int]]:
    """Iterative Hopcroft-Tarjan: blocks as vertex sets, plus cut vertices."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts: set[int] = set()
    blocks: list[set[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    for start in range(n):
        if disc[start] != -1:
            continue
        root_children = 0
        stack = [(start, iter(sorted(g.adjacency[start])))]
        disc[start] = low[start] = timer
        timer += 1
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    parent[v] = u
                    if u == start:
                        root_children += 1
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, iter(sorted(g.adjacency[v]))))
                    advanced = True
                    break
                elif v != parent[u] and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    # p separates the subtree at u: pop one block
                    if p != start or low[u] > disc[p] or True:
                        block_edges = []
                        while edge_stack:
                            e = edge_stack.pop()
                            block_edges.append(e)
                            if e == (p, u):
                                break
                        verts = {p}
                        for a, b in block_edges:
                            verts.add(a)
                            verts.add(b)
                        blocks.append(verts)
                        if p != start:
                            cuts.add(p)
        if root_children >= 2:
            cuts.add(start)
    return blocks, cuts


def cut_vertices(g: ColoredGraph) -> tuple[int, ...]:
    _, cuts = _dfs_blocks(g)
    return tuple(sorted(cuts))


def biconnected_components(g: ColoredGraph) -> list[tuple[int, ...]]:
    """Blocks as sorted vertex tuples, ordered by (min vertex, tuple).

    Isolated vertices yield no block (a block always carries an edge).
    """
    blocks, _ = _dfs_blocks(g)
    return sorted((tuple(sorted(b)) for b in blocks), key=lambda t: (t[0], t))


def block_tree(g: ColoredGraph) -> BlockTree:
    if not is_connected(g):
        raise NotConnectedError("block tree requires a connected graph")
    if g.n == 1:
        # degenerate single-vertex block
        blk = ((0,),)
        center: Node = ("b", 0)
        return BlockTree(
            blocks=blk,
            cuts=(),
            tree_edges=frozenset(),
            center=center,
            level={center: 0},
            parent={center: None},
        )
    blocks = biconnected_components(g)
    cuts = cut_vertices(g)
    cutset = set(cuts)
    tree_edges = frozenset(
        (i, v) for i, blk in enumerate(blocks) for v in blk if v in cutset
    )
    nodes: list[Node] = [("b", i) for i in range(len(blocks))] + [
        ("c", v) for v in cuts
    ]
    adj: dict[Node, set[Node]] = {nd: set() for nd in nodes}
    for i, v in tree_edges:
        adj[("b", i)].add(("c", v))
        adj[("c", v)].add(("b", i))

    # leaf peeling: level = round at which a node becomes a leaf
    level: dict[Node, int] = {}
    deg = {nd: len(adj[nd]) for nd in nodes}
    remaining = set(nodes)
    rnd = 0
    while remaining:
        leaves = sorted(nd for nd in remaining if deg[nd] <= 1)
        if len(leaves) == len(remaining) and len(leaves) > 1 and rnd > 0:
            raise RuntimeError("block tree has no unique center")  # cannot happen
        for nd in leaves:
            level[nd] = rnd
        if len(remaining) == len(leaves) and len(leaves) == 1:
            center = leaves[0]
            remaining.clear()
            break
        for nd in leaves:
            remaining.discard(nd)
            for w in adj[nd]:
                if w in remaining:
                    deg[w] -= 1
        if len(remaining) == 1:
            center = next(iter(remaining))
            level[center] = rnd + 1
            remaining.clear()
            break
        if not remaining:
            # simultaneous removal of >1 node at the last round would mean a
            # two-node center, which block trees never have
            if len(leaves) != 1:
                raise RuntimeError("block tree has no unique center")
            center = leaves[0]
            break
        rnd += 1

    # orient toward center
    parent: dict[Node, Optional[Node]] = {center: None}
    frontier = [center]
    while frontier:
        nd = frontier.pop()
        for w in sorted(adj[nd]):
            if w not in parent:
                parent[w] = nd
                frontier.append(w)
    return BlockTree(
        blocks=tuple(blocks),
        cuts=cuts,
        tree_edges=tree_edges,
        center=center,
        level=level,
        parent=parent,
    )


def subtree_vertices(t: BlockTree, node: Node) -> tuple[int, ...]:
    """Graph vertices covered by the block-tree subtree rooted at `node`."""
    if node not in t.parent:
        raise UnknownNodeError(f"node {node} not in block tree")
    verts: set[int] = set()
    stack = [node]
    while stack:
        nd = stack.pop()
        if nd[0] == "b":
            verts.update(t.blocks[nd[1]])
        else:
            verts.add(nd[1])
        stack.extend(t.children(nd))
    return tuple(sorted(verts))


def subgraph_below(
    g: ColoredGraph, t: BlockTree, node: Node
) -> tuple[RootedGraph, dict[int, int]]:
    """Induced subgraph X^{<=node}; rooted at the cut vertex for cut nodes.

    Returns the rooted graph and the old->new vertex relabel map.
    """
    verts = subtree_vertices(t, node)
    sub, relabel_map = induced_subgraph(g, verts)
    root = relabel_map[node[1]] if node[0] == "c" else None
    return RootedGraph(graph=sub, root=root), relabel_map


def child_cut_vertices(t: BlockTree, block_index: int) -> tuple[int, ...]:
    """Cut vertices of the block whose parent (in the oriented tree) is the block."""
    out = [
        nd[1] for nd in t.children(("b", block_index)) if nd[0] == "c"
    ]
    return tuple(sorted(out))


def child_blocks(t: BlockTree, cut_vertex: int) -> tuple[int, ...]:
    out = [nd[1] for nd in t.children(("c", cut_vertex)) if nd[0] == "b"]
    return tuple(sorted(out))
