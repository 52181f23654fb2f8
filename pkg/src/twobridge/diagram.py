"""Alternating two-bridge diagrams and their Seifert data, built explicitly.

This is the brute-force side of the verification pair: diagrams are
assembled crossing by crossing, oriented, signed, Seifert-smoothed and
turned into a signed multigraph, with no reference to the closed-form
block formulas they are later checked against.

Encoding.  A crossing has four ports in cyclic order

        0 (NW)   1 (NE)
        3 (SW)   2 (SE)

The strand through a crossing joins port x to port x^2 (0<->2, 1<->3);
``over`` records which of the two diagonals is on top (0 for NW-SE,
1 for NE-SW).  Both builders lay crossings out on three vertical lanes
read top to bottom, where a crossing on lanes (l, l+1) takes the
previous lane-l strand into port 0 and the lane-(l+1) strand into
port 1.  A closure is a set of crossing-free arcs pairing the loose
top/bottom ends of the lanes.  No planar embedding is stored; twist
region and tangle membership is kept per crossing instead, which is all
the structural checks need.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .contfrac import blocks_to_signed, eval_even_cf, eval_reg_cf

# port coordinates in a right-handed frame, for crossing signs
_COORD = {0: (-1, 1), 1: (1, 1), 2: (1, -1), 3: (-1, -1)}


@dataclass(frozen=True)
class Crossing:
    id: int
    sign: int
    twist_region: int
    over: int  # 0: NW-SE strand on top, 1: NE-SW strand on top
    connections: tuple[tuple[int, int], ...]  # per port: (crossing id, port)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    # each component is a cyclic list of passes (crossing id, entry port),
    # in traversal order; the traversal order fixes the orientation
    components: tuple[tuple[tuple[int, int], ...], ...]
    builder: str

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)


@dataclass(frozen=True)
class SignedEdge:
    u: int
    v: int
    sign: int


@dataclass(frozen=True)
class SeifertGraph:
    vertices: tuple[int, ...]
    edges: tuple[SignedEdge, ...]


@dataclass(frozen=True)
class DiagramStats:
    s: int
    w: int
    d_plus: int
    d_minus: int
    reduced: bool | None = None


class TreeSignAmbiguity(AssertionError):
    """Spanning-tree sign counts would depend on the tree choice."""


# ---------------------------------------------------------------------------
# word assembly


def _assemble(
    word: list[tuple[int, int]],
    regions: list[int],
    n_lanes: int,
    closure: list[tuple[tuple[str, int], tuple[str, int]]],
    builder: str,
    flip_for_purity: bool = False,
) -> LinkDiagram:
    """Wire up a lane word plus closure arcs into a LinkDiagram.

    ``word`` lists crossings top to bottom as (lane, over) with the
    crossing occupying lanes (lane, lane+1); ``over`` is 1 when the
    strand entering at the right lane runs on top.  When
    ``flip_for_purity`` is set the orientation of the second component
    (if any) is chosen so that every crossing sign matches the parity
    of its twist_region tag, +1 on odd tags.
    """
    n = len(word)
    links: dict = {}

    def connect(a, b):
        links.setdefault(a, []).append(b)
        links.setdefault(b, []).append(a)

    frontier = {lane: ("e", "T", lane) for lane in range(n_lanes)}
    for k, (lane, _) in enumerate(word):
        connect(frontier[lane], ("c", k, 0))
        connect(frontier[lane + 1], ("c", k, 1))
        frontier[lane] = ("c", k, 3)
        frontier[lane + 1] = ("c", k, 2)
    for lane in range(n_lanes):
        connect(frontier[lane], ("e", "B", lane))
    for (s1, l1), (s2, l2) in closure:
        connect(("e", s1, l1), ("e", s2, l2))

    # splice the crossing-free arcs out: direct port-to-port connectivity
    conn: dict[tuple[int, int], tuple[int, int]] = {}
    seen_endpoints = set()
    for k in range(n):
        for port in range(4):
            if (k, port) in conn:
                continue
            prev = ("c", k, port)
            cur = links[prev][0]
            while cur[0] == "e":
                seen_endpoints.add(cur)
                a, b = links[cur]
                prev, cur = cur, (b if a == prev else a)
            conn[(k, port)] = (cur[1], cur[2])
    if len(seen_endpoints) != 2 * n_lanes:
        raise ValueError("closure produced a crossing-free loop")

    # trace components; entering a crossing at port x leaves it at x^2
    visited: set[tuple[int, int]] = set()
    components: list[list[tuple[int, int]]] = []
    for k in range(n):
        for port in range(4):
            if (k, port) in visited:
                continue
            walk = []
            cid, entry = k, port
            while (cid, entry) not in visited:
                visited.add((cid, entry))
                visited.add((cid, entry ^ 2))
                walk.append((cid, entry))
                cid, entry = conn[(cid, entry ^ 2)]
            components.append(walk)

    def signs_for(comps):
        direction = {}
        for comp in comps:
            for cid, entry in comp:
                direction[(cid, entry)] = True
                direction[(cid, entry ^ 2)] = False
        out = []
        for cid, (lane, over) in enumerate(word):
            over_ports = (0, 2) if over == 0 else (1, 3)
            under_ports = (1, 3) if over == 0 else (0, 2)
            d_over = _dir_vector(direction, cid, over_ports)
            d_under = _dir_vector(direction, cid, under_ports)
            cross_z = d_over[0] * d_under[1] - d_over[1] * d_under[0]
            out.append(1 if cross_z > 0 else -1)
        return out

    def flipped(comp):
        return [(cid, entry ^ 2) for cid, entry in reversed(comp)]

    signs = signs_for(components)
    if flip_for_purity:
        if len(components) > 2:
            raise ValueError(f"{len(components)} components in a two-bridge diagram")
        want = [1 if regions[cid] % 2 else -1 for cid in range(n)]
        if signs != want and len(components) == 2:
            alt = [components[0], flipped(components[1])]
            alt_signs = signs_for(alt)
            if alt_signs == want:
                components, signs = alt, alt_signs
        if signs != want:
            raise AssertionError("no orientation makes the tangle signs pure")

    crossings = tuple(
        Crossing(
            id=k,
            sign=signs[k],
            twist_region=regions[k],
            over=word[k][1],
            connections=tuple(conn[(k, port)] for port in range(4)),
        )
        for k in range(n)
    )
    return LinkDiagram(
        crossings=crossings,
        components=tuple(tuple(c) for c in components),
        builder=builder,
    )


def _dir_vector(direction, cid, ports):
    a, b = ports
    src, dst = (a, b) if direction[(cid, a)] else (b, a)
    xa, ya = _COORD[src]
    xb, yb = _COORD[dst]
    return (xb - xa, yb - ya)


# ---------------------------------------------------------------------------
# the two constructions


def build_standard(reg_coeffs: list[int]) -> LinkDiagram:
    """Standard alternating diagram from an odd regular expansion.

    Box r (1-based) holds c_r half twists; odd boxes twist the middle
    and right lanes, even boxes the left and middle lanes.  The loose
    ends close with a cap on top, a cup at the bottom and an arc around
    the right side.  Over/under is forced by alternation once the first
    box's handedness is fixed.
    """
    if not reg_coeffs or len(reg_coeffs) % 2 == 0:
        raise ValueError(f"need an odd-length expansion, got {reg_coeffs}")
    if any(c < 1 for c in reg_coeffs):
        raise ValueError(f"regular coefficients must be positive: {reg_coeffs}")
    word = []
    regions = []
    for r, c in enumerate(reg_coeffs, start=1):
        # handedness chosen so the expansion [1,1,1] of 3/2 yields the
        # positive trefoil, matching its classification
        lane = 1 if r % 2 else 0
        over = 0 if r % 2 else 1
        word.extend([(lane, over)] * c)
        regions.extend([r] * c)
    closure = [
        (("T", 0), ("T", 1)),
        (("B", 0), ("B", 1)),
        (("T", 2), ("B", 2)),
    ]
    diagram = _assemble(word, regions, 3, closure, "standard")
    p = eval_reg_cf(reg_coeffs).p
    expected = 1 if p % 2 else 2
    if len(diagram.components) != expected:
        raise AssertionError(
            f"standard diagram of {reg_coeffs} has {len(diagram.components)} "
            f"components, expected {expected}"
        )
    return diagram


def build_murasugi(blocks: list[list[int]]) -> LinkDiagram:
    """Alternating tangle diagram from all-even expansion blocks.

    Tangle i (1-based) is the three-lane braid

        s1^(1-2n_i1) * prod_j [s2 * s1^(2-2n_ij)] * s1^(-1)   (i odd)
        s2^(2n_i1-1) * prod_j [s1^(-1) * s2^(2n_ij-2)] * s2   (i even)

    with s1 on lanes (0,1) and s2 on lanes (1,2); a positive generator
    puts the strand from the right lane on top.  The tangles are
    stacked and closed with one cap, one cup and a long arc whose
    attachment depends on the parity of the tangle count.  Orientations
    are fixed by requiring each crossing of tangle i to have sign
    (-1)^(i-1); for knots this holds outright, for two-component links
    it selects the orientation of the second component.
    """
    blocks_to_signed(blocks)  # validates shape
    word: list[tuple[int, int]] = []
    regions: list[int] = []

    def emit(lane, over, count, tag):
        word.extend([(lane, over)] * count)
        regions.extend([tag] * count)

    t = len(blocks)
    for i, block in enumerate(blocks, start=1):
        if i % 2:  # s1 inverse powers separated by single s2
            emit(0, 0, 2 * block[0] - 1, i)
            for n in block[1:]:
                emit(1, 1, 1, i)
                emit(0, 0, 2 * n - 2, i)
            emit(0, 0, 1, i)
        else:  # s2 powers separated by single s1 inverse
            emit(1, 1, 2 * block[0] - 1, i)
            for n in block[1:]:
                emit(0, 0, 1, i)
                emit(1, 1, 2 * n - 2, i)
            emit(1, 1, 1, i)
    if t % 2:
        closure = [
            (("T", 0), ("B", 0)),
            (("T", 1), ("T", 2)),
            (("B", 1), ("B", 2)),
        ]
    else:
        closure = [
            (("T", 0), ("B", 2)),
            (("T", 1), ("T", 2)),
            (("B", 0), ("B", 1)),
        ]
    diagram = _assemble(word, regions, 3, closure, "murasugi", flip_for_purity=True)
    p = eval_even_cf(blocks).p
    expected = 1 if p % 2 else 2
    if len(diagram.components) != expected:
        raise AssertionError(
            f"tangle diagram of {blocks} has {len(diagram.components)} "
            f"components, expected {expected}"
        )
    return diagram


# ---------------------------------------------------------------------------
# Seifert algorithm and the signed graph


def seifert_data(d: LinkDiagram) -> tuple[SeifertGraph, DiagramStats]:
    """Seifert circles, writhe and spanning-tree sign counts of a diagram.

    Each crossing is resmoothed respecting orientation (the unique
    non-crossing reconnection pairing an incoming with an outgoing
    port); circles are the orbits of smoothing plus wiring.  The graph
    gets one vertex per circle and one signed edge per crossing.
    """
    direction = {}
    for comp in d.components:
        for cid, entry in comp:
            direction[(cid, entry)] = True
            direction[(cid, entry ^ 2)] = False

    smooth: dict[tuple[int, int], tuple[int, int]] = {}
    for c in d.crossings:
        cid = c.id
        if direction[(cid, 0)] != direction[(cid, 1)]:
            pairs = ((0, 1), (2, 3))
        else:
            pairs = ((1, 2), (3, 0))
        for a, b in pairs:
            if direction[(cid, a)] == direction[(cid, b)]:
                raise AssertionError(f"inconsistent orientation at crossing {cid}")
            smooth[(cid, a)] = (cid, b)
            smooth[(cid, b)] = (cid, a)

    circle: dict[tuple[int, int], int] = {}
    s = 0
    for c in d.crossings:
        for port in range(4):
            start = (c.id, port)
            if start in circle:
                continue
            node = start
            while node not in circle:
                circle[node] = s
                partner = smooth[node]
                circle[partner] = s
                node = d.crossings[partner[0]].connections[partner[1]]
            s += 1

    edges = []
    for c in d.crossings:
        u = circle[(c.id, 0)]
        other = 1 if smooth[(c.id, 0)] != (c.id, 1) else 2
        v = circle[(c.id, other)]
        edges.append(SignedEdge(u, v, c.sign))
    graph = SeifertGraph(vertices=tuple(range(s)), edges=tuple(edges))

    d_plus, d_minus = spanning_tree_signs(graph)
    stats = DiagramStats(
        s=s,
        w=d.writhe,
        d_plus=d_plus,
        d_minus=d_minus,
        reduced=is_reduced(graph),
    )
    if stats.s - (stats.d_plus + stats.d_minus) != 1:
        raise AssertionError(f"spanning tree size mismatch: {stats}")
    return graph, stats


def _biconnected_edge_sets(graph: SeifertGraph) -> list[list[int]]:
    """Edge sets of the biconnected blocks; self-loops form their own."""
    index = {v: i for i, v in enumerate(graph.vertices)}
    nv = len(graph.vertices)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    blocks: list[list[int]] = []
    for eid, e in enumerate(graph.edges):
        u, v = index[e.u], index[e.v]
        if u == v:
            blocks.append([eid])
            continue
        adj[u].append((eid, v))
        adj[v].append((eid, u))

    disc = [-1] * nv
    low = [0] * nv
    estack: list[int] = []
    timer = 0
    for root in range(nv):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, in_eid, it = stack[-1]
            advanced = False
            for eid, w in it:
                if eid == in_eid:
                    continue
                if disc[w] == -1:
                    estack.append(eid)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, iter(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    estack.append(eid)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    block = []
                    while True:
                        eid = estack.pop()
                        block.append(eid)
                        if eid == in_eid:
                            break
                    blocks.append(block)
    return blocks


def is_reduced(graph: SeifertGraph) -> bool:
    """True iff no single edge disconnects the graph.

    A bridge is a biconnected block consisting of one non-loop edge;
    parallel edges always share a block and are never bridges.
    """
    for block in _biconnected_edge_sets(graph):
        if len(block) == 1:
            e = graph.edges[block[0]]
            if e.u != e.v:
                return False
    return True


def spanning_tree_signs(graph: SeifertGraph) -> tuple[int, int]:
    """Sign counts (d+, d-) of a breadth-first spanning tree.

    The counts only deserve a name if they do not depend on the chosen
    tree.  That holds exactly when every cycle carries a single sign,
    i.e. when each biconnected block is sign-pure (trees are connected
    by single-edge exchanges along cycles).  Purity is asserted here,
    not assumed; a mixed block raises TreeSignAmbiguity.
    """
    for block in _biconnected_edge_sets(graph):
        signs = {graph.edges[eid].sign for eid in block}
        if len(signs) > 1:
            raise TreeSignAmbiguity(
                f"mixed-sign block {[graph.edges[eid] for eid in block]}"
            )

    index = {v: i for i, v in enumerate(graph.vertices)}
    nv = len(graph.vertices)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    for eid, e in enumerate(graph.edges):
        u, v = index[e.u], index[e.v]
        if u != v:
            adj[u].append((eid, v))
            adj[v].append((eid, u))
    seen = [False] * nv
    seen[0] = True
    reached = 1
    counts = {1: 0, -1: 0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for eid, w in adj[u]:
            if not seen[w]:
                seen[w] = True
                reached += 1
                counts[graph.edges[eid].sign] += 1
                queue.append(w)
    if reached != nv:
        raise ValueError("graph is not connected")
    return counts[1], counts[-1]


def is_alternating(d: LinkDiagram) -> bool:
    """True iff along every strand the passes alternate over/under."""
    for comp in d.components:
        overs = []
        for cid, entry in comp:
            diag = 0 if entry in (0, 2) else 1
            overs.append(diag == d.crossings[cid].over)
        if len(overs) % 2:
            return False
        for i in range(len(overs)):
            if overs[i] == overs[i - 1]:
                return False
    return True


def diagram_record(d: LinkDiagram) -> dict:
    """JSON-ready export: crossing list with signs and connectivity."""
    return {
        "builder": d.builder,
        "crossings": [
            {
                "id": c.id,
                "sign": c.sign,
                "twist_region": c.twist_region,
                "over": c.over,
                "connections": [list(pair) for pair in c.connections],
            }
            for c in d.crossings
        ],
        "components": [[list(step) for step in comp] for comp in d.components],
    }
