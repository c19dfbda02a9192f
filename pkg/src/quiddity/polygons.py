"""Triangulations of convex polygons and their dual binary trees.

Vertices of the n-gon are 0..n-1 in counterclockwise order (figures in the
literature are usually 1-indexed; everything here is 0-indexed).  Side i
joins vertices i and i+1, and the root side, called ``a``, is the one
joining n-1 and 0, so that vertex 0 is the counterclockwise endpoint of
the root side.

A triangulation is a set of n-3 pairwise non-crossing diagonals; its
quiddity sequence records, per vertex, the number of incident triangles.
The dual graph, rooted at side ``a``, is a full binary tree whose internal
nodes are the triangles and whose n-1 leaves are the remaining sides
b, c, d, ...; counting the internal nodes passed between consecutive
leaves of the depth-first traversal recovers the quiddity sequence.

Exhaustive enumeration of all triangulations (there are C_{n-2} of them,
Catalan) is deterministic: recursion on the apex of the triangle resting
on the base edge, apex increasing, left sub-polygon before right.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import eta
from .errors import InvalidSequenceError, NotQuiddityError

DEFAULT_ENUM_CAP = 16


@dataclass(frozen=True)
class Triangulation:
    """n vertices in convex position plus a sorted tuple of diagonals."""

    n: int
    diagonals: tuple

    def to_json_dict(self):
        return {"n": self.n, "diagonals": [list(d) for d in self.diagonals]}


def _crosses(d1, d2) -> bool:
    a, b = d1
    c, d = d2
    return (a < c < b < d) or (c < a < d < b)


def validate_triangulation(t: Triangulation) -> None:
    """Check ranges, non-adjacency, non-crossing and the n-3 count."""
    n = t.n
    if n < 3:
        raise InvalidSequenceError(f"polygon needs at least 3 vertices, got {n}")
    seen = set()
    for d in t.diagonals:
        if len(d) != 2:
            raise InvalidSequenceError(f"diagonal {d!r} is not a vertex pair")
        u, v = d
        if not (0 <= u < v < n):
            raise InvalidSequenceError(f"diagonal {d!r} out of range or unsorted")
        if v - u == 1 or (u == 0 and v == n - 1):
            raise InvalidSequenceError(f"{d!r} is a polygon side, not a diagonal")
        if d in seen:
            raise InvalidSequenceError(f"duplicate diagonal {d!r}")
        seen.add(d)
    if len(t.diagonals) != n - 3:
        raise InvalidSequenceError(
            f"expected {n - 3} diagonals for an {n}-gon, got {len(t.diagonals)}"
        )
    diags = list(t.diagonals)
    for i in range(len(diags)):
        for j in range(i + 1, len(diags)):
            if _crosses(diags[i], diags[j]):
                raise InvalidSequenceError(f"diagonals {diags[i]} and {diags[j]} cross")


def make_triangulation(n: int, diagonals) -> Triangulation:
    t = Triangulation(n=n, diagonals=tuple(sorted(tuple(sorted(d)) for d in diagonals)))
    validate_triangulation(t)
    return t


def triangles(t: Triangulation):
    """The n-2 triangles as sorted vertex triples, in arc-recursion order."""
    chords = set(t.diagonals)

    def has_edge(u, v):
        return v - u == 1 or (u, v) in chords

    out = []

    def rec(lo, hi):
        if hi - lo < 2:
            return
        for apex in range(lo + 1, hi):
            if has_edge(lo, apex) and has_edge(apex, hi):
                out.append((lo, apex, hi))
                rec(lo, apex)
                rec(apex, hi)
                return
        raise InvalidSequenceError(f"no triangle on chord ({lo},{hi}); malformed set")

    rec(0, t.n - 1)
    return out


def to_quiddity(t: Triangulation) -> tuple:
    """Per-vertex incident-triangle counts."""
    validate_triangulation(t)
    counts = [0] * t.n
    for tri in triangles(t):
        for v in tri:
            counts[v] += 1
    return tuple(counts)


def from_quiddity(entries) -> Triangulation:
    """The triangulation whose vertex counts equal the given sequence.

    Built by repeated ear clipping: an entry 1 marks an ear; cutting it
    off adds the diagonal joining its neighbours and decrements them.
    The sequence must be a valid quiddity sequence.
    """
    seq = eta.as_sequence(entries)
    if not eta.is_eta(seq):
        raise NotQuiddityError(f"{eta.format_sequence(seq)} is not a quiddity sequence")
    n = len(seq)
    labels = list(range(n))
    counts = list(seq)
    diagonals = []
    while len(labels) > 3:
        m = len(labels)
        for i in range(m):
            if counts[i] == 1:
                u, v = labels[i - 1], labels[(i + 1) % m]
                diagonals.append((min(u, v), max(u, v)))
                counts[i - 1] -= 1
                counts[(i + 1) % m] -= 1
                del counts[i]
                del labels[i]
                break
        else:  # cannot happen for valid input
            raise NotQuiddityError("ear clipping stalled on a valid sequence")
    return Triangulation(n=n, diagonals=tuple(sorted(diagonals)))


def enumerate_triangulations(n: int, cap: int = DEFAULT_ENUM_CAP):
    """Yield every triangulation of the n-gon exactly once, deterministically."""
    if not 3 <= n <= cap:
        raise ValueError(f"n must be in 3..{cap}, got {n}")

    def rec(lo, hi):
        if hi - lo < 2:
            yield ()
            return
        for apex in range(lo + 1, hi):
            extra = ()
            if apex - lo >= 2:
                extra += ((lo, apex),)
            if hi - apex >= 2:
                extra += ((apex, hi),)
            for left in rec(lo, apex):
                for right in rec(apex, hi):
                    yield left + right + extra

    for diags in rec(0, n - 1):
        yield Triangulation(n=n, diagonals=tuple(sorted(diags)))


def iter_quiddities(n: int, cap: int = DEFAULT_ENUM_CAP):
    """Yield the quiddity sequence of every triangulation of the n-gon.

    Same recursion (and order) as :func:`enumerate_triangulations`, but the
    vertex counts are accumulated in place, which makes exhaustive sweeps
    over hundreds of thousands of triangulations practical.
    """
    if not 3 <= n <= cap:
        raise ValueError(f"n must be in 3..{cap}, got {n}")
    counts = [0] * n

    def rec(lo, hi):
        if hi - lo < 2:
            yield True
            return
        for apex in range(lo + 1, hi):
            counts[lo] += 1
            counts[apex] += 1
            counts[hi] += 1
            for _ in rec(lo, apex):
                yield from rec(apex, hi)
            counts[lo] -= 1
            counts[apex] -= 1
            counts[hi] -= 1

    for _ in rec(0, n - 1):
        yield tuple(counts)


class Leaf:
    """A polygon side other than the root side."""

    __slots__ = ("side",)

    def __init__(self, side):
        self.side = side

    is_leaf = True


class Branch:
    """A triangle; children ordered counterclockwise from the entry edge."""

    __slots__ = ("left", "right")

    def __init__(self, left, right):
        self.left = left
        self.right = right

    is_leaf = False


@dataclass(frozen=True)
class DualTree:
    """Rooted full binary dual tree of a triangulation.

    ``root_side`` is the polygon side the tree hangs from, in original
    vertex labels; leaf ``side`` indices count sides counterclockwise
    starting just after the root side (0 is the side named ``b``).
    """

    n: int
    root: object
    root_side: tuple


def side_name(index: int) -> str:
    """b, c, d, ... for leaf sides (the root side is named a)."""
    if index < 25:
        return chr(ord("b") + index)
    return f"s{index + 1}"


def to_dual_tree(t: Triangulation, root_side=None) -> DualTree:
    """Build the dual tree rooted at a polygon side (default: side a = (n-1, 0)).

    For the entry edge of each triangle, the child across the next side
    counterclockwise is the left child; this makes the depth-first run
    counts spell the quiddity sequence starting at the counterclockwise
    endpoint of the root side.
    """
    validate_triangulation(t)
    n = t.n
    if root_side is None:
        root_side = (n - 1, 0)
    u, v = root_side
    if (u + 1) % n == v:
        start = v
    elif (v + 1) % n == u:
        start = u
    else:
        raise InvalidSequenceError(f"{root_side!r} is not a polygon side")
    # relabel so the root side becomes (n-1, 0)
    chords = set()
    for a, b in t.diagonals:
        x, y = (a - start) % n, (b - start) % n
        chords.add((min(x, y), max(x, y)))

    def has_edge(a, b):
        return b - a == 1 or (a, b) in chords

    def build(lo, hi):
        if hi - lo == 1:
            return Leaf(lo)
        for apex in range(lo + 1, hi):
            if has_edge(lo, apex) and has_edge(apex, hi):
                return Branch(build(lo, apex), build(apex, hi))
        raise InvalidSequenceError(f"no triangle on chord ({lo},{hi}); malformed set")

    return DualTree(n=n, root=build(0, n - 1), root_side=(u, v))


def tree_quiddity(tree: DualTree) -> tuple:
    """Depth-first run-count readout of the dual tree.

    Walk the Euler tour; every time a leaf is reached, emit the number of
    internal-node visits since the previous leaf.  The final climb back to
    the root edge emits the last entry.  The result is the quiddity
    sequence starting at the counterclockwise endpoint of the root side.
    """
    runs = []
    count = 0

    def tour(node):
        nonlocal count
        if node.is_leaf:
            runs.append(count)
            count = 0
            return
        count += 1
        tour(node.left)
        count += 1
        tour(node.right)
        count += 1

    tour(tree.root)
    runs.append(count)
    return tuple(runs)


def leaf_count(tree: DualTree) -> int:
    def walk(node):
        return 1 if node.is_leaf else walk(node.left) + walk(node.right)

    return walk(tree.root)


def internal_count(tree: DualTree) -> int:
    def walk(node):
        return 0 if node.is_leaf else 1 + walk(node.left) + walk(node.right)

    return walk(tree.root)


def bracket(tree: DualTree) -> str:
    """Nested-pair string with leaf side names, e.g. (b,(c,(d,e)))."""

    def walk(node):
        if node.is_leaf:
            return side_name(node.side)
        return f"({walk(node.left)},{walk(node.right)})"

    return walk(tree.root)


def tree_to_dot(tree: DualTree) -> str:
    """GraphViz digraph of the dual tree; internal nodes t0, t1, ... in preorder."""
    lines = ["digraph dualtree {", '  root [label="a", shape=none];']
    counter = 0

    def walk(node):
        nonlocal counter
        if node.is_leaf:
            name = f"leaf_{node.side}"
            lines.append(f'  {name} [label="{side_name(node.side)}", shape=none];')
            return name
        name = f"t{counter}"
        counter += 1
        lines.append(f'  {name} [label="{name}", shape=circle];')
        left = walk(node.left)
        right = walk(node.right)
        lines.append(f"  {name} -> {left};")
        lines.append(f"  {name} -> {right};")
        return name

    top = walk(tree.root)
    lines.append(f"  root -> {top};")
    lines.append("}")
    return "\n".join(lines)


def triangulation_to_dot(t: Triangulation) -> str:
    """GraphViz graph of the polygon: solid sides, dashed diagonals."""
    lines = ["graph polygon {"]
    for i in range(t.n):
        lines.append(f"  {i} -- {(i + 1) % t.n};")
    for u, v in t.diagonals:
        lines.append(f"  {u} -- {v} [style=dashed];")
    lines.append("}")
    return "\n".join(lines)
