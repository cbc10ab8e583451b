"""Full binary trees, their embedding order, and refined Horton-Strahler numbers.

Conventions
-----------
A tree is either a leaf, ``Tree()``, or an internal node ``Tree(left, right)``
with exactly two subtrees; no other shapes exist.  A tree with n internal
nodes has n + 1 leaves, hence 2n + 1 vertices.

Positions in a tree are addressed by vertices: tuples over {1, 2}, read from
the root.  ``()`` is the root, 1 means "left child", 2 means "right child".
Python's tuple ordering coincides with the lexicographic order on vertices
(a prefix sorts before its extensions), which is the order the embedding
notion below refers to.

An embedding of ``small`` into ``big`` is an injective map between their
vertex sets that is strictly increasing for the lexicographic order and
preserves nearest common ancestors.  The classical Horton-Strahler number of
``t`` (the compiler literature's "register function") is the height of the
tallest perfect binary tree embeddable in ``t``.  The refined number
interpolates: ``tau(r)`` is the r-th member of a strictly increasing chain of
trees with ``tau(2**s - 1)`` equal to the perfect tree of height s, and
``refined_hs(t)`` is the largest r such that ``tau(r)`` embeds in ``t``.  The
classical number is recovered as ``floor(log2(1 + refined_hs(t)))``.

Text format: a leaf prints as ``.`` and an internal node as ``(`` left right
``)``.  So ``(..)`` is the single-internal-node tree, ``((..).)`` hangs that
tree on the left of a new root, and parsing rejects anything that is not a
full binary tree.
"""

from __future__ import annotations

from dataclasses import dataclass


class Tree:
    """A leaf (no arguments) or an internal node with two subtrees."""

    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        if (left is None) != (right is None):
            raise ValueError("a node has either two subtrees or none")
        self.left = left
        self.right = right

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        # iterative so that very deep trees compare without blowing the stack
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if (a.left is None) != (b.left is None):
                return False
            if a.left is not None:
                stack.append((a.left, b.left))
                stack.append((a.right, b.right))
        return True

    def __repr__(self):
        return f"Tree.parse({tree_to_text(self)!r})"

    @staticmethod
    def parse(text: str) -> "Tree":
        return parse_tree(text)


#: The unique tree with no internal node.  Shared freely; trees are immutable
#: by convention.
LEAF = Tree()

_CLOSE = object()  # sentinel for the iterative serializer


def parse_tree(text: str) -> Tree:
    """Parse the canonical text format; reject malformed or non-full input."""
    s = text.strip()
    if not s:
        raise ValueError("empty tree text")
    stack: list[list[Tree]] = []
    root = None
    for i, c in enumerate(s):
        if c == "(":
            if root is not None:
                raise ValueError(f"trailing content at index {i}")
            stack.append([])
            continue
        if c == ".":
            node = LEAF
        elif c == ")":
            if not stack:
                raise ValueError(f"unmatched ')' at index {i}")
            kids = stack.pop()
            if len(kids) != 2:
                raise ValueError(
                    f"node closed at index {i} with {len(kids)} subtrees, need 2"
                )
            node = Tree(kids[0], kids[1])
        else:
            raise ValueError(f"bad character {c!r} at index {i}")
        if stack:
            stack[-1].append(node)
            if len(stack[-1]) > 2:
                raise ValueError(f"more than two subtrees before index {i}")
        elif root is None:
            root = node
        else:
            raise ValueError(f"trailing content at index {i}")
    if stack:
        raise ValueError("unclosed '('")
    return root


def tree_to_text(t: Tree) -> str:
    """Serialize to the canonical text format."""
    out = []
    stack = [t]
    while stack:
        node = stack.pop()
        if node is _CLOSE:
            out.append(")")
        elif node.left is None:
            out.append(".")
        else:
            out.append("(")
            stack.append(_CLOSE)
            stack.append(node.right)
            stack.append(node.left)
    return "".join(out)


def internal_count(t: Tree) -> int:
    """Number of internal vertices (the tree's size parameter n)."""
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if node.left is not None:
            count += 1
            stack.append(node.left)
            stack.append(node.right)
    return count


def vertex_count(t: Tree) -> int:
    return 2 * internal_count(t) + 1


# ---------------------------------------------------------------------------
# Vertex-word model.  Vertices are tuples over {1, 2}; () is the root.

def ancestors(u: tuple) -> tuple:
    """All prefixes of u, from the root () up to u itself."""
    return tuple(u[:k] for k in range(len(u) + 1))


def meet(u: tuple, v: tuple) -> tuple:
    """Nearest common ancestor: the longest common prefix."""
    k = 0
    for a, b in zip(u, v):
        if a != b:
            break
        k += 1
    return u[:k]


def tree_vertices(t: Tree) -> set:
    """The set of vertices of t, as tuples over {1, 2}."""
    out = set()
    stack = [(t, ())]
    while stack:
        node, u = stack.pop()
        out.add(u)
        if node.left is not None:
            stack.append((node.left, u + (1,)))
            stack.append((node.right, u + (2,)))
    return out


def tree_from_vertices(vertices) -> Tree:
    """Build a tree from its vertex set; validates prefix closure and fullness."""
    vs = {tuple(v) for v in vertices}
    if () not in vs:
        raise ValueError("vertex set must contain the root ()")
    for u in vs:
        if any(letter not in (1, 2) for letter in u):
            raise ValueError(f"vertex {u!r} has letters outside {{1, 2}}")
        if u and u[:-1] not in vs:
            raise ValueError(f"vertex set is not prefix-closed at {u!r}")
        if (u + (1,) in vs) != (u + (2,) in vs):
            raise ValueError(f"vertex {u!r} has exactly one child: tree not full")

    def build(u):
        if u + (1,) in vs:
            return Tree(build(u + (1,)), build(u + (2,)))
        return LEAF

    return build(())


def subtree(t: Tree, u) -> Tree:
    """The subtree of t rooted at vertex u.

    Raises ValueError if u is not a vertex of t.
    """
    node = t
    for depth, letter in enumerate(u):
        if node.left is None:
            raise ValueError(f"vertex {tuple(u)!r} not in tree (stops at depth {depth})")
        if letter == 1:
            node = node.left
        elif letter == 2:
            node = node.right
        else:
            raise ValueError(f"vertex letter {letter!r} is not 1 or 2")
    return node


# ---------------------------------------------------------------------------
# The interpolating family and the two Horton-Strahler numbers.

def tau(r: int) -> Tree:
    """The r-th tree of the interpolating chain.

    tau(0) is a leaf and tau(1) the one-internal-node tree; for r >= 2 the
    left subtree is tau(r // 2) and the right subtree is tau((r - 1) // 2).
    Each tree strictly contains the previous one, and tau(2**s - 1) is the
    perfect binary tree of height s.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    if r == 0:
        return LEAF
    m, odd = divmod(r, 2)
    left = tau(m)
    return Tree(left, left if odd else tau(m - 1))


def complete_binary(s: int) -> Tree:
    """The perfect binary tree of height s; equals tau(2**s - 1)."""
    if s < 0:
        raise ValueError("s must be >= 0")
    node = LEAF
    for _ in range(s):
        node = Tree(node, node)
    return node


def _hs_map(t: Tree) -> dict:
    """Refined numbers of every subtree of t, keyed by node id.

    One post-order pass; values are only valid while t is alive, and nothing
    is cached across calls.
    """
    order = []
    push = order.append
    stack = [t]
    while stack:
        node = stack.pop()
        push(node)
        if node.left is not None:
            stack.append(node.left)
            stack.append(node.right)
    # every node precedes its descendants in order, so sweep it backwards
    vals: dict[int, int] = {}
    for node in reversed(order):
        left = node.left
        if left is None:
            vals[id(node)] = 0
            continue
        a = vals[id(left)]
        b = vals[id(node.right)]
        # joining subtrees of refined numbers a, b gives
        # max(a, b, 2 * min(a, b) + (1 if a > b else 0) + 1)
        if a > b:
            s = 2 * b + 2
            if a > s:
                s = a
        elif b > a:
            s = 2 * a + 1
            if b > s:
                s = b
        else:
            s = 2 * a + 1
        vals[id(node)] = s
    return vals


def refined_hs(t: Tree) -> int:
    """The largest r such that tau(r) embeds in t, by the bottom-up recursion."""
    return _hs_map(t)[id(t)]


def classical_hs(t: Tree) -> int:
    """The largest s such that complete_binary(s) embeds in t."""
    return (1 + refined_hs(t)).bit_length() - 1


def can_embed(small: Tree, big: Tree) -> bool:
    """Decide embeddability by exhaustive search over candidate images.

    This is the reference oracle: a depth-first search over all ways to place
    the root of ``small``, memoized on (subtree, subtree) pairs.  It is
    deliberately independent of refined_hs, and meant for desk-scale trees.
    """
    memo: dict[tuple[int, int], bool] = {}

    def walk(s: Tree, b: Tree) -> bool:
        if s.left is None:
            return True
        if b.left is None:
            return False
        key = (id(s), id(b))
        got = memo.get(key)
        if got is None:
            # root of s at root of b, or pushed into either side of b
            got = (
                (walk(s.left, b.left) and walk(s.right, b.right))
                or walk(s, b.left)
                or walk(s, b.right)
            )
            memo[key] = got
        return got

    return walk(small, big)


def refined_hs_oracle(t: Tree) -> int:
    """refined_hs recomputed from the definition, via the embedding oracle.

    The chain tau(0) c tau(1) c ... makes embeddability monotone in r, so the
    search stops at the first failure.
    """
    r = 0
    while can_embed(tau(r + 1), t):
        r += 1
    return r


# ---------------------------------------------------------------------------
# Spinal decomposition.

@dataclass(frozen=True)
class SpinalDecomposition:
    """Output of decompose_tree.

    ``hs`` is the refined number of the source tree.  ``spine`` lists, from
    the root downward, the subtrees hanging off the ancestral path of the
    spine vertex, each tagged with the child slot (1 = left, 2 = right) it
    occupies; ``fix`` and ``free`` are the two subtrees below the spine
    vertex itself.  ``fix`` always has refined number ceil(hs / 2) - 1, while
    ``free`` ranges over floor(hs / 2) .. hs - 1.
    """

    hs: int
    fix: Tree
    free: Tree
    spine: tuple

    @property
    def spine_length(self) -> int:
        return len(self.spine)


def spine_vertex(t: Tree) -> tuple:
    """The lexicographically largest vertex whose subtree has full refined number.

    The vertices attaining refined_hs(t) form exactly the ancestral chain of
    this vertex.  For a single leaf the root () is returned.
    """
    if t.left is None:
        return ()
    vals = _hs_map(t)
    h = vals[id(t)]
    u = []
    node = t
    while node.left is not None:
        if vals[id(node.right)] == h:
            u.append(2)
            node = node.right
        elif vals[id(node.left)] == h:
            u.append(1)
            node = node.left
        else:
            break
    return tuple(u)


def _decompose_parts(vals: dict, t: Tree):
    """Decompose t given a precomputed subtree-value map (see _hs_map).

    Returns the raw tuple (h, fix, free, [(slot, subtree), ...]).
    """
    h = vals[id(t)]
    spine = []
    node = t
    while True:
        left, right = node.left, node.right
        if vals[id(right)] == h:
            spine.append((1, left))  # spine turns right, sibling hangs left
            node = right
        elif vals[id(left)] == h:
            spine.append((2, right))
            node = left
        else:
            break
    # node is now rooted at the spine vertex; its children split by parity
    if h % 2 == 0:
        return h, node.right, node.left, spine
    return h, node.left, node.right, spine


def decompose_tree(t: Tree) -> SpinalDecomposition:
    """Split t along the ancestral path of its spine vertex.

    The subtrees hanging off the path keep their left/right slots; below the
    spine vertex, the child whose refined number is forced to
    ceil(hs / 2) - 1 becomes ``fix`` (the right child when hs is even, the
    left one when hs is odd) and the other child becomes ``free``.
    Decomposing a single leaf is an error.
    """
    if t.left is None:
        raise ValueError("cannot decompose a single leaf (refined number 0)")
    h, fix, free, spine = _decompose_parts(_hs_map(t), t)
    return SpinalDecomposition(hs=h, fix=fix, free=free, spine=tuple(spine))


def _assemble_tree(h: int, fix: Tree, free: Tree, spine) -> Tree:
    """Rebuild a tree from decomposition parts; no validation."""
    node = Tree(free, fix) if h % 2 == 0 else Tree(fix, free)
    for side, hung in reversed(spine):
        node = Tree(hung, node) if side == 1 else Tree(node, hung)
    return node


def compose_tree(hs: int, parts: SpinalDecomposition) -> Tree:
    """Inverse of decompose_tree for refined number hs.

    Validates that the parts lie in the admissible ranges for hs; the ranges
    do not always pin hs down by themselves, which is why it is passed
    explicitly.  Returns the unique tree with refined number hs whose
    decomposition equals ``parts``.
    """
    if hs < 1:
        raise ValueError("hs must be >= 1; no tree with refined number 0 decomposes")
    if parts.hs != hs:
        raise ValueError(
            f"membership violation: parts are labelled hs={parts.hs}, expected {hs}"
        )
    fix_value = (hs - 1) // 2  # == ceil(hs / 2) - 1
    free_floor = hs // 2
    got = refined_hs(parts.fix)
    if got != fix_value:
        raise ValueError(
            f"membership violation: fix part has refined number {got}, need {fix_value}"
        )
    got = refined_hs(parts.free)
    if not free_floor <= got <= hs - 1:
        raise ValueError(
            "membership violation: free part has refined number "
            f"{got}, need {free_floor} .. {hs - 1}"
        )
    for j, (side, hung) in enumerate(parts.spine):
        if side not in (1, 2):
            raise ValueError(f"membership violation: spine slot {side!r} is not 1 or 2")
        cap = fix_value if side == 1 else free_floor - 1
        got = refined_hs(hung)
        if got > cap:
            raise ValueError(
                f"membership violation: spine subtree {j} in slot {side} has "
                f"refined number {got} > {cap}"
            )
    return _assemble_tree(hs, parts.fix, parts.free, parts.spine)
