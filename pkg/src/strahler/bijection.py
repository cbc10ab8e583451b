"""The height-preserving correspondence between Dyck paths and full binary trees.

``path_to_tree`` sends the empty path to a leaf.  Any other path is cut by
``dyck.decompose_path`` into fix, free, and spine pieces, each piece is
converted recursively, and the resulting trees are reassembled exactly as
``tree.compose_tree`` prescribes: the spine signs become child slots
(+1 -> slot 1, -1 -> slot 2 for the hung subtree), and below the spine the
free tree takes the left child when the height is even and the right child
when it is odd.  The construction preserves both the size parameter n and
the statistic: the image of a path of height h has refined number h.

``tree_to_path`` inverts this, piece by piece.

Both directions run on an explicit work stack rather than the call stack, so
paths of half-length around 10**6 (whose recursion can be as deep as the
tree) convert without recursion-limit tuning.
"""

from __future__ import annotations

from .dyck import DyckPath, _compose_raw, _decompose_raw
from .tree import LEAF, Tree, _assemble_tree, _decompose_parts, _hs_map

def path_to_tree(d: DyckPath) -> Tree:
    """The tree image of d; refined number equals the height of d."""
    # work stack holds height lists (pending conversions) and (h, signs)
    # tuples (assembly frames waiting for their converted pieces)
    stack: list = [list(d.heights)]
    results: list[Tree] = []
    while stack:
        arg = stack.pop()
        if type(arg) is list:
            if len(arg) == 1:
                results.append(LEAF)
                continue
            h, fix, free, spine = _decompose_raw(arg)
            if spine:
                stack.append((h, tuple(e for e, _ in spine)))
                for _, piece in reversed(spine):
                    stack.append(piece)
            else:
                stack.append((h, ()))
            stack.append(free)
            stack.append(fix)
        else:
            h, signs = arg
            take = 2 + len(signs)
            parts = results[-take:]
            del results[-take:]
            spine = [
                (1 if e == 1 else 2, sub) for e, sub in zip(signs, parts[2:])
            ]
            results.append(_assemble_tree(h, parts[0], parts[1], spine))
    return results[0]


def tree_to_path(t: Tree) -> DyckPath:
    """The unique path mapping to t under path_to_tree."""
    vals = _hs_map(t)  # covers every subtree; decompositions reuse it
    # work stack holds Tree nodes (pending conversions) and (h, signs)
    # tuples (assembly frames waiting for their converted pieces)
    stack: list = [t]
    results: list[list[int]] = []
    while stack:
        arg = stack.pop()
        if type(arg) is not tuple:
            if arg.left is None:
                results.append([0])
                continue
            h, fix, free, spine = _decompose_parts(vals, arg)
            if spine:
                stack.append((h, tuple(3 - 2 * side for side, _ in spine)))
                for _, sub in reversed(spine):
                    stack.append(sub)
            else:
                stack.append((h, ()))
            stack.append(free)
            stack.append(fix)
        else:
            h, signs = arg
            take = 2 + len(signs)
            parts = results[-take:]
            del results[-take:]
            spine = list(zip(signs, parts[2:]))
            results.append(_compose_raw(h, parts[0], parts[1], spine))
    return DyckPath(results[0])


def golden_witness() -> tuple[DyckPath, Tree]:
    """A pinned regression pair: the straight up-down path of height 5 and its tree.

    The tree is whatever path_to_tree produces; tests freeze its text form so
    any behavioural drift in the conversion shows up immediately.
    """
    d = DyckPath((0, 1, 2, 3, 4, 5, 4, 3, 2, 1, 0))
    return d, path_to_tree(d)
