"""Brute-force reference implementations, independent of the library.

Everything here recomputes results from first principles with the dumbest
viable method (generate-and-filter, nested tuples, exhaustive injections) so
the tests can compare the library against code that shares none of its
machinery.
"""

from itertools import combinations, product


def brute_dyck_heights(n):
    """All Dyck paths of half-length n as height tuples, by filtering
    every step sequence in {+1, -1}^(2n)."""
    if n == 0:
        return [(0,)]
    out = []
    for steps in product((1, -1), repeat=2 * n):
        level = 0
        heights = [0]
        for s in steps:
            level += s
            if level < 0:
                break
            heights.append(level)
        else:
            if level == 0:
                out.append(tuple(heights))
    return out


def brute_trees(n):
    """All full binary trees with n internal vertices as nested tuples;
    a leaf is None and a node is (left, right)."""
    if n == 0:
        return [None]
    out = []
    for i in range(n):
        for left in brute_trees(i):
            for right in brute_trees(n - 1 - i):
                out.append((left, right))
    return out


def tuple_tree_text(t):
    return "." if t is None else "(" + tuple_tree_text(t[0]) + tuple_tree_text(t[1]) + ")"


def tuple_tree_vertices(t, prefix=()):
    """Vertex set of a nested-tuple tree, as tuples over {1, 2}."""
    out = {prefix}
    if t is not None:
        out |= tuple_tree_vertices(t[0], prefix + (1,))
        out |= tuple_tree_vertices(t[1], prefix + (2,))
    return out


def _common_prefix(u, v):
    k = 0
    for a, b in zip(u, v):
        if a != b:
            break
        k += 1
    return u[:k]


def brute_can_embed(small_vertices, big_vertices):
    """Definition-level embedding test by exhausting injections.

    A strictly lex-increasing injection is a sorted choice of image vertices,
    so it suffices to scan combinations of the big vertex set (in sorted
    order) and check meet preservation.
    """
    small = sorted(small_vertices)
    big = sorted(big_vertices)
    k = len(small)
    index = {u: i for i, u in enumerate(small)}
    for image in combinations(big, k):
        ok = True
        for i, j in combinations(range(k), 2):
            expected = image[index[_common_prefix(small[i], small[j])]]
            if _common_prefix(image[i], image[j]) != expected:
                ok = False
                break
        if ok:
            return True
    return False
