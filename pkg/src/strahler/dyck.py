"""Dyck paths, their landmark indices, and the mid-level decomposition.

A Dyck path of half-length n is stored as its height sequence d(0), ...,
d(2n): nonnegative integers pinned to 0 at both ends, moving by exactly 1 at
each step.  The empty path (n = 0, heights ``(0,)``) is a first-class value
and the only path of height 0.

Text formats: the canonical form is a step string over U (+1) and D (-1),
e.g. ``UUDUDD`` for 0,1,2,1,2,1,0; a comma-separated height sequence such as
``0,1,2,1,2,1,0`` is accepted as alternate input.  Output is always U/D.

Decomposition.  Write h for the height of the path and m = h // 2 for the
split level.  The landmarks are: ``peak``, the first index at height h;
``mid_before``, the last visit to level m before the peak; ``mid_after``,
the first visit to level m after the peak; ``mid_last``, the final visit to
level m; and ``returns``, every index in [mid_after, mid_last] sitting at
level m.  ``decompose_path`` cuts the path at these indices:

* ``fix``  - the stretch strictly between mid_before and mid_after, shifted
  down by m + 1; its height is always ceil(h / 2) - 1.
* ``free`` - the prefix up to mid_before glued to the suffix after mid_last;
  its height ranges over m .. h - 1.
* ``spine`` - one path per gap between consecutive returns, reflected onto
  the side of level m it lives on and shifted to start at 0, tagged with the
  sign (+1 above, -1 below).  A +1 piece has height at most ceil(h / 2) - 1,
  a -1 piece at most m - 1.

``compose_path`` inverts this given h (the pieces alone do not always
determine h, so it is passed explicitly and membership is validated).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import accumulate, repeat
from operator import add, sub


class DyckPath:
    """An immutable Dyck path, held as its height sequence."""

    __slots__ = ("heights",)

    def __init__(self, heights=(0,)):
        hs = tuple(heights)
        if not hs or hs[0] != 0 or hs[-1] != 0:
            raise ValueError("height sequence must start and end at 0")
        if min(hs) < 0:
            raise ValueError("height sequence must be nonnegative")
        if not set(map(sub, hs[1:], hs)) <= {1, -1}:
            raise ValueError("height sequence must move by exactly 1 per step")
        self.heights = hs

    @classmethod
    def _wrap(cls, heights) -> "DyckPath":
        # internal: trusted construction without revalidation
        p = object.__new__(cls)
        p.heights = tuple(heights)
        return p

    @classmethod
    def from_steps(cls, steps: str) -> "DyckPath":
        """Build from a U/D step string; '' gives the empty path."""
        deltas = []
        for i, c in enumerate(steps):
            if c == "U":
                deltas.append(1)
            elif c == "D":
                deltas.append(-1)
            else:
                raise ValueError(f"bad step character {c!r} at index {i}")
        return cls(accumulate(deltas, initial=0))

    @property
    def n(self) -> int:
        """Half-length: the number of U steps."""
        return (len(self.heights) - 1) // 2

    def steps(self) -> str:
        """The canonical U/D step string."""
        hs = self.heights
        return "".join("U" if b > a else "D" for a, b in zip(hs, hs[1:]))

    def __eq__(self, other):
        if not isinstance(other, DyckPath):
            return NotImplemented
        return self.heights == other.heights

    def __hash__(self):
        return hash(self.heights)

    def __repr__(self):
        return f"DyckPath.from_steps({self.steps()!r})"


EMPTY_PATH = DyckPath()


def parse_path(text: str) -> DyckPath:
    """Parse a step string (canonical) or a comma-separated height sequence."""
    s = text.strip()
    if not s:
        return EMPTY_PATH
    if set(s) <= {"U", "D"}:
        return DyckPath.from_steps(s)
    if set(s) <= set("0123456789,- "):
        try:
            heights = [int(part) for part in s.split(",")]
        except ValueError:
            raise ValueError(f"bad height sequence {text!r}") from None
        return DyckPath(heights)
    raise ValueError(f"not a U/D step string or height sequence: {text!r}")


def height(d: DyckPath) -> int:
    """Maximum level the path reaches."""
    return max(d.heights)


def random_path(n: int, rng: random.Random | None = None) -> DyckPath:
    """A uniformly random Dyck path of half-length n (cycle construction).

    Shuffles n up-steps and n + 1 down-steps; exactly one rotation of the
    result stays nonnegative until its final step, and dropping that step
    yields a Dyck path.  Each path arises from the same number of shuffles,
    so the output is exactly uniform.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    rng = rng if rng is not None else random
    steps = [1] * n + [-1] * (n + 1)
    rng.shuffle(steps)
    sums = list(accumulate(steps))
    cut = sums.index(min(sums)) + 1
    rotated = steps[cut:] + steps[:cut]
    return DyckPath._wrap(accumulate(rotated[:-1], initial=0))


# ---------------------------------------------------------------------------
# Landmarks.

@dataclass(frozen=True)
class Landmarks:
    """The indices that drive decompose_path; see the module docstring."""

    height: int
    mid: int
    peak: int
    mid_before: int
    mid_after: int
    mid_last: int
    returns: tuple
    signs: tuple

    @property
    def spine_length(self) -> int:
        return len(self.signs)


def _landmarks_raw(hs):
    h = max(hs)
    if h == 0:
        raise ValueError("path of height 0 has no landmarks")
    m = h // 2
    peak = hs.index(h)
    # last m before the peak; the climb to the peak guarantees one exists
    mid_before = peak - 1 - hs[peak - 1 :: -1].index(m)
    mid_after = hs.index(m, peak)
    mid_last = len(hs) - 1 - hs[::-1].index(m)
    # between mid_after and mid_last every visit to level m is a return
    returns = [mid_after]
    i = mid_after
    while i != mid_last:
        i = hs.index(m, i + 1)
        returns.append(i)
    signs = [hs[i + 1] - hs[i] for i in returns[:-1]]
    return h, m, peak, mid_before, mid_after, mid_last, returns, signs


def landmarks(d: DyckPath) -> Landmarks:
    """Locate the landmark indices of d; requires height >= 1."""
    h, m, peak, before, after, last, returns, signs = _landmarks_raw(d.heights)
    return Landmarks(
        height=h,
        mid=m,
        peak=peak,
        mid_before=before,
        mid_after=after,
        mid_last=last,
        returns=tuple(returns),
        signs=tuple(signs),
    )


# ---------------------------------------------------------------------------
# Decomposition and its inverse.

@dataclass(frozen=True)
class PathDecomposition:
    """Output of decompose_path; ``height`` is the height of the source path."""

    height: int
    fix: DyckPath
    free: DyckPath
    spine: tuple

    @property
    def spine_length(self) -> int:
        return len(self.spine)


def _decompose_raw(hs):
    """Split a raw height sequence; returns (h, fix, free, [(sign, piece)])."""
    h, m, _, before, after, last, returns, signs = _landmarks_raw(hs)
    shift = m + 1
    fix = list(map(sub, hs[before + 1 : after], repeat(shift)))
    free = list(hs[: before + 1]) + list(hs[last + 1 :])
    spine = []
    for j, e in enumerate(signs):
        seg = hs[returns[j] + 1 : returns[j + 1]]
        if e == 1:
            spine.append((1, list(map(sub, seg, repeat(shift)))))
        else:
            spine.append((-1, list(map(sub, repeat(m - 1), seg))))
    return h, fix, free, spine


def decompose_path(d: DyckPath) -> PathDecomposition:
    """Cut d at its landmarks into fix, free, and the spine pieces."""
    if max(d.heights) == 0:
        raise ValueError("cannot decompose a path of height 0")
    h, fix, free, spine = _decompose_raw(d.heights)
    return PathDecomposition(
        height=h,
        fix=DyckPath._wrap(fix),
        free=DyckPath._wrap(free),
        spine=tuple((e, DyckPath._wrap(p)) for e, p in spine),
    )


def _compose_raw(h, fix, free, spine):
    """Concatenate decomposition pieces back into a height sequence.

    No validation; callers guarantee membership.  The free piece is split at
    its last visit to level m, the fix piece is lifted to sit strictly above
    m, and each spine piece is lifted or reflected to sit strictly on its
    sign's side of m, each block closing with a return to m.
    """
    m = h // 2
    split = len(free) - 1 - free[::-1].index(m)
    out = list(free[: split + 1])
    shift = m + 1
    out.extend(map(add, fix, repeat(shift)))
    out.append(m)
    for e, piece in spine:
        if e == 1:
            out.extend(map(add, piece, repeat(shift)))
        else:
            out.extend(map(sub, repeat(m - 1), piece))
        out.append(m)
    out.extend(free[split + 1 :])
    return out


def compose_path(h: int, parts: PathDecomposition) -> DyckPath:
    """Inverse of decompose_path for height h.

    The pieces alone do not always determine h, so it is explicit; the piece
    heights are validated against their admissible ranges for h.
    """
    if h < 1:
        raise ValueError("h must be >= 1; only the empty path has height 0")
    if parts.height != h:
        raise ValueError(
            f"membership violation: parts are labelled height {parts.height}, expected {h}"
        )
    m = h // 2
    fix_height = (h - 1) // 2  # == ceil(h / 2) - 1
    got = max(parts.fix.heights)
    if got != fix_height:
        raise ValueError(
            f"membership violation: fix piece has height {got}, need {fix_height}"
        )
    got = max(parts.free.heights)
    if not m <= got <= h - 1:
        raise ValueError(
            f"membership violation: free piece has height {got}, need {m} .. {h - 1}"
        )
    for j, (e, piece) in enumerate(parts.spine):
        if e not in (1, -1):
            raise ValueError(f"membership violation: spine sign {e!r} is not +1 or -1")
        cap = fix_height if e == 1 else m - 1
        got = max(piece.heights)
        if got > cap:
            raise ValueError(
                f"membership violation: spine piece {j} with sign {e:+d} has "
                f"height {got} > {cap}"
            )
    heights = _compose_raw(
        h,
        parts.fix.heights,
        parts.free.heights,
        [(e, p.heights) for e, p in parts.spine],
    )
    return DyckPath(heights)
