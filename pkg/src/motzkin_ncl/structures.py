"""Core value types: colored Motzkin paths, Schroeder paths, and
noncrossing linked partitions.

The objects handled by this package:

* A (3,2)-Motzkin path of length n walks from (0,0) to (n,0) using up
  steps (1,1), level steps (1,0) in three colors, and down steps (1,-1)
  in two colors, never dipping below the x-axis.  Text form: ``U`` for
  up, ``a``/``b``/``c`` for the three level colors, ``x``/``y`` for the
  two down colors.
* A large (3,2)-Motzkin path is one whose level steps *on the axis* use
  only the first two colors; color ``c`` may appear at positive height
  only.
* A Schroeder path walks from (0,0) to (2n,0) with up steps (1,1), down
  steps (1,-1) and double-length level steps (2,0), staying weakly above
  the axis.  Text form: ``U``/``F``/``D``.  The "little" variant forbids
  level steps on the axis.
* A noncrossing linked partition of {1..n} covers the ground set by
  blocks that are pairwise *nearly disjoint*: two blocks may share at
  most one element, and only so that the shared element is the minimum
  of exactly one of them (that one not a singleton) and a non-minimum of
  the other.  Blocks must also be mutually noncrossing.  We store the
  linear representation: one arc (min(B), v) for every non-minimal
  element v of every block B.  A set of arcs encodes such a partition
  exactly when no vertex is the right endpoint of two arcs and no two
  arcs cross.

All types are immutable values.  Validity is established by the
``validate_*`` functions, not by construction; constructors only check
cheap well-formedness (alphabet membership, arc bounds).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

_DIGITS = frozenset("0123456789")


class Step(Enum):
    """One step of a (3,2)-Motzkin path, identified by its text letter."""

    UP = "U"
    LEVEL1 = "a"
    LEVEL2 = "b"
    LEVEL3 = "c"
    DOWN1 = "x"
    DOWN2 = "y"

    @property
    def char(self) -> str:
        return self.value

    @property
    def delta(self) -> int:
        """Height change contributed by this step."""
        if self is Step.UP:
            return 1
        if self in (Step.DOWN1, Step.DOWN2):
            return -1
        return 0

    @property
    def is_up(self) -> bool:
        return self is Step.UP

    @property
    def is_level(self) -> bool:
        return self.delta == 0

    @property
    def is_down(self) -> bool:
        return self.delta == -1


_CHAR_TO_STEP = {s.value: s for s in Step}
_PATH_ALPHABET = frozenset(_CHAR_TO_STEP)
_DELTA = {"U": 1, "a": 0, "b": 0, "c": 0, "x": -1, "y": -1}

PathWord = tuple[Step, ...]


# ---------------------------------------------------------------------------
# errors


class ParseError(ValueError):
    """A textual encoding cannot be read.

    ``offset`` is the byte position of the offending character (all
    accepted texts are ASCII, so byte and character offsets coincide).
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class PathError(ValueError):
    """A word fails one of the path predicates."""


class NegativeHeight(PathError):
    def __init__(self, position: int):
        super().__init__(f"path dips below the axis at step {position}")
        self.position = position


class NonzeroFinalHeight(PathError):
    def __init__(self, height: int):
        super().__init__(f"path ends at height {height}, not on the axis")
        self.height = height


class AxisL3(PathError):
    """Level color 3 sits on the axis, which the large family forbids."""

    def __init__(self, position: int):
        super().__init__(f"level color 3 on the axis at step {position}")
        self.position = position


class AxisF(PathError):
    """A flat step sits on the axis of a little Schroeder path."""

    def __init__(self, position: int):
        super().__init__(f"flat step on the axis at step {position}")
        self.position = position


class PartitionError(ValueError):
    """An arc set or block family fails the partition predicates."""


class InDegree(PartitionError):
    def __init__(self, vertex: int):
        super().__init__(f"vertex {vertex} is the right endpoint of two arcs")
        self.vertex = vertex


class CrossingArcs(PartitionError):
    def __init__(self, first: "Arc", second: "Arc"):
        super().__init__(f"arcs {tuple(first)} and {tuple(second)} cross")
        self.first = first
        self.second = second


class NearlyDisjointViolation(PartitionError):
    def __init__(self, block_a: tuple[int, ...], block_b: tuple[int, ...]):
        super().__init__(
            f"blocks {set(block_a)} and {set(block_b)} are not nearly disjoint"
        )
        self.block_a = block_a
        self.block_b = block_b


class BlockCrossing(PartitionError):
    def __init__(self, block_a: tuple[int, ...], block_b: tuple[int, ...]):
        super().__init__(f"blocks {set(block_a)} and {set(block_b)} cross")
        self.block_a = block_a
        self.block_b = block_b


# ---------------------------------------------------------------------------
# paths


def parse_path(text: str) -> PathWord:
    """Read a path word from its text form.

    >>> parse_path("Ubx")
    (<Step.UP: 'U'>, <Step.LEVEL2: 'b'>, <Step.DOWN1: 'x'>)
    """
    steps = []
    for i, ch in enumerate(text):
        step = _CHAR_TO_STEP.get(ch)
        if step is None:
            raise ParseError(f"unknown step character {ch!r}", i)
        steps.append(step)
    return tuple(steps)


def render_path(word: Iterable[Step]) -> str:
    """Inverse of :func:`parse_path`."""
    return "".join(step.value for step in word)


@dataclass(frozen=True, eq=False)
class MotzkinPath:
    """A (3,2)-Motzkin path, stored as its text word.

    Construction checks only the alphabet; use :func:`validate_motzkin`
    to establish that the word really is a path.
    """

    text: str

    def __post_init__(self) -> None:
        if not _PATH_ALPHABET.issuperset(self.text):
            bad = next(i for i, c in enumerate(self.text) if c not in _PATH_ALPHABET)
            raise ParseError(f"unknown step character {self.text[bad]!r}", bad)

    def __len__(self) -> int:
        return len(self.text)

    def __eq__(self, other: object) -> bool:
        # a path is its word: large and plain wrappers of the same text agree
        if isinstance(other, MotzkinPath):
            return self.text == other.text
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.text)

    def __str__(self) -> str:
        return self.text

    @property
    def steps(self) -> PathWord:
        return parse_path(self.text)

    def heights(self) -> tuple[int, ...]:
        """Running height after each step."""
        out = []
        h = 0
        for ch in self.text:
            h += _DELTA[ch]
            out.append(h)
        return tuple(out)


class LargeMotzkinPath(MotzkinPath):
    """A (3,2)-Motzkin path with no axis-level steps of color 3."""


def _word_text(word: str | MotzkinPath | Iterable[Step]) -> str:
    if isinstance(word, MotzkinPath):
        return word.text
    if isinstance(word, str):
        parse_path(word)  # alphabet check with offsets
        return word
    return render_path(word)


def validate_motzkin(word: str | MotzkinPath | Iterable[Step]) -> MotzkinPath:
    """Check the height profile of a word and wrap it as a path."""
    text = _word_text(word)
    h = 0
    for i, ch in enumerate(text):
        h += _DELTA[ch]
        if h < 0:
            raise NegativeHeight(i)
    if h != 0:
        raise NonzeroFinalHeight(h)
    return MotzkinPath(text)


def validate_large(word: str | MotzkinPath | Iterable[Step]) -> LargeMotzkinPath:
    """Like :func:`validate_motzkin`, also rejecting color 3 on the axis."""
    text = _word_text(word)
    h = 0
    for i, ch in enumerate(text):
        if ch == "c" and h == 0:
            raise AxisL3(i)
        h += _DELTA[ch]
        if h < 0:
            raise NegativeHeight(i)
    if h != 0:
        raise NonzeroFinalHeight(h)
    return LargeMotzkinPath(text)


# ---------------------------------------------------------------------------
# Schroeder paths

_SCHRODER_ALPHABET = frozenset("UFD")
_SCHRODER_DELTA = {"U": 1, "F": 0, "D": -1}


@dataclass(frozen=True)
class SchroderPath:
    """A Schroeder path; ``F`` steps span two x-units.

    ``variant`` is ``"large"`` or ``"little"``; the little family has no
    ``F`` step on the axis.
    """

    text: str
    variant: str = "large"

    def __post_init__(self) -> None:
        if not _SCHRODER_ALPHABET.issuperset(self.text):
            bad = next(
                i for i, c in enumerate(self.text) if c not in _SCHRODER_ALPHABET
            )
            raise ParseError(f"unknown step character {self.text[bad]!r}", bad)
        if self.variant not in ("large", "little"):
            raise ValueError(f"unknown variant {self.variant!r}")

    def __str__(self) -> str:
        return self.text

    @property
    def half_length(self) -> int:
        """n for a path from (0,0) to (2n,0)."""
        return sum(1 for c in self.text if c != "D")


def validate_schroder(
    word: str | SchroderPath, variant: str = "large"
) -> SchroderPath:
    """Check a Schroeder word; the little variant bars axis flat steps."""
    text = word.text if isinstance(word, SchroderPath) else word
    path = SchroderPath(text, variant)  # alphabet + variant check
    h = 0
    for i, ch in enumerate(text):
        if ch == "F" and h == 0 and variant == "little":
            raise AxisF(i)
        h += _SCHRODER_DELTA[ch]
        if h < 0:
            raise NegativeHeight(i)
    if h != 0:
        raise NonzeroFinalHeight(h)
    return path


# ---------------------------------------------------------------------------
# noncrossing linked partitions


class Arc(NamedTuple):
    """A single arc of a linear representation, drawn left to right."""

    left: int
    right: int


@dataclass(frozen=True)
class LinkedPartition:
    """An arc diagram on the vertices 1..n.

    Any iterable of (left, right) pairs is accepted and normalized to a
    frozenset of :class:`Arc`.  Bounds (1 <= left < right <= n) are
    enforced here; the partition predicates (in-degree, noncrossing) are
    the validators' job.
    """

    n: int
    arcs: frozenset[Arc] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise PartitionError("a partition needs at least one vertex")
        normalized = frozenset(Arc(int(a), int(b)) for a, b in self.arcs)
        for arc in normalized:
            if not (1 <= arc.left < arc.right <= self.n):
                raise PartitionError(
                    f"arc {tuple(arc)} out of range for n={self.n}"
                )
        object.__setattr__(self, "arcs", normalized)

    def __str__(self) -> str:
        return render_partition(self)


def blocks_of(p: LinkedPartition) -> tuple[tuple[int, ...], ...]:
    """Blocks derived from the arcs, sorted by minimum.

    Each vertex with outgoing arcs owns the block {v} + right endpoints;
    arc-free vertices are singleton blocks.  Vertices that only receive
    an arc appear inside their sender's block.
    """
    outgoing: dict[int, list[int]] = {}
    incoming = set()
    for a, b in p.arcs:
        outgoing.setdefault(a, []).append(b)
        incoming.add(b)
    blocks = []
    for v in range(1, p.n + 1):
        if v in outgoing:
            blocks.append((v, *sorted(outgoing[v])))
        elif v not in incoming:
            blocks.append((v,))
    return tuple(blocks)


def render_partition(p: LinkedPartition) -> str:
    """Canonical text: blocks by increasing minimum, elements ascending."""
    return "".join(
        "{" + ",".join(str(v) for v in block) + "}" for block in blocks_of(p)
    )


def _read_label(text: str, i: int) -> tuple[int, int]:
    j = i
    while j < len(text) and text[j] in _DIGITS:
        j += 1
    if j == i:
        raise ParseError("expected a vertex label", i)
    return int(text[i:j]), j


def parse_partition(text: str) -> LinkedPartition:
    """Read a partition from block text like ``{1,3,4}{2}``.

    Blocks may arrive in any order, but the family must cover 1..n with
    no gaps and must satisfy the nearly-disjoint rule; redundant
    presentations such as ``{1}{1,2}`` are rejected here.  Crossing arcs
    are *not* rejected here; that is :func:`validate_ncl`'s job.
    """
    if not text:
        raise ParseError("expected '{'", 0)
    blocks: list[list[int]] = []
    i = 0
    while i < len(text):
        if text[i] != "{":
            raise ParseError("expected '{'", i)
        i += 1
        block: list[int] = []
        while True:
            label, i = _read_label(text, i)
            if label < 1:
                raise ParseError("vertex labels start at 1", i - len(str(label)))
            if label in block:
                raise ParseError(
                    f"duplicate label {label} in block", i - len(str(label))
                )
            block.append(label)
            if i >= len(text):
                raise ParseError("unterminated block", i)
            if text[i] == ",":
                i += 1
                continue
            if text[i] == "}":
                i += 1
                break
            raise ParseError("expected ',' or '}'", i)
        blocks.append(sorted(block))
    n = max(v for block in blocks for v in block)
    seen = {v for block in blocks for v in block}
    for v in range(1, n + 1):
        if v not in seen:
            raise PartitionError(f"vertex {v} missing; blocks must cover 1..{n}")
    ordered = sorted(tuple(b) for b in blocks)
    for idx, block_a in enumerate(ordered):
        for block_b in ordered[idx + 1 :]:
            if not _nearly_disjoint(block_a, block_b):
                raise NearlyDisjointViolation(block_a, block_b)
    arcs = []
    rights = set()
    for block in ordered:
        for v in block[1:]:
            if v in rights:  # unreachable past the nearly-disjoint check
                raise InDegree(v)
            rights.add(v)
            arcs.append(Arc(block[0], v))
    return LinkedPartition(n, frozenset(arcs))


def _nearly_disjoint(block_a: tuple[int, ...], block_b: tuple[int, ...]) -> bool:
    # every shared element must be the minimum of exactly one of the two
    # blocks, that block not a singleton
    for k in set(block_a) & set(block_b):
        via_a = k == block_a[0] and len(block_a) > 1 and k != block_b[0]
        via_b = k == block_b[0] and len(block_b) > 1 and k != block_a[0]
        if not (via_a or via_b):
            return False
    return True


def validate_ncl(p: LinkedPartition) -> LinkedPartition:
    """Arc-level acceptance: in-degree at most one, no crossing arcs."""
    rights = set()
    for _, b in sorted(p.arcs):
        if b in rights:
            raise InDegree(b)
        rights.add(b)
    ordered = sorted(p.arcs)
    for idx, first in enumerate(ordered):
        for second in ordered[idx + 1 :]:
            if first.left < second.left < first.right < second.right:
                raise CrossingArcs(first, second)
    return p


def validate_ncl_blockwise(p: LinkedPartition) -> LinkedPartition:
    """Block-level acceptance, evaluated literally on the derived blocks.

    Independent of :func:`validate_ncl`; the two agree on every arc set.
    """
    blocks = blocks_of(p)
    for idx, block_a in enumerate(blocks):
        for block_b in blocks[idx + 1 :]:
            if not _nearly_disjoint(block_a, block_b):
                raise NearlyDisjointViolation(block_a, block_b)
            if _blocks_cross(block_a, block_b):
                raise BlockCrossing(block_a, block_b)
    return p


def _blocks_cross(block_a: tuple[int, ...], block_b: tuple[int, ...]) -> bool:
    # blocks cross when i1 < i2 < j1 < j2 with i1,j1 in one and i2,j2 in
    # the other; scan both orientations
    for first, second in ((block_a, block_b), (block_b, block_a)):
        for i1 in first:
            for j1 in first:
                if i1 >= j1:
                    continue
                for i2 in second:
                    for j2 in second:
                        if i2 >= j2:
                            continue
                        if i1 < i2 < j1 < j2:
                            return True
    return False


# ---------------------------------------------------------------------------
# ASCII diagrams


def render_ascii(obj: MotzkinPath | LinkedPartition) -> str:
    """Deterministic text diagram of a path or a partition."""
    if isinstance(obj, MotzkinPath):
        return _path_art(obj)
    if isinstance(obj, LinkedPartition):
        return _partition_art(obj)
    raise TypeError(f"cannot draw {type(obj).__name__}")


def _path_art(path: MotzkinPath) -> str:
    """Mountain diagram: slopes as ``/`` and ``\\``, levels as their color
    letter at their height, with a dashed axis line."""
    text = path.text
    if not text:
        return ""
    heights = []
    h = 0
    for ch in text:
        h += _DELTA[ch]
        heights.append(h)
    top = max([0, *heights])
    grid = {}
    h = 0
    for i, ch in enumerate(text):
        if ch == "U":
            grid[(h + 1, i)] = "/"
        elif ch in "xy":
            grid[(h, i)] = "\\"
        else:
            grid[(h, i)] = ch
        h += _DELTA[ch]
    rows = []
    for level in range(top, 0, -1):
        rows.append("".join(grid.get((level, i), " ") for i in range(len(text))).rstrip())
    axis = "".join(grid.get((0, i), "-") for i in range(len(text)))
    rows.append(axis)
    return "\n".join(rows)


def _partition_art(p: LinkedPartition) -> str:
    """Arc diagram above a row of vertex labels.

    Each arc gets a row by nesting depth (outermost on top), drawn as
    ``.--.`` caps with ``|`` uprights running down to its endpoints.
    """
    labels = [str(v) for v in range(1, p.n + 1)]
    pos = []
    col = 0
    for lab in labels:
        pos.append(col)
        col += len(lab) + 1
    width = col - 1
    label_row = " ".join(labels)
    if not p.arcs:
        return label_row
    ordered = sorted(p.arcs)
    depth = {}
    for arc in ordered:
        depth[arc] = sum(
            1
            for other in ordered
            if other != arc and other.left <= arc.left and arc.right <= other.right
        )
    levels = max(depth.values()) + 1
    grid = [[" "] * width for _ in range(levels)]
    for arc in ordered:  # uprights first, caps after so caps win
        for row in range(depth[arc] + 1, levels):
            grid[row][pos[arc.left - 1]] = "|"
            grid[row][pos[arc.right - 1]] = "|"
    for arc in ordered:
        row = grid[depth[arc]]
        lo, hi = pos[arc.left - 1], pos[arc.right - 1]
        for c in range(lo + 1, hi):
            row[c] = "-"
        row[lo] = "."
        row[hi] = "."
    rows = ["".join(r).rstrip() for r in grid]
    rows.append(label_row)
    return "\n".join(rows)
