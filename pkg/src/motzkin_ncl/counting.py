"""Exact counting sequences, as arbitrary-precision integers.

The five sequences and their defining recurrences:

* m: (3,2)-Motzkin paths by length:
  m(0) = 1,  m(n) = 3 m(n-1) + 2 sum_{j} m(j) m(n-2-j).
* L: large (3,2)-Motzkin paths by length:
  L(0) = 1,  L(n) = 2 L(n-1) + 2 sum_{j} m(j) L(n-2-j).
* S: large Schroeder paths by half-length:
  S(0) = 1,  S(n) = S(n-1) + sum_{k} S(k) S(n-1-k).
* s: little Schroeder paths by half-length: s(0) = 1, s(n) = S(n)/2.
* f: noncrossing linked partitions by ground-set size:
  f(1) = 1,  f(n+1) = L(n).

The convolution recurrences come from the functional equations
M = 1 + 3x M + 2x^2 M^2,  L = 1 + 2x L + 2x^2 M L  and
S = 1 + x S + x S^2 of the generating functions, checked against their
closed forms in the test suite.  Numerically L(n) = S(n) = 2 m(n-1) for
n >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class SequenceTable:
    """A finite prefix of one counting sequence.

    ``values[i]`` holds the term of index ``offset + i``; every sequence
    here starts at 0 except f, which starts at 1.  ``recurrence`` records
    how the numbers were produced.
    """

    name: str
    offset: int
    values: tuple[int, ...]
    recurrence: str

    @property
    def max_index(self) -> int:
        return self.offset + len(self.values) - 1

    def __getitem__(self, n: int) -> int:
        if not self.offset <= n <= self.max_index:
            raise IndexError(f"{self.name}({n}) outside the computed range")
        return self.values[n - self.offset]

    def items(self) -> Iterator[tuple[int, int]]:
        for i, value in enumerate(self.values):
            yield self.offset + i, value


def _require_count(n: int, minimum: int = 0) -> None:
    if n < minimum:
        raise ValueError(f"need an index of at least {minimum}, got {n}")


def _motzkin32_values(upto: int) -> list[int]:
    values = [1]
    for n in range(1, upto + 1):
        tail = 2 * sum(values[j] * values[n - 2 - j] for j in range(n - 1))
        values.append(3 * values[n - 1] + tail)
    return values


def motzkin32_numbers(upto: int) -> SequenceTable:
    """m(0)..m(upto), counting (3,2)-Motzkin paths by length."""
    _require_count(upto)
    return SequenceTable(
        "m",
        0,
        tuple(_motzkin32_values(upto)),
        "m(n) = 3 m(n-1) + 2 sum m(j) m(n-2-j)",
    )


def large_motzkin_numbers(upto: int) -> SequenceTable:
    """L(0)..L(upto), counting large (3,2)-Motzkin paths by length."""
    _require_count(upto)
    m = _motzkin32_values(max(upto - 2, 0))
    values = [1]
    for n in range(1, upto + 1):
        tail = 2 * sum(m[j] * values[n - 2 - j] for j in range(n - 1))
        values.append(2 * values[n - 1] + tail)
    return SequenceTable(
        "L",
        0,
        tuple(values),
        "L(n) = 2 L(n-1) + 2 sum m(j) L(n-2-j)",
    )


def schroder_numbers(upto: int) -> tuple[SequenceTable, SequenceTable]:
    """Large and little Schroeder numbers S(0)..S(upto), s(0)..s(upto).

    The little numbers halve the large ones exactly; a remainder would
    mean the build is inconsistent and raises.
    """
    _require_count(upto)
    large = [1]
    for n in range(1, upto + 1):
        conv = sum(large[k] * large[n - 1 - k] for k in range(n))
        large.append(large[n - 1] + conv)
    little = [1]
    for n in range(1, upto + 1):
        half, rest = divmod(large[n], 2)
        if rest:
            raise ArithmeticError(f"S({n}) is odd; halving identity broken")
        little.append(half)
    big = SequenceTable(
        "S", 0, tuple(large), "S(n) = S(n-1) + sum S(k) S(n-1-k)"
    )
    small = SequenceTable("s", 0, tuple(little), "s(n) = S(n) / 2 for n >= 1")
    return big, small


def ncl_counts(upto: int) -> SequenceTable:
    """f(1)..f(upto), counting noncrossing linked partitions of {1..n}."""
    _require_count(upto, minimum=1)
    large = large_motzkin_numbers(upto - 1)
    return SequenceTable(
        "f",
        1,
        tuple(large.values),
        "f(n+1) = L(n), f(1) = 1",
    )


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    holds: bool
    first_failure: int | None = None


@dataclass(frozen=True)
class IdentityReport:
    max_index: int
    checks: tuple[IdentityCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.holds for c in self.checks)


def verify_identities(upto: int) -> IdentityReport:
    """Check the cross-family identities for every 1 <= n <= upto:
    L(n) = 2 m(n-1),  L(n) = S(n),  S(n) = 2 s(n),  s(n) = m(n-1)."""
    _require_count(upto, minimum=1)
    m = motzkin32_numbers(upto - 1)
    large = large_motzkin_numbers(upto)
    big, small = schroder_numbers(upto)

    def first_break(predicate) -> int | None:
        for n in range(1, upto + 1):
            if not predicate(n):
                return n
        return None

    pairs = (
        ("L(n) = 2 m(n-1)", lambda n: large[n] == 2 * m[n - 1]),
        ("L(n) = S(n)", lambda n: large[n] == big[n]),
        ("S(n) = 2 s(n)", lambda n: big[n] == 2 * small[n]),
        ("s(n) = m(n-1)", lambda n: small[n] == m[n - 1]),
    )
    checks = []
    for name, predicate in pairs:
        failure = first_break(predicate)
        checks.append(IdentityCheck(name, failure is None, failure))
    return IdentityReport(upto, tuple(checks))
