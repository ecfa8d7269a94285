"""Locality of code coordinates and greedy covering sets of dual codewords.

The locality of coordinate j is min{wt(h) - 1 : h in the dual, h_j != 0}:
one less than the lightest parity check touching j.  Two equivalent routes
compute it:

* direct enumeration of the dual code when q^(n-k) is small, and
* an ascending support-size search otherwise: a dual codeword covering j
  with support inside S exists iff the dual subcode supported in S is
  strictly larger than the one supported in S \\ {j}, i.e.
  |S| - rank(G_S) > |S \\ {j}| - rank(G_{S - j}).

Both return the same minima.  A coordinate j with no covering dual codeword
at all (the unit vector e_j is a codeword) has no locality and raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .algebra import Matrix
from .code import CodeValidationError, LinearCode, hamming_weight, support

_DUAL_ENUM_CAP = 1 << 16


class UncoverableCoordinateError(CodeValidationError):
    """Some coordinate lies in no dual codeword support (e_j is a codeword)."""


@dataclass(frozen=True)
class LocalityProfile:
    """Per-coordinate localities, the overall locality r = max, and a greedy
    covering set of dual codewords of weight <= r+1."""

    per_coordinate: tuple[int, ...]
    r: int
    covering_rows: tuple[tuple[int, ...], ...]


def _guard_redundancy(code: LinearCode) -> None:
    if code.k >= code.n:
        raise CodeValidationError("code has no redundancy (k = n): locality undefined")


def _localities_by_dual_enum(code: LinearCode) -> list[int | None]:
    """Min covering dual weight minus one for every coordinate, by walking
    all q^(n-k) dual codewords (span built incrementally, one vector
    addition per codeword)."""
    n = code.n
    best: list[int | None] = [None] * n
    fld = code.field
    add, mul = fld.add, fld.mul
    words: list[tuple[int, ...]] = [(0,) * n]
    for row in code.check.rows:
        scaled = [tuple(mul(c, e) for e in row) for c in range(1, fld.q)]
        words.extend(tuple(add(a, b) for a, b in zip(w, srow))
                     for w in list(words) for srow in scaled)
    for word in words:
        w = hamming_weight(word)
        if w == 0:
            continue
        for j, e in enumerate(word):
            if e and (best[j] is None or w - 1 < best[j]):
                best[j] = w - 1
    return best


def _cover_exists(gen: Matrix, subset: Sequence[int], j: int) -> bool:
    """Is there a dual codeword with support inside `subset` covering j?"""
    with_j = gen.rank_of_columns(subset)
    rest = [c for c in subset if c != j]
    without_j = gen.rank_of_columns(rest)
    return len(subset) - with_j > len(rest) - without_j


def _min_cover_subset(code: LinearCode, j: int, w_cap: int) -> tuple[int, ...] | None:
    """Lexicographically first support of minimal size (up to w_cap) that
    carries a dual codeword covering j."""
    n = code.n
    others = [c for c in range(n) if c != j]
    gen = code.generator
    for w in range(1, w_cap + 1):
        for extra in combinations(others, w - 1):
            subset = tuple(sorted((j,) + extra))
            if _cover_exists(gen, subset, j):
                return subset
    return None


def _extract_cover_word(code: LinearCode, subset: Sequence[int], j: int) -> tuple[int, ...]:
    """A dual codeword supported inside `subset` with entry 1 at j."""
    fld = code.field
    sub_matrix = Matrix(fld, [[row[c] for c in subset] for row in code.generator.rows],
                        ncols=len(subset))
    pos = list(subset).index(j)
    for row in sub_matrix.nullspace().rows:
        if row[pos]:
            scale = fld.inv(row[pos])
            full = [0] * code.n
            for t, c in enumerate(subset):
                full[c] = fld.mul(scale, row[t])
            return tuple(full)
    raise RuntimeError("no covering dual codeword in a subset that passed "
                       "the rank test")  # pragma: no cover


def coordinate_locality(code: LinearCode, j: int) -> int:
    """Locality of coordinate j (0-based): min covering dual weight minus one."""
    _guard_redundancy(code)
    if not 0 <= j < code.n:
        raise IndexError(f"coordinate {j} out of range")
    if code.field.q ** (code.n - code.k) <= _DUAL_ENUM_CAP:
        r = _localities_by_dual_enum(code)[j]
        if r is None:
            raise UncoverableCoordinateError(
                f"coordinate {j + 1} lies in no dual codeword support")
        return r
    subset = _min_cover_subset(code, j, min(code.n, code.k + 1))
    if subset is None:
        raise UncoverableCoordinateError(
            f"coordinate {j + 1} lies in no dual codeword support")
    return len(subset) - 1


def locality(code: LinearCode) -> LocalityProfile:
    """Exact locality profile; r is the maximum per-coordinate locality."""
    _guard_redundancy(code)
    if code.field.q ** (code.n - code.k) <= _DUAL_ENUM_CAP:
        per = _localities_by_dual_enum(code)
        bad = [j + 1 for j, r in enumerate(per) if r is None]
        if bad:
            raise UncoverableCoordinateError(
                f"coordinate(s) {bad} lie in no dual codeword support")
        per_coordinate = tuple(per)  # type: ignore[arg-type]
    else:
        per_coordinate = tuple(coordinate_locality(code, j) for j in range(code.n))
    r = max(per_coordinate)
    rows = covering_rows(code, r)
    return LocalityProfile(per_coordinate=per_coordinate, r=r,
                           covering_rows=tuple(rows))


def covering_rows(code: LinearCode, r: int) -> list[tuple[int, ...]]:
    """Greedy covering: repeatedly pick a minimum-weight dual codeword for the
    smallest uncovered coordinate (lex-smallest support, entry 1 there).

    Every row has weight <= r+1 and covers a previously uncovered coordinate,
    so the rows are linearly independent.
    """
    _guard_redundancy(code)
    if r < 1:
        raise ValueError(f"locality parameter must be >= 1, got {r}")
    uncovered = set(range(code.n))
    rows: list[tuple[int, ...]] = []
    while uncovered:
        j = min(uncovered)
        subset = _min_cover_subset(code, j, min(r + 1, code.n))
        if subset is None:
            raise ValueError(f"coordinate {j + 1} has locality above {r}")
        word = _extract_cover_word(code, subset, j)
        rows.append(word)
        uncovered -= set(support(word))
    return rows


def is_lrc(code: LinearCode, r: int) -> bool:
    """True iff every coordinate has locality <= r."""
    if code.k >= code.n or r < 1:
        return False
    if code.field.q ** (code.n - code.k) <= _DUAL_ENUM_CAP:
        per = _localities_by_dual_enum(code)
        return all(x is not None and x <= r for x in per)
    return all(_min_cover_subset(code, j, min(r + 1, code.n)) is not None
               for j in range(code.n))
