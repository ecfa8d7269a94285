"""Weight hierarchies, gap numbers and duality checks for linear codes.

The i-th hierarchy value of a code C with parity-check matrix H is

    d_i = min{ |S| : |S| - rank(H_S) >= i },

because the subcode of C supported inside a coordinate set S has dimension
|S| - rank(H_S).  A single ascending sweep over support sizes s = 1..n finds
all d_i at once: the per-size maximum of |S| - rank(H_S) is monotone in s,
so d_i is the first size whose maximum reaches i.  Subsets are enumerated
lexicographically with an incremental column basis and a pruning bound
(s - rank so far) that cannot change the result.

``ghw_oracle`` recomputes d_i straight from the definition by enumerating
every i-dimensional subcode once (canonical RREF bases over the message
space) and exists solely to validate the subset-rank route.
"""

from __future__ import annotations

import time
from bisect import insort
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from .algebra import Matrix
from .code import LinearCode, SubcodeWitness

DEFAULT_LIMIT_N = 24
DEFAULT_ORACLE_LIMIT = 10**6
_ORACLE_SUBSPACE_CAP = 2 * 10**6


class LimitError(RuntimeError):
    """Instance exceeds an enumeration limit or the wall-time guard."""


# ---------------------------------------------------------------------------
# Subset-rank sweep


def _column_vectors(mat: Matrix) -> list[tuple[int, ...]]:
    return [mat.column(j) for j in range(mat.ncols)]


def _max_excess_for_size(cols, m, s, need, fld, deadline):
    """Maximum of |S| - rank(columns S) over |S| = s, with its first argmax.

    Values below `need` are not distinguished (they are pruned); the return
    is exact whenever it is >= need.
    """
    n = len(cols)
    best = need - 1
    best_subset: tuple[int, ...] | None = None
    sub, mul, inv = fld.sub, fld.mul, fld.inv
    basis: list[tuple[int, list[int]]] = []
    chosen: list[int] = []
    ticks = [0]

    def extend(start: int, remaining: int) -> None:
        nonlocal best, best_subset
        ticks[0] += 1
        if deadline is not None and ticks[0] % 1024 == 0 and time.monotonic() > deadline:
            raise LimitError("wall-time guard exceeded during hierarchy sweep")
        last = n - remaining
        for j in range(start, last + 1):
            vec = list(cols[j])
            for p, b in basis:
                c = vec[p]
                if c:
                    for t in range(p, m):
                        if b[t]:
                            vec[t] = sub(vec[t], mul(c, b[t]))
            piv = -1
            for t in range(m):
                if vec[t]:
                    piv = t
                    break
            new_rank = len(basis) + (piv >= 0)
            if s - new_rank <= best:
                continue
            chosen.append(j)
            if remaining == 1:
                best = s - new_rank
                best_subset = tuple(chosen)
                chosen.pop()
                continue
            if piv >= 0:
                sc = inv(vec[piv])
                if sc != 1:
                    vec = [mul(sc, e) for e in vec]
                entry = (piv, vec)
                insort(basis, entry)
                extend(j + 1, remaining - 1)
                basis.remove(entry)
            else:
                extend(j + 1, remaining - 1)
            chosen.pop()

    extend(0, s)
    return best, best_subset


def _sweep_hierarchy(check: Matrix, dims: int, *, collect_subsets: bool,
                     deadline: float | None):
    """All d_1..d_dims for the code with the given check matrix."""
    n = check.ncols
    m = check.nrows
    cols = _column_vectors(check)
    values: list[int] = [0] * (dims + 1)
    subsets: dict[int, tuple[int, ...]] = {}
    i_min = 1
    for s in range(1, n + 1):
        if i_min > dims:
            break
        best, best_subset = _max_excess_for_size(cols, m, s, i_min, check.field, deadline)
        if best >= i_min:
            for i in range(i_min, best + 1):
                values[i] = s
                if collect_subsets:
                    subsets[i] = best_subset
            i_min = best + 1
    if i_min <= dims:  # pragma: no cover - rank(check) = n - dims guarantees completion
        raise RuntimeError("hierarchy sweep did not resolve every index")
    return values[1:], subsets


def _witness_from_subset(code: LinearCode, subset: tuple[int, ...]) -> SubcodeWitness:
    """Basis of the subcode supported inside `subset`, embedded at full length."""
    sub_matrix = Matrix(code.field, [[row[j] for j in subset] for row in code.check.rows],
                        ncols=len(subset))
    ns = sub_matrix.nullspace()
    basis = []
    for srow in ns.rows:
        full = [0] * code.n
        for pos, j in enumerate(subset):
            full[j] = srow[pos]
        basis.append(tuple(full))
    return SubcodeWitness(basis=tuple(basis), dimension=ns.nrows, support=tuple(subset))


def _guard(code: LinearCode, limit_n: int) -> None:
    if code.n > limit_n:
        raise LimitError(f"code length {code.n} exceeds enumeration limit {limit_n}")


def _deadline(time_limit: float | None) -> float | None:
    return None if time_limit is None else time.monotonic() + time_limit


@dataclass(frozen=True)
class WeightHierarchy:
    """d_1..d_k of a code plus the gap numbers (complement in 1..n)."""

    code: LinearCode
    values: tuple[int, ...]
    gaps: tuple[int, ...]
    witnesses: dict[int, SubcodeWitness] | None = None

    def __post_init__(self) -> None:
        v = self.values
        if any(v[i] >= v[i + 1] for i in range(len(v) - 1)):
            raise ValueError(f"hierarchy not strictly increasing: {v}")
        n = self.code.n
        expected = tuple(sorted(set(range(1, n + 1)) - set(v)))
        if self.gaps != expected:
            raise ValueError("gap numbers are not the complement of the hierarchy")

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]


def ghw(code: LinearCode, i: int, *, with_witness: bool = True,
        limit_n: int = DEFAULT_LIMIT_N, time_limit: float | None = None):
    """The i-th hierarchy value and (optionally) a witness subcode."""
    if not 1 <= i <= code.k:
        raise ValueError(f"index i={i} outside 1..k={code.k}")
    _guard(code, limit_n)
    deadline = _deadline(time_limit)
    cols = _column_vectors(code.check)
    m = code.check.nrows
    for s in range(i, code.n + 1):
        best, best_subset = _max_excess_for_size(cols, m, s, i, code.field, deadline)
        if best >= i:
            witness = _witness_from_subset(code, best_subset) if with_witness else None
            return s, witness
    raise RuntimeError(f"no support of dimension {i} found")  # pragma: no cover


def weight_hierarchy(code: LinearCode, *, with_witnesses: bool = False,
                     limit_n: int = DEFAULT_LIMIT_N,
                     time_limit: float | None = None) -> WeightHierarchy:
    _guard(code, limit_n)
    values, subsets = _sweep_hierarchy(code.check, code.k,
                                       collect_subsets=with_witnesses,
                                       deadline=_deadline(time_limit))
    gaps = tuple(sorted(set(range(1, code.n + 1)) - set(values)))
    witnesses = None
    if with_witnesses:
        cache: dict[tuple[int, ...], SubcodeWitness] = {}
        witnesses = {}
        for i, subset in subsets.items():
            if subset not in cache:
                cache[subset] = _witness_from_subset(code, subset)
            witnesses[i] = cache[subset]
    return WeightHierarchy(code=code, values=tuple(values), gaps=gaps,
                           witnesses=witnesses)


def gap_numbers(code: LinearCode, *, limit_n: int = DEFAULT_LIMIT_N,
                time_limit: float | None = None) -> tuple[int, ...]:
    """Sorted {1..n} minus the weight hierarchy; always n-k values."""
    return weight_hierarchy(code, limit_n=limit_n, time_limit=time_limit).gaps


# ---------------------------------------------------------------------------
# Duality


@dataclass(frozen=True)
class DualityReport:
    """Outcome of the two hierarchy/dual-hierarchy identities."""

    holds: bool
    complement_identity: bool
    gap_identity: bool
    primal: tuple[int, ...]
    dual: tuple[int, ...]
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


def dual_hierarchy_values(code: LinearCode, *, limit_n: int = DEFAULT_LIMIT_N,
                          time_limit: float | None = None) -> tuple[int, ...]:
    """Hierarchy of the dual code; empty for a full-space code (k = n)."""
    if code.k == code.n:
        return ()
    dual_h = weight_hierarchy(code.dual(), limit_n=limit_n, time_limit=time_limit)
    return dual_h.values


def check_wei_duality(code: LinearCode, *, limit_n: int = DEFAULT_LIMIT_N,
                      time_limit: float | None = None) -> DualityReport:
    """Verify {d_i} = {1..n} \\ {n+1-d_j of the dual} and the gap form
    d_i = (n+1) - g_{k-i+1} of the dual, both exactly."""
    n, k = code.n, code.k
    primal = weight_hierarchy(code, limit_n=limit_n, time_limit=time_limit)
    dual_values = dual_hierarchy_values(code, limit_n=limit_n, time_limit=time_limit)
    violations: list[str] = []

    mirror = {n + 1 - dj for dj in dual_values}
    complement_ok = set(primal.values) == set(range(1, n + 1)) - mirror
    if not complement_ok:
        violations.append(
            f"complement identity: {sorted(primal.values)} != "
            f"{sorted(set(range(1, n + 1)) - mirror)}"
        )

    dual_gaps = tuple(sorted(set(range(1, n + 1)) - set(dual_values)))  # k values
    gap_ok = True
    for i in range(1, k + 1):
        expected = (n + 1) - dual_gaps[k - i]
        if primal.values[i - 1] != expected:
            gap_ok = False
            violations.append(f"gap identity at i={i}: d_i={primal.values[i - 1]} "
                              f"!= {expected}")
    return DualityReport(holds=complement_ok and gap_ok,
                         complement_identity=complement_ok,
                         gap_identity=gap_ok,
                         primal=primal.values,
                         dual=dual_values,
                         violations=tuple(violations))


def gk_dual(code: LinearCode, *, limit_n: int = DEFAULT_LIMIT_N,
            time_limit: float | None = None) -> int:
    """The k-th gap number of the dual code.

    Cross-checks the max characterization (largest k+i with dual d_i < k+i),
    the min characterization (smallest k+i with dual d_i = k+i, minus one)
    and the relation d_1 = n+1 - g_k of the dual; any disagreement raises.
    """
    n, k = code.n, code.k
    dual_values = dual_hierarchy_values(code, limit_n=limit_n, time_limit=time_limit)
    below = [k + i for i in range(1, n - k + 1) if dual_values[i - 1] < k + i]
    at = [k + i for i in range(1, n - k + 1) if dual_values[i - 1] == k + i]
    max_form = max(below) if below else k
    min_form = (min(at) - 1) if at else n
    if max_form != min_form:
        raise RuntimeError(f"gap characterizations disagree: {max_form} vs {min_form}")
    dual_gaps = tuple(sorted(set(range(1, n + 1)) - set(dual_values)))
    if dual_gaps[-1] != max_form:
        raise RuntimeError(f"computed dual gaps give {dual_gaps[-1]}, "
                           f"characterization gives {max_form}")
    d1, _ = ghw(code, 1, with_witness=False, limit_n=limit_n, time_limit=time_limit)
    if d1 != n + 1 - max_form:
        raise RuntimeError(f"d_1={d1} but n+1-g_k = {n + 1 - max_form}")
    return max_form


# ---------------------------------------------------------------------------
# Definition-level oracle


def _gaussian_binomial(k: int, i: int, q: int) -> int:
    num = den = 1
    for t in range(i):
        num *= q ** (k - t) - 1
        den *= q ** (t + 1) - 1
    return num // den


def ghw_oracle(code: LinearCode, i: int, *, limit: int = DEFAULT_ORACLE_LIMIT) -> int:
    """d_i straight from the definition: minimum support size over all
    i-dimensional subcodes, each counted once via its canonical RREF basis
    in the message space."""
    if not 1 <= i <= code.k:
        raise ValueError(f"index i={i} outside 1..k={code.k}")
    q, k, n = code.field.q, code.k, code.n
    if q**k > limit:
        raise LimitError(f"q^k = {q**k} exceeds oracle limit {limit}")
    n_subspaces = _gaussian_binomial(k, i, q)
    if n_subspaces > _ORACLE_SUBSPACE_CAP:
        raise LimitError(f"{n_subspaces} subcodes of dimension {i} exceed the "
                         f"oracle cap {_ORACLE_SUBSPACE_CAP}")
    gen = code.generator

    def mask_of(message: Sequence[int]) -> int:
        word = gen.left_mul_vector(message)
        m = 0
        for j, e in enumerate(word):
            if e:
                m |= 1 << j
        return m

    best = n + 1
    for pivots in combinations(range(k), i):
        pivot_set = set(pivots)
        row_options: list[list[int]] = []
        for t, p in enumerate(pivots):
            free = [c for c in range(p + 1, k) if c not in pivot_set]
            options = []
            for assignment in product(range(q), repeat=len(free)):
                row = [0] * k
                row[p] = 1
                for c, v in zip(free, assignment):
                    row[c] = v
                options.append(mask_of(row))
            row_options.append(options)
        for masks in product(*row_options):
            union = 0
            for m in masks:
                union |= m
            w = union.bit_count()
            if w < best:
                best = w
    return best
