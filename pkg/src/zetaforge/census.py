"""Brute-force census of closed geodesics and prime classes.

Walks are sequences of darts: an undirected edge contributes two mutually
inverse darts, a loop two inverse darts at the same node, an arrow a
single dart with no inverse.  A closed walk of length m is backtrackless
and tailless when no dart is followed (cyclically, wrap-around included)
by its own inverse.  Closed-walk counts come from powers of the dart
transition matrix; prime classes are extracted by explicit search and
grouped under cyclic rotation only, so a cycle and its reversal are
distinct classes.

This module is deliberately independent of the determinant machinery: it
is the oracle that the zeta-derived series is checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .graphs import MixedGraph

HORIZON_LIMIT = 12


class CensusError(RuntimeError):
    """Inconsistent census state or unusable request."""


class CensusLimitError(CensusError):
    """Requested horizon beyond the enumeration guard."""


@dataclass(frozen=True)
class Dart:
    id: int
    tail: int
    head: int
    inverse: int | None


@dataclass(frozen=True)
class PrimeCensus:
    horizon: int
    closed_counts: list[int]   # index m-1: closed walks of length m
    prime_counts: list[int]    # index m-1: primitive rotation classes
    delta: int                 # gcd of lengths with primes, 0 if none


def build_darts(g: MixedGraph) -> list[Dart]:
    darts: list[Dart] = []
    for i, j in g.edges:
        a = len(darts)
        darts.append(Dart(a, i, j, a + 1))
        darts.append(Dart(a + 1, j, i, a))
    for i, j in g.arrows:
        if i == j:
            raise CensusError(f"arrow self-loop at node {i}; normalize() first")
        darts.append(Dart(len(darts), i, j, None))
    return darts


def _successors(darts: list[Dart]) -> list[list[int]]:
    by_tail: dict[int, list[int]] = {}
    for d in darts:
        by_tail.setdefault(d.tail, []).append(d.id)
    return [[e for e in by_tail.get(d.head, []) if e != d.inverse]
            for d in darts]


def _check_horizon(horizon: int):
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    if horizon > HORIZON_LIMIT:
        raise CensusLimitError(
            f"horizon {horizon} beyond the enumeration guard "
            f"({HORIZON_LIMIT})")


def count_closed_paths(g: MixedGraph, horizon: int) -> list[int]:
    """Closed backtrackless tailless walk counts N_1..N_horizon, start
    position distinguished.  Exact integers via transition-matrix traces."""
    _check_horizon(horizon)
    darts = build_darts(g)
    size = len(darts)
    if size == 0:
        return [0] * horizon
    succ = _successors(darts)
    trans = [[0] * size for _ in range(size)]
    for d in range(size):
        for e in succ[d]:
            trans[d][e] = 1
    counts = []
    power = trans
    for _ in range(horizon):
        counts.append(sum(power[d][d] for d in range(size)))
        power = _matmul(power, trans, size)
    return counts


def _matmul(a, b, size):
    out = [[0] * size for _ in range(size)]
    for i in range(size):
        ai = a[i]
        oi = out[i]
        for k in range(size):
            v = ai[k]
            if v:
                bk = b[k]
                for j in range(size):
                    if bk[j]:
                        oi[j] += v * bk[j]
    return out


def _min_rotation(seq: tuple) -> tuple:
    return min(tuple(seq[k:] + seq[:k]) for k in range(len(seq)))


def _is_primitive(seq: tuple) -> bool:
    m = len(seq)
    for d in range(1, m):
        if m % d == 0 and seq == seq[d:] + seq[:d]:
            return False
    return True


def enumerate_primes(g: MixedGraph, horizon: int) -> PrimeCensus:
    """Count primitive closed-walk classes per length by explicit search.

    Classes are rotations only; orientation reversal is not identified.
    The derived closed-walk counts are cross-checked against the
    transition-matrix counts before returning.
    """
    _check_horizon(horizon)
    darts = build_darts(g)
    succ = _successors(darts)
    prime_counts = [0] * horizon
    for m in range(1, horizon + 1):
        classes: set[tuple] = set()
        for start in range(len(darts)):
            # only walks whose minimal dart id is the start: each rotation
            # class is then generated a bounded number of times
            stack = [(start,)]
            while stack:
                seq = stack.pop()
                if len(seq) == m:
                    last = darts[seq[-1]]
                    if (last.head == darts[start].tail
                            and seq[0] != last.inverse
                            and _is_primitive(seq)):
                        classes.add(_min_rotation(seq))
                    continue
                for nxt in succ[seq[-1]]:
                    if nxt >= start:
                        stack.append(seq + (nxt,))
        for cls in classes:
            rotations = {cls[k:] + cls[:k] for k in range(m)}
            if len(rotations) != m:
                raise CensusError(
                    f"primitive class of length {m} has {len(rotations)} "
                    "rotations")
        prime_counts[m - 1] = len(classes)
    closed = count_closed_paths(g, horizon)
    for m in range(1, horizon + 1):
        derived = sum(d * prime_counts[d - 1]
                      for d in range(1, m + 1) if m % d == 0)
        if derived != closed[m - 1]:
            raise CensusError(
                f"closed-walk count mismatch at length {m}: "
                f"matrix {closed[m - 1]}, classes {derived}")
    lengths = [m for m in range(1, horizon + 1) if prime_counts[m - 1]]
    delta = 0
    for m in lengths:
        delta = gcd(delta, m)
    return PrimeCensus(horizon, closed, prime_counts, delta)


def pnt_ratios(census: PrimeCensus, r_g: float) -> dict[int, float]:
    """Diagnostic ratios pi(m) * m * R^m / delta for lengths divisible by
    delta; the prime-count asymptotics drive these toward 1 on expanders."""
    if census.delta == 0:
        raise CensusError("graph has no primes within the horizon")
    out = {}
    for m in range(1, census.horizon + 1):
        if m % census.delta == 0:
            out[m] = (census.prime_counts[m - 1] * m * r_g ** m
                      / census.delta)
    return out
