"""Isomorphism of hyperfields and relabeling-invariant fingerprints.

A hyperfield isomorphism must fix 0 (the unique scalar additive identity)
and 1 (the unique multiplicative identity) and restricts to a group
isomorphism of the nonzero multiplicative parts.  The search therefore
iterates group isomorphisms only -- backtracking over generator images
consistent with element orders -- and accepts the first extension that
also preserves the hyperaddition setwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Hyperfield, iter_bits, require_verified


@dataclass(frozen=True, order=True)
class Fingerprint:
    """Relabeling-invariant summary; equality is necessary for isomorphism,
    never sufficient."""

    n: int
    cell_sizes: tuple[int, ...]
    mul_orders: tuple[int, ...]
    one_row_profile: tuple[int, ...]
    self_flags: tuple[tuple[bool, bool], ...]


def _mul_orders(n, mul) -> list[int]:
    orders = []
    for x in range(1, n):
        y = x
        k = 1
        while y != 1:
            y = mul[y][x]
            k += 1
        orders.append(k)
    return orders


def fingerprint(h: Hyperfield) -> Fingerprint:
    """Invariant under any carrier relabeling that fixes 0 and 1."""
    h = require_verified(h)
    n, hyperadd, mul = h.n, h.hyperadd, h.mul
    sizes = sorted(hyperadd[a][b].bit_count() for a in range(n) for b in range(n))
    flags = sorted((bool(hyperadd[a][a] >> a & 1), bool(hyperadd[a][a] & 1))
                   for a in range(n))
    return Fingerprint(
        n=n,
        cell_sizes=tuple(sizes),
        mul_orders=tuple(sorted(_mul_orders(n, mul))),
        one_row_profile=tuple(sorted(hyperadd[1][z].bit_count() for z in range(n))),
        self_flags=tuple(flags),
    )


@dataclass(frozen=True)
class IsoWitness:
    """A bijection on carrier indices: element i of the first hyperfield
    corresponds to mapping[i] in the second."""

    mapping: tuple[int, ...]


def is_isomorphism(c1, c2, perm) -> bool:
    """Does perm preserve both tables?  Accepts candidates or hyperfields."""
    n = c1.n
    if c2.n != n or len(perm) != n:
        return False
    for a in range(n):
        for b in range(n):
            if perm[c1.mul[a][b]] != c2.mul[perm[a]][perm[b]]:
                return False
            img = 0
            for w in iter_bits(c1.hyperadd[a][b]):
                img |= 1 << perm[w]
            if img != c2.hyperadd[perm[a]][perm[b]]:
                return False
    return True


def _closure_of(mul, seed: set[int]) -> set[int]:
    span = set(seed)
    frontier = list(span)
    while frontier:
        a = frontier.pop()
        for b in tuple(span):
            c = mul[a][b]
            if c not in span:
                span.add(c)
                frontier.append(c)
    return span


def _generators(n, mul) -> list[int]:
    gens = []
    span = {1}
    for x in range(1, n):
        if x not in span:
            gens.append(x)
            span = _closure_of(mul, span | {x})
    return gens


def _extend(mul1, mul2, assign: dict) -> Optional[dict]:
    # Close a partial map under products; None on contradiction.
    while True:
        changed = False
        items = list(assign.items())
        for a, fa in items:
            for b, fb in items:
                c = mul1[a][b]
                img = mul2[fa][fb]
                cur = assign.get(c)
                if cur is None:
                    assign[c] = img
                    changed = True
                elif cur != img:
                    return None
        if not changed:
            return assign


def _group_isomorphisms(n, mul1, mul2):
    """All isomorphisms of the nonzero multiplicative groups, as dicts on 1..n-1."""
    ord1 = _mul_orders(n, mul1)
    ord2 = _mul_orders(n, mul2)
    if sorted(ord1) != sorted(ord2):
        return
    by_order: dict[int, list[int]] = {}
    for x in range(1, n):
        by_order.setdefault(ord2[x - 1], []).append(x)
    gens = _generators(n, mul1)

    def backtrack(i, assign):
        if i == len(gens):
            if len(set(assign.values())) == n - 1:
                yield dict(assign)
            return
        g = gens[i]
        for u in by_order.get(ord1[g - 1], ()):
            if u in assign.values():
                continue
            trial = dict(assign)
            trial[g] = u
            closed = _extend(mul1, mul2, trial)
            if closed is not None:
                yield from backtrack(i + 1, closed)

    yield from backtrack(0, {1: 1})


def are_isomorphic(h1: Hyperfield, h2: Hyperfield) -> Optional[IsoWitness]:
    """The lexicographically first isomorphism witness, or None.

    Fast paths: order mismatch, then fingerprint mismatch.  The full search
    walks group isomorphisms of the nonzero parts and keeps those that also
    preserve the hyperaddition.
    """
    h1 = require_verified(h1)
    h2 = require_verified(h2)
    if h1.n != h2.n:
        return None
    if fingerprint(h1) != fingerprint(h2):
        return None
    n = h1.n
    best = None
    for phi in _group_isomorphisms(n, h1.mul, h2.mul):
        perm = tuple([0] + [phi[x] for x in range(1, n)])
        if is_isomorphism(h1.candidate, h2.candidate, perm):
            if best is None or perm < best:
                best = perm
    return IsoWitness(best) if best is not None else None
