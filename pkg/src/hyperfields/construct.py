"""Constructions of Krasner hyperfields.

From a finite field: the quotient F/G by a multiplicative subgroup, and
the triple-sum (Massouros) hyperfield on the field's carrier.  From a
group alone: the pair hyperfield, which exists at every order.  The
componentwise cartesian product of two hyperfields is also here, and it is
deliberately honest about its mathematics: its tables form a hyperring but
never a hyperfield (the axes carry zero divisors), so product() always
surfaces that verification failure; hyperfield_of_order() consequently
synthesizes non-prime-power orders from the pair hyperfield instead.

Every construction verifies its result before returning and raises
ConstructionError otherwise, so a returned value is a guarantee, not a
claim.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Hyperfield,
    HyperfieldCandidate,
    iter_bits,
    require_verified,
    verified,
)
from .errors import AxiomViolationError, CapacityError, ConstructionError, DomainError
from .galois import FieldTable, factor_integer, gf

MAX_SYNTH_ORDER = 64


def _verify_or_raise(c: HyperfieldCandidate, what: str) -> Hyperfield:
    try:
        return verified(c)
    except AxiomViolationError as exc:
        raise ConstructionError(f"{what} failed verification: {exc}",
                                report=exc.report) from exc


def from_field(f: FieldTable) -> Hyperfield:
    """A field is a hyperfield with singleton sums a(+)b = {a+b}."""
    hyperadd = tuple(tuple(1 << v for v in row) for row in f.add)
    return _verify_or_raise(HyperfieldCandidate(f.q, hyperadd, f.mul),
                            f"field-as-hyperfield of order {f.q}")


@dataclass(frozen=True)
class SubgroupSpec:
    """A subgroup of the multiplicative group of a field, given by closure."""

    field: FieldTable
    generators: tuple[int, ...]
    closure: frozenset[int]

    def __post_init__(self):
        f = self.field
        if 0 in self.closure or 1 not in self.closure:
            raise DomainError("subgroup must contain 1 and exclude 0")
        for a in self.closure:
            for b in self.closure:
                if f.mul[a][b] not in self.closure:
                    raise DomainError("closure is not multiplicatively closed")
        if (f.q - 1) % len(self.closure) != 0:
            raise DomainError("subgroup size must divide q-1")


def subgroup_closure(f: FieldTable, gens) -> SubgroupSpec:
    """Smallest multiplicatively closed subset containing 1 and the generators."""
    gens = tuple(gens)
    for g in gens:
        if g == 0:
            raise DomainError("0 cannot generate a multiplicative subgroup")
        if not 0 < g < f.q:
            raise DomainError(f"generator {g} out of range")
    closure = {1, *gens}
    frontier = list(closure)
    while frontier:
        a = frontier.pop()
        for b in tuple(closure):
            for prod in (f.mul[a][b], f.mul[b][a]):
                if prod not in closure:
                    closure.add(prod)
                    frontier.append(prod)
    return SubgroupSpec(f, gens, frozenset(closure))


def quotient(f: FieldTable, g: SubgroupSpec) -> Hyperfield:
    """Krasner quotient F/G: cosets of G, with cG in aG (+) bG iff cG meets aG + bG."""
    if g.field is not f and (g.field.add != f.add or g.field.mul != f.mul):
        raise DomainError("subgroup was built over a different field")
    q = f.q
    # Carrier: the zero coset {0} at index 0, G itself at index 1, the rest
    # ordered by their smallest field element.
    cosets = {frozenset((0,))}
    for a in range(1, q):
        cosets.add(frozenset(f.mul[a][s] for s in g.closure))
    ordered = sorted(cosets, key=min)
    coset_of = [0] * q
    for idx, coset in enumerate(ordered):
        for elem in coset:
            coset_of[elem] = idx
    n = len(ordered)

    hyperadd = [[0] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    reps = [min(c) for c in ordered]
    for i, a_coset in enumerate(ordered):
        for j, b_coset in enumerate(ordered):
            members = 0
            for a in a_coset:
                row = f.add[a]
                for b in b_coset:
                    members |= 1 << coset_of[row[b]]
            hyperadd[i][j] = members
            mul[i][j] = coset_of[f.mul[reps[i]][reps[j]]]

    c = HyperfieldCandidate(n, tuple(map(tuple, hyperadd)), tuple(map(tuple, mul)))
    return _verify_or_raise(c, f"quotient of GF({q}) by subgroup of size {len(g.closure)}")


def massouros(f: FieldTable) -> Hyperfield:
    """Triple-sum hyperfield on a field: a(+)b = {a, b, a+b} for nonzero
    non-opposite a, b (including a = b), a(+)0 = {a}, and a(+)a' = the full
    carrier when a' is the additive inverse of a."""
    q = f.q
    full = (1 << q) - 1
    neg = [f.neg(a) for a in range(q)]
    hyperadd = [[0] * q for _ in range(q)]
    for a in range(q):
        hyperadd[a][0] = 1 << a
        hyperadd[0][a] = 1 << a
    for a in range(1, q):
        for b in range(1, q):
            if b == neg[a]:
                hyperadd[a][b] = full
            else:
                hyperadd[a][b] = (1 << a) | (1 << b) | (1 << f.add[a][b])
    c = HyperfieldCandidate(q, tuple(map(tuple, hyperadd)), f.mul)
    return _verify_or_raise(c, f"triple-sum hyperfield on GF({q})")


def product_candidate(h1: Hyperfield, h2: Hyperfield) -> HyperfieldCandidate:
    """Componentwise cartesian-product tables, unverified.

    Pairs are relabelled so (0,0) -> 0 and (1,1) -> 1; every other pair
    takes the next index in row-major order of (i, j).

    Note the result is a Krasner hyperring but never a hyperfield when both
    orders are >= 2: the axis pairs are zero divisors, e.g.
    (1,0).(0,1) = (0,0), so the nonzero part is not a multiplicative group.
    """
    h1 = require_verified(h1)
    h2 = require_verified(h2)
    n1, n2 = h1.n, h2.n
    n = n1 * n2
    index = {}
    nxt = 2
    for i in range(n1):
        for j in range(n2):
            if (i, j) == (0, 0):
                index[i, j] = 0
            elif (i, j) == (1, 1):
                index[i, j] = 1
            else:
                index[i, j] = nxt
                nxt += 1
    pairs = sorted(index, key=index.get)

    # Componentwise masks are translated through the pair indexing.
    hyperadd = [[0] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    for (a, b) in pairs:
        x = index[a, b]
        for (c, d) in pairs:
            y = index[c, d]
            members = 0
            for i in iter_bits(h1.hyperadd[a][c]):
                for j in iter_bits(h2.hyperadd[b][d]):
                    members |= 1 << index[i, j]
            hyperadd[x][y] = members
            mul[x][y] = index[h1.mul[a][c], h2.mul[b][d]]

    return HyperfieldCandidate(n, tuple(map(tuple, hyperadd)), tuple(map(tuple, mul)))


def product(h1: Hyperfield, h2: Hyperfield) -> Hyperfield:
    """Verify the componentwise product tables; see product_candidate().

    For input orders >= 2 this always raises ConstructionError with an HF2
    zero-divisor witness on an axis pair -- that failure is a theorem, not
    a bug, and the verifier is the instrument that exhibits it.
    """
    c = product_candidate(h1, h2)
    return _verify_or_raise(c, f"product of orders {h1.n} and {h2.n}")


def pair_hyperfield(n: int) -> Hyperfield:
    """The hyperfield on {0} u C_{n-1} with x(+)y = {x, y} for distinct
    nonzero x, y and x(+)x = the full carrier (every element is its own
    opposite).  Exists for every n >= 2 and is the existence witness used
    for orders where no field-based construction applies."""
    if n < 2:
        raise DomainError("order must be at least 2")
    m = n - 1
    mul = [[0] * n for _ in range(n)]
    for x in range(1, n):
        for y in range(1, n):
            mul[x][y] = (x - 1 + y - 1) % m + 1
    full = (1 << n) - 1
    hyperadd = [[0] * n for _ in range(n)]
    for x in range(n):
        hyperadd[0][x] = 1 << x
        hyperadd[x][0] = 1 << x
    for x in range(1, n):
        for y in range(1, n):
            hyperadd[x][y] = full if x == y else (1 << x) | (1 << y)
    c = HyperfieldCandidate(n, tuple(map(tuple, hyperadd)), tuple(map(tuple, mul)))
    return _verify_or_raise(c, f"pair hyperfield of order {n}")


def hyperfield_of_order(n: int) -> Hyperfield:
    """A Krasner hyperfield with exactly n elements, for any 2 <= n <= 64.

    Prime-power orders take the triple-sum hyperfield of GF(n).  Other
    orders cannot come from folding factor hyperfields with product() --
    the componentwise product never passes verification (zero divisors on
    the axes) -- so they use pair_hyperfield(n) instead.  Both paths are
    deterministic, so outputs are byte-reproducible.
    """
    if n < 2:
        raise DomainError("order must be at least 2")
    if n > MAX_SYNTH_ORDER:
        raise CapacityError(f"order {n} exceeds synthesis bound {MAX_SYNTH_ORDER}")
    factors = factor_integer(n).factors
    if len(factors) == 1:
        return massouros(gf(factors[0].p, factors[0].k))
    return pair_hyperfield(n)
