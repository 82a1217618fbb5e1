"""Data model for Krasner hyperfield candidates and the exhaustive verifier.

A hyperaddition value is a nonempty subset of the carrier 0..n-1, stored as
an int bitmask (bit i set <=> element i is a member).  Candidates keep both
tables as plain nested tuples of ints, which makes them hashable, cheap to
compare, and fast to scan in the enumeration kernel.

Nothing is assumed about a candidate beyond table shape: the distinguished
zero (index 0) and one (index 1) earn their roles through verify(), which
checks the canonical-hypergroup axioms CH1..CH5, the hyperring axioms
KR1..KR3 and the hyperfield axioms HF1..HF2 by exhaustion and reports a
concrete witness for every failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import AxiomViolationError, DomainError, PreconditionError, StructuralError


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class ElementSet:
    """A subset of the carrier 0..n-1 held as a membership mask."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise StructuralError("carrier size must be >= 1")
        if not 0 <= self.mask < (1 << self.n):
            raise StructuralError("membership mask out of range")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "ElementSet":
        idx = tuple(indices)
        if any(not 0 <= i < n for i in idx):
            raise StructuralError("member index out of range")
        return cls(n, mask_of(idx))

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and bool(self.mask >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0


@dataclass(frozen=True)
class HyperfieldCandidate:
    """An order-n table pair: hyperaddition (masks) and multiplication (indices).

    zero is index 0 and one is index 1 by convention; neither role is
    presumed by the data structure -- verify() establishes them.
    """

    n: int
    hyperadd: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    zero = 0
    one = 1

    @classmethod
    def from_sets(cls, n: int, hyperadd_cells, mul) -> "HyperfieldCandidate":
        """Build from per-cell member collections instead of raw masks."""
        rows = tuple(tuple(mask_of(cell) for cell in row) for row in hyperadd_cells)
        return cls(n, rows, tuple(tuple(row) for row in mul))

    def cell(self, a: int, b: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.hyperadd[a][b]))


def validate_candidate(c: HyperfieldCandidate) -> None:
    """Raise StructuralError unless the tables are well-formed."""
    n = c.n
    if n < 2:
        raise StructuralError("carrier must have at least 2 elements")
    if len(c.hyperadd) != n or len(c.mul) != n:
        raise StructuralError("tables must be n x n")
    full = 1 << n
    for row in c.hyperadd:
        if len(row) != n:
            raise StructuralError("tables must be n x n")
        for m in row:
            if not 0 < m < full:
                raise StructuralError("hyperaddition cell empty or out of range")
    for row in c.mul:
        if len(row) != n:
            raise StructuralError("tables must be n x n")
        if any(not 0 <= v < n for v in row):
            raise StructuralError("multiplication entry out of range")


def hyper_sum(c: HyperfieldCandidate, a: int, b: int) -> ElementSet:
    """The hyperaddition value a (+) b."""
    if not (0 <= a < c.n and 0 <= b < c.n):
        raise StructuralError("element index out of range")
    m = c.hyperadd[a][b]
    if m == 0:
        raise StructuralError(f"empty hyperaddition cell at ({a},{b})")
    return ElementSet(c.n, m)


def hyper_sum_sets(c: HyperfieldCandidate, a_set: ElementSet, b_set: ElementSet) -> ElementSet:
    """Union extension of the hyperaddition to subsets."""
    if a_set.n != c.n or b_set.n != c.n:
        raise StructuralError("set carrier size does not match candidate")
    if not a_set or not b_set:
        raise DomainError("hyperaddition of an empty set is undefined")
    out = 0
    rows = c.hyperadd
    for a in a_set:
        row = rows[a]
        for b in b_set:
            out |= row[b]
    return ElementSet(c.n, out)


def opposite(c: HyperfieldCandidate, a: int) -> int:
    """The unique x' with 0 in a (+) x'."""
    if not 0 <= a < c.n:
        raise StructuralError("element index out of range")
    found = tuple(b for b in range(c.n) if c.hyperadd[a][b] & 1)
    if len(found) != 1:
        raise AxiomViolationError(
            f"element {a} has {len(found)} opposites", candidates=found)
    return found[0]


# --- axiom checks ------------------------------------------------------
#
# Each check returns None on success, else (witness, reason) where witness
# is the lexicographically first violating tuple.  verify() runs every
# check regardless of earlier failures (full report, not fail-fast); the
# enumeration kernel reuses the two checks its expansion cannot guarantee.


def _opposites(n, hyperadd):
    opp = []
    for x in range(n):
        found = [y for y in range(n) if hyperadd[x][y] & 1]
        opp.append(found[0] if len(found) == 1 else None)
    return opp


def ch1_violation(n, hyperadd, mul):
    row_cache: dict = {}
    col_cache: dict = {}
    for x in range(n):
        hx = hyperadd[x]
        for y in range(n):
            hxy = hx[y]
            for z in range(n):
                key = (x, hyperadd[y][z])
                left = row_cache.get(key)
                if left is None:
                    left = 0
                    for w in iter_bits(key[1]):
                        left |= hx[w]
                    row_cache[key] = left
                key = (hxy, z)
                right = col_cache.get(key)
                if right is None:
                    right = 0
                    for w in iter_bits(hxy):
                        right |= hyperadd[w][z]
                    col_cache[key] = right
                if left != right:
                    return (x, y, z), "regrouped sums differ"
    return None


def ch2_violation(n, hyperadd, mul):
    for x in range(n):
        for y in range(x + 1, n):
            if hyperadd[x][y] != hyperadd[y][x]:
                return (x, y), "sum not symmetric"
    return None


def ch3_violation(n, hyperadd, mul):
    for x in range(n):
        if hyperadd[0][x] != 1 << x:
            return (x,), "zero row not scalar identity"
    return None


def ch4_violation(n, hyperadd, mul):
    for x in range(n):
        found = [y for y in range(n) if hyperadd[x][y] & 1]
        if not found:
            return (x,), "no opposite"
        if len(found) > 1:
            return (x, found[0], found[1]), "multiple opposites"
    return None


def ch5_violation(n, hyperadd, mul):
    opp = _opposites(n, hyperadd)
    for x in range(n):
        xo = opp[x]
        for y in range(n):
            yo = opp[y]
            members = hyperadd[x][y]
            for z in iter_bits(members):
                if xo is None or yo is None:
                    return (x, y, z), "opposite undefined"
                if not hyperadd[xo][z] >> y & 1:
                    return (x, y, z), "y not in x'(+)z"
                if not hyperadd[z][yo] >> x & 1:
                    return (x, y, z), "x not in z(+)y'"
    return None


def kr1_violation(n, hyperadd, mul):
    for x in range(n):
        for y in range(n):
            mxy = mul[x][y]
            for z in range(n):
                if mul[mxy][z] != mul[x][mul[y][z]]:
                    return (x, y, z), "regrouped products differ"
    return None


def kr2_violation(n, hyperadd, mul):
    for x in range(n):
        if mul[x][0] != 0 or mul[0][x] != 0:
            return (x,), "zero not absorbing"
    return None


def kr3_violation(n, hyperadd, mul):
    scale = {}
    for x in range(n):
        mx = mul[x]
        for y in range(n):
            for z in range(n):
                key = (x, hyperadd[y][z])
                img = scale.get(key)
                if img is None:
                    img = 0
                    for w in iter_bits(key[1]):
                        img |= 1 << mx[w]
                    scale[key] = img
                if img != hyperadd[mx[y]][mx[z]]:
                    return (x, y, z), "left distributivity fails"
                right = 0
                for w in iter_bits(hyperadd[y][z]):
                    right |= 1 << mul[w][x]
                if right != hyperadd[mul[y][x]][mul[z][x]]:
                    return (x, y, z), "right distributivity fails"
    return None


def hf1_violation(n, hyperadd, mul):
    for x in range(n):
        for y in range(x + 1, n):
            if mul[x][y] != mul[y][x]:
                return (x, y), "multiplication not commutative"
    for x in range(n):
        if mul[1][x] != x:
            return (x,), "one not identity"
    return None


def hf2_violation(n, hyperadd, mul):
    for x in range(1, n):
        for y in range(1, n):
            if mul[x][y] == 0:
                return (x, y), "zero divisor"
    for x in range(1, n):
        if not any(mul[x][y] == 1 for y in range(1, n)):
            return (x,), "no multiplicative inverse"
    return None


AXIOM_CHECKS = (
    ("CH1", ch1_violation),
    ("CH2", ch2_violation),
    ("CH3", ch3_violation),
    ("CH4", ch4_violation),
    ("CH5", ch5_violation),
    ("KR1", kr1_violation),
    ("KR2", kr2_violation),
    ("KR3", kr3_violation),
    ("HF1", hf1_violation),
    ("HF2", hf2_violation),
)

AXIOM_NAMES = {
    "CH1": "hyperaddition associative",
    "CH2": "hyperaddition commutative",
    "CH3": "zero scalar identity",
    "CH4": "unique opposite",
    "CH5": "reversibility",
    "KR1": "multiplication associative",
    "KR2": "zero bilaterally absorbing",
    "KR3": "multiplication distributes over hyperaddition",
    "HF1": "multiplication commutative with identity",
    "HF2": "nonzero elements form a group",
}


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    passed: bool
    witness: Optional[tuple[int, ...]] = None
    reason: Optional[str] = None


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[AxiomResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> tuple[AxiomResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def __getitem__(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)


def verify(c: HyperfieldCandidate) -> AxiomReport:
    """Exhaustively check all ten hyperfield axioms; never fail-fast."""
    validate_candidate(c)
    results = []
    for code, fn in AXIOM_CHECKS:
        hit = fn(c.n, c.hyperadd, c.mul)
        if hit is None:
            results.append(AxiomResult(code, True))
        else:
            witness, reason = hit
            results.append(AxiomResult(code, False, witness, reason))
    return AxiomReport(tuple(results))


@dataclass(frozen=True)
class Hyperfield:
    """A candidate that has passed verify(); create via verified()."""

    candidate: HyperfieldCandidate

    @property
    def n(self) -> int:
        return self.candidate.n

    @property
    def hyperadd(self) -> tuple[tuple[int, ...], ...]:
        return self.candidate.hyperadd

    @property
    def mul(self) -> tuple[tuple[int, ...], ...]:
        return self.candidate.mul


def verified(c: HyperfieldCandidate) -> Hyperfield:
    """Verify c and wrap it; raises AxiomViolationError with the report."""
    report = verify(c)
    if not report.ok:
        first = report.failures()[0]
        raise AxiomViolationError(
            f"axiom {first.axiom} fails at {first.witness}: {first.reason}",
            report=report)
    return Hyperfield(c)


def require_verified(h) -> Hyperfield:
    if not isinstance(h, Hyperfield):
        raise PreconditionError("a verified hyperfield is required; call verified() first")
    return h


def relabel(c: HyperfieldCandidate, perm: tuple[int, ...]) -> HyperfieldCandidate:
    """Apply a carrier bijection: new index of old element i is perm[i]."""
    n = c.n
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise DomainError("perm must be a bijection on 0..n-1")
    hyperadd = [[0] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    for a in range(n):
        pa = perm[a]
        for b in range(n):
            img = 0
            for w in iter_bits(c.hyperadd[a][b]):
                img |= 1 << perm[w]
            hyperadd[pa][perm[b]] = img
            mul[pa][perm[b]] = perm[c.mul[a][b]]
    return HyperfieldCandidate(n, tuple(map(tuple, hyperadd)), tuple(map(tuple, mul)))
