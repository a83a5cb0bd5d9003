"""Cyclic codes over the 64-element chain ring.

A code of length n is an ideal of R[x]/(x^n - 1) where R = F2[u]/(u^6).
It is described here by a divisor tower (f0,...,f5) of binary
polynomials and realized as the ideal generated by the packed words of
u^i * fi(x).  Because F2 sits inside R, every such ideal is also an
F2-vector space of 6n-bit vectors, which is what makes membership,
sizing and enumeration cheap: everything reduces to XOR linear algebra
plus the torsion filtration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from . import codons, metrics, ring64
from .gf2poly import (
    Gf2Poly,
    GuardExceeded,
    factor_xn_minus_1,
    x_pow_n_minus_1,
)

DEFAULT_GUARD = 2**20


class TowerError(ValueError):
    """The six polynomials do not form an admissible divisor tower."""


def validate_tower(n: int, polys: Sequence[Gf2Poly]) -> tuple[Gf2Poly, ...]:
    """Check the divisibility constraints for a tower of length n.

    Odd n requires the full chain f5 | f4 | ... | f1 | f0 | x^n-1.
    Even n only requires fi | f0 and f0 | x^n-1.
    """
    if n < 1:
        raise TowerError(f"length must be positive, got {n}")
    polys = tuple(polys)
    if len(polys) != 6:
        raise TowerError(f"need six polynomials, got {len(polys)}")
    modulus = x_pow_n_minus_1(n)
    f0 = polys[0]
    if not f0 or not f0.divides(modulus):
        raise TowerError(f"f0 = {f0} does not divide x^{n}-1")
    for i, f in enumerate(polys):
        if not f:
            raise TowerError(f"f{i} is zero")
        if not f.divides(modulus):
            raise TowerError(f"f{i} = {f} does not divide x^{n}-1")
        if not f.divides(f0):
            raise TowerError(f"f{i} = {f} does not divide f0 = {f0}")
    if n % 2 == 1:
        for i in range(5):
            hi, lo = polys[i], polys[i + 1]
            if not lo.divides(hi):
                raise TowerError(
                    f"odd length needs f{i+1} | f{i}; "
                    f"got f{i+1} = {lo}, f{i} = {hi}"
                )
    return polys


def tower_str(polys: Sequence[Gf2Poly]) -> str:
    return ", ".join(f"f{i}={f}" for i, f in enumerate(polys))


class Echelon:
    """Incremental row-echelon basis for packed bit vectors over F2."""

    __slots__ = ("_rows",)

    def __init__(self, vectors: Iterable[int] = ()):
        self._rows: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def reduce(self, v: int) -> int:
        rows = self._rows
        while v:
            lead = v.bit_length() - 1
            row = rows.get(lead)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        self._rows[v.bit_length() - 1] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    @property
    def dim(self) -> int:
        return len(self._rows)

    def basis(self) -> tuple[int, ...]:
        return tuple(self._rows[k] for k in sorted(self._rows, reverse=True))

    def span(self, guard: int = DEFAULT_GUARD) -> list[int]:
        """All 2^dim spanned vectors, one XOR per step (Gray-walk order)."""
        if 1 << self.dim > guard:
            raise GuardExceeded(
                f"span has {1 << self.dim} words, above the guard {guard}",
                1 << self.dim,
            )
        basis = self.basis()
        out = [0]
        w = 0
        for k in range(1, 1 << len(basis)):
            w ^= basis[(k & -k).bit_length() - 1]
            out.append(w)
        return out


def word_to_levelmajor(w: int, n: int) -> int:
    """Regroup a packed word by u-level: level 0 in the top n bits."""
    v = 0
    for level in range(6):
        part = 0
        bit = level
        for j in range(n):
            if (w >> bit) & 1:
                part |= 1 << j
            bit += 6
        v |= part << ((5 - level) * n)
    return v


def levelmajor_to_word(v: int, n: int) -> int:
    w = 0
    for level in range(6):
        part = (v >> ((5 - level) * n)) & ((1 << n) - 1)
        bit = level
        for j in range(n):
            if (part >> j) & 1:
                w |= 1 << bit
            bit += 6
    return w


@dataclass(frozen=True)
class TorsionLevel:
    level: int
    generator: Gf2Poly
    dim: int


@dataclass(frozen=True)
class TorsionProfile:
    """The six torsion codes of a code, with the derived invariants.

    levels[i] describes Tor_i as a binary cyclic code of length n; k[i]
    counts the new generators appearing at u-level i, so rank = sum(k)
    = dim Tor_5 and log2 |C| = sum of all six dims.
    """

    n: int
    levels: tuple[TorsionLevel, ...]
    k: tuple[int, ...]
    rank: int
    log2_size: int

    def size(self) -> int:
        return 1 << self.log2_size


def alpha_identity_word(n: int) -> int:
    """The word with every coordinate equal to the all-ones element."""
    return ring64.full_mask(n)


class CyclicCodeR:
    """An ideal of R[x]/(x^n - 1) given by generator words."""

    def __init__(
        self,
        n: int,
        generator_words: Iterable[int],
        tower: tuple[Gf2Poly, ...] | None = None,
    ):
        self.n = n
        self.generators = tuple(
            w & ring64.full_mask(n) for w in generator_words
        )
        self.tower = tower

    @classmethod
    def from_tower(cls, n: int, polys: Sequence[Gf2Poly]) -> "CyclicCodeR":
        polys = validate_tower(n, polys)
        gens = []
        for i, f in enumerate(polys):
            w = ring64.word_from_poly(f.value, n, level=i)
            if w:
                gens.append(w)
        return cls(n, gens, tower=polys)

    def __repr__(self):
        if self.tower is not None:
            return f"CyclicCodeR(n={self.n}, {tower_str(self.tower)})"
        return f"CyclicCodeR(n={self.n}, {len(self.generators)} generators)"

    # -- linear algebra core ------------------------------------------------

    def spanning_words(self) -> list[int]:
        """An F2-spanning set: every shift of u^m * g for each generator.

        Multiplying a generator by an arbitrary ring-polynomial
        coefficient decomposes into XORs of these, so their F2-span is
        the whole ideal.
        """
        out = []
        n = self.n
        for g in self.generators:
            w = g
            for _ in range(6):
                if w:
                    s = w
                    for _ in range(n):
                        out.append(s)
                        s = ring64.word_shift(s, n)
                w = ring64.word_scale_u(w, n)
        return out

    @cached_property
    def _echelon(self) -> Echelon:
        return Echelon(self.spanning_words())

    @property
    def dim(self) -> int:
        """log2 of the code size (the code is an F2-subspace)."""
        return self._echelon.dim

    def size(self) -> int:
        return 1 << self.dim

    def contains(self, word: int) -> bool:
        return self._echelon.contains(word)

    def basis(self) -> tuple[int, ...]:
        return self._echelon.basis()

    def words(self, guard: int = DEFAULT_GUARD) -> tuple[int, ...]:
        """The full word set, sorted; raises GuardExceeded when too big."""
        return tuple(sorted(self._echelon.span(guard)))

    def contains_code(self, other: "CyclicCodeR") -> bool:
        return all(self.contains(b) for b in other.basis())

    def same_words_as(self, other: "CyclicCodeR") -> bool:
        return self.dim == other.dim and self.contains_code(other)

    # -- torsion ------------------------------------------------------------

    @cached_property
    def torsion_profile(self) -> TorsionProfile:
        n = self.n
        ech = Echelon(word_to_levelmajor(w, n) for w in self.spanning_words())
        modulus = x_pow_n_minus_1(n)
        mask = (1 << n) - 1
        levels = []
        dims_sum = 0
        for i in range(6):
            # rows supported on u-levels >= i span C ∩ u^i R^n exactly
            limit = 1 << ((6 - i) * n)
            tor = Echelon()
            gen = modulus
            for row in ech.basis():
                if row < limit:
                    part = (row >> ((5 - i) * n)) & mask
                    tor.add(part)
                    if part:
                        gen = gen.gcd(Gf2Poly(part))
            # Tor_i is itself cyclic, so its generator is this gcd
            deg = gen.degree if gen.degree is not None else n
            assert tor.dim == n - deg, "torsion level dim mismatch"
            levels.append(TorsionLevel(i, gen, tor.dim))
            dims_sum += tor.dim
        assert dims_sum == self.dim, "torsion dims must sum to log2|C|"
        k = tuple(
            levels[i].dim - (levels[i - 1].dim if i else 0) for i in range(6)
        )
        return TorsionProfile(
            n=n,
            levels=tuple(levels),
            k=k,
            rank=levels[5].dim,
            log2_size=dims_sum,
        )

    def rank(self) -> int:
        return self.torsion_profile.rank

    def size_formula_odd(self) -> int:
        """prod 2^(n - deg fi) for an odd-length tower."""
        if self.tower is None or self.n % 2 == 0:
            raise ValueError("formula applies to odd-length towers only")
        total = 0
        for f in self.tower:
            deg = f.degree if f.degree is not None else 0
            if deg < self.n:
                total += self.n - deg
        return 1 << total

    # -- reverse-complement structure ----------------------------------------

    def contains_alpha_identity(self) -> bool:
        return self.contains(alpha_identity_word(self.n))

    def reversal_closed(self) -> bool:
        n = self.n
        return all(
            self.contains(ring64.word_reverse(b, n)) for b in self.basis()
        )

    def rc_closed(self) -> bool:
        """Reverse-complement closure, decided without enumeration.

        rc(w) = reverse(w) + alpha-identity, so a linear code is
        rc-closed iff it contains the alpha-identity word and is closed
        under coordinate reversal.
        """
        return self.contains_alpha_identity() and self.reversal_closed()


def rc_closed_extensional(
    words: Iterable[int], n: int
) -> tuple[bool, int | None]:
    """Set-level reverse-complement check; returns a violating word if any."""
    word_set = words if isinstance(words, (set, frozenset)) else set(words)
    for w in word_set:
        if ring64.word_reverse_complement(w, n) not in word_set:
            return False, w
    return True, None


@dataclass(frozen=True)
class RcSufficiency:
    """The sufficient condition: self-reciprocal tower polynomials plus
    the alpha-identity word in the code."""

    all_self_reciprocal: bool
    failing_polys: tuple[str, ...]
    alpha_identity_member: bool

    @property
    def satisfied(self) -> bool:
        return self.all_self_reciprocal and self.alpha_identity_member


def rc_sufficiency(code: CyclicCodeR) -> RcSufficiency:
    if code.tower is None:
        raise ValueError("sufficiency test needs a tower description")
    failing = tuple(
        f"f{i}={f}" for i, f in enumerate(code.tower)
        if not f.is_self_reciprocal()
    )
    return RcSufficiency(
        all_self_reciprocal=not failing,
        failing_polys=failing,
        alpha_identity_member=code.contains_alpha_identity(),
    )


@dataclass(frozen=True)
class NecessityReport:
    """Given an rc-closed code, both necessary conditions must hold."""

    applicable: bool
    alpha_identity_member: bool
    all_self_reciprocal: bool
    failing_polys: tuple[str, ...]

    @property
    def holds(self) -> bool:
        if not self.applicable:
            return True
        return self.alpha_identity_member and self.all_self_reciprocal


def necessity_report(
    code: CyclicCodeR, rc_closed: bool | None = None
) -> NecessityReport:
    if rc_closed is None:
        rc_closed = code.rc_closed()
    suff = rc_sufficiency(code)
    return NecessityReport(
        applicable=rc_closed,
        alpha_identity_member=suff.alpha_identity_member,
        all_self_reciprocal=suff.all_self_reciprocal,
        failing_polys=suff.failing_polys,
    )


# -- builders ----------------------------------------------------------------


def single_generator_code(n: int, level: int, f: Gf2Poly) -> CyclicCodeR:
    """The ideal generated by the single word u^level * f(x)."""
    if not 0 <= level <= 5:
        raise ValueError(f"u-exponent must be in 0..5, got {level}")
    modulus = x_pow_n_minus_1(n)
    if not f or not f.divides(modulus):
        raise TowerError(f"{f} does not divide x^{n}-1")
    polys = tuple(modulus if i < level else f for i in range(6))
    return CyclicCodeR.from_tower(n, polys)


def iter_admissible_towers(n: int) -> Iterator[tuple[Gf2Poly, ...]]:
    """All canonical odd-length towers: one chain per assignment of a
    cut level 0..6 to each irreducible factor of x^n - 1."""
    if n % 2 == 0:
        raise ValueError("tower iteration is defined for odd lengths")
    factors = [f for f, _ in factor_xn_minus_1(n)]
    counts = [0] * len(factors)
    while True:
        polys = []
        for i in range(6):
            g = Gf2Poly(1)
            for f, c in zip(factors, counts):
                if i < c:
                    g = g * f
            polys.append(g)
        yield tuple(polys)
        for j in range(len(counts)):
            counts[j] += 1
            if counts[j] <= 6:
                break
            counts[j] = 0
        else:
            return


# -- the u^2 subcode ---------------------------------------------------------


@dataclass(frozen=True)
class SubcodeU2Report:
    """The words of C lying in u^2 R^n, against the single-generator
    claim <u^2 f5>."""

    subcode_log2_size: int
    claim_log2_size: int
    claim_inside_code: bool
    equal: bool
    f5: str


def subcode_u2(code: CyclicCodeR) -> CyclicCodeR:
    """The subcode {w in C : every coordinate is a multiple of u^2}."""
    n = code.n
    ech = Echelon(word_to_levelmajor(w, n) for w in code.spanning_words())
    limit = 1 << (4 * n)
    gens = [
        levelmajor_to_word(row, n) for row in ech.basis() if row < limit
    ]
    return CyclicCodeR(n, gens)


def subcode_u2_report(code: CyclicCodeR) -> SubcodeU2Report:
    if code.tower is None:
        raise ValueError("report needs a tower description")
    sub = subcode_u2(code)
    f5 = code.tower[5]
    claim = single_generator_code(code.n, 2, f5)
    return SubcodeU2Report(
        subcode_log2_size=sub.dim,
        claim_log2_size=claim.dim,
        claim_inside_code=code.contains_code(claim),
        equal=sub.same_words_as(claim),
        f5=str(f5),
    )


def codon_alphabet_of_ideal(i: int) -> frozenset[str]:
    """The codons of all ring elements divisible by u^i."""
    if i not in (2, 3, 4):
        raise ValueError(f"ideal exponent must be 2, 3 or 4, got {i}")
    table = codons.canonical_table()
    return frozenset(table.codon(x) for x in ring64.ideal_members(i))


# -- DNA classification and Gray image ----------------------------------------


@dataclass(frozen=True)
class DnaClassification:
    """Does the word set qualify as a DNA code at threshold D: no
    self-reverse-complement word, rc-closure, and max edit <= D."""

    n: int
    level: str
    D: float
    rc_closed: bool
    rc_witness: int | None
    fixed_points: tuple[int, ...]
    min_edit: float
    max_edit: float

    @property
    def is_dna_code(self) -> bool:
        return (
            self.rc_closed
            and not self.fixed_points
            and self.max_edit <= self.D
        )


def codon_symbols(word: int, n: int) -> tuple[str, ...]:
    table = codons.canonical_table()
    return tuple(table.codon(x) for x in ring64.unpack_word(word, n))


def classify_dna_code(
    code: CyclicCodeR,
    D: float,
    guard: int = DEFAULT_GUARD,
    level: str = "codon",
    costs: metrics.EditCostTable | None = None,
) -> DnaClassification:
    n = code.n
    words = code.words(guard)
    closed, witness = rc_closed_extensional(words, n)
    fixed = tuple(
        w for w in words if ring64.word_reverse_complement(w, n) == w
    )
    table = codons.canonical_table()
    if level == "codon":
        symbols = [codon_symbols(w, n) for w in words]
    elif level == "nucleotide":
        symbols = [table.encode_word(w, n) for w in words]
    else:
        raise ValueError(f"unknown level: {level}")
    dist = lambda a, b: metrics.edit_distance(a, b, costs)
    lo = metrics.min_pairwise(symbols, dist)
    hi = max(
        dist(symbols[i], symbols[j])
        for i in range(len(symbols))
        for j in range(i + 1, len(symbols))
    )
    return DnaClassification(
        n=n,
        level=level,
        D=D,
        rc_closed=closed,
        rc_witness=witness,
        fixed_points=fixed,
        min_edit=lo.minimum,
        max_edit=hi,
    )


@dataclass(frozen=True)
class GrayImageReport:
    """Linearity and shift-closure facts about a binary image set."""

    bit_length: int
    linear: bool
    shift_closed: bool
    shift_bits: int


def gray_image_report(words: Iterable[int], n: int) -> GrayImageReport:
    """The binary Gray image of a packed word is the word itself read as
    6n bits, so the image of a cyclic code must be XOR-closed and closed
    under rotation by 6 bits."""
    word_set = set(words)
    ech = Echelon(word_set)
    linear = len(word_set) == 1 << ech.dim and 0 in word_set
    shift_closed = all(
        ring64.word_shift(w, n) in word_set for w in word_set
    )
    return GrayImageReport(
        bit_length=6 * n,
        linear=linear,
        shift_closed=shift_closed,
        shift_bits=6,
    )


# -- bounds and campaign -------------------------------------------------------


@dataclass(frozen=True)
class EditBoundCheck:
    min_edit: float
    min_edit_exact: bool
    bound_min_degree: int
    bound_singleton: int

    @property
    def holds(self) -> bool:
        # min_edit is an upper bound on the true minimum even when the
        # scan stopped early, so <= here is always sound
        return (
            self.min_edit <= self.bound_min_degree
            and self.min_edit <= self.bound_singleton
        )


def edit_bound_check(
    code: CyclicCodeR, guard: int = DEFAULT_GUARD, exact: bool = False
) -> EditBoundCheck:
    """Codon-level minimum edit distance against the two structural
    bounds: min deg(fi) + 1 and n - rank + 1.

    By default the pair scan stops as soon as the bounds are certified;
    pass exact=True to force the full quadratic scan.
    """
    if code.tower is None:
        raise ValueError("bound check needs a tower description")
    words = code.words(guard)
    symbols = [codon_symbols(w, code.n) for w in words]
    min_deg = min(
        f.degree for f in code.tower if f.degree is not None
    )
    bound_deg = min_deg + 1
    bound_single = code.n - code.rank() + 1
    cutoff = None if exact else min(bound_deg, bound_single)
    lo = metrics.min_pairwise(symbols, metrics.edit_distance, cutoff)
    return EditBoundCheck(
        min_edit=lo.minimum,
        min_edit_exact=lo.exhaustive,
        bound_min_degree=bound_deg,
        bound_singleton=bound_single,
    )


@dataclass
class CampaignResult:
    towers_checked: int = 0
    codes_enumerated: int = 0
    skipped_over_guard: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations


def rc_theorem_campaign(
    lengths: Sequence[int] = (3, 5, 7),
    guard: int = 2**16,
) -> CampaignResult:
    """Exhaustive consistency drive over every admissible odd tower.

    For each code: the sufficient condition must imply extensional
    rc-closure, extensional rc-closure must imply both necessary
    conditions, and the closure decided algebraically must agree with
    the enumerated check.  Codes above the guard still get the
    algebraic implications.
    """
    result = CampaignResult()
    for n in lengths:
        for polys in iter_admissible_towers(n):
            result.towers_checked += 1
            code = CyclicCodeR.from_tower(n, polys)
            label = f"n={n}, {tower_str(polys)}"
            suff = rc_sufficiency(code)
            alg_closed = code.rc_closed()
            if suff.satisfied and not alg_closed:
                result.violations.append(f"{label}: sufficiency but not closed")
            if alg_closed:
                nec = necessity_report(code, rc_closed=True)
                if not nec.holds:
                    result.violations.append(
                        f"{label}: closed but necessity fails"
                    )
            if code.size() > guard:
                result.skipped_over_guard += 1
                continue
            result.codes_enumerated += 1
            words = code.words(guard)
            ext_closed, witness = rc_closed_extensional(words, n)
            if ext_closed != alg_closed:
                result.violations.append(
                    f"{label}: algebraic closure {alg_closed} but "
                    f"enumeration says {ext_closed} (witness {witness})"
                )
            if suff.satisfied and not ext_closed:
                result.violations.append(
                    f"{label}: sufficiency but enumeration not closed"
                )
    return result


__all__ = [
    "DEFAULT_GUARD",
    "TowerError",
    "GuardExceeded",
    "validate_tower",
    "tower_str",
    "Echelon",
    "word_to_levelmajor",
    "levelmajor_to_word",
    "TorsionLevel",
    "TorsionProfile",
    "alpha_identity_word",
    "CyclicCodeR",
    "rc_closed_extensional",
    "RcSufficiency",
    "rc_sufficiency",
    "NecessityReport",
    "necessity_report",
    "single_generator_code",
    "iter_admissible_towers",
    "SubcodeU2Report",
    "subcode_u2",
    "subcode_u2_report",
    "codon_alphabet_of_ideal",
    "DnaClassification",
    "codon_symbols",
    "classify_dna_code",
    "GrayImageReport",
    "gray_image_report",
    "EditBoundCheck",
    "edit_bound_check",
    "CampaignResult",
    "rc_theorem_campaign",
]
