"""Bounded exhaustive search for A**X + B**Y = C**Z.

The main engine enumerates every reduced-base perfect power up to the bound,
indexes the candidates for the right-hand side by value, and then tests the
sum of each ordered pair of left-side powers for membership (meet in the
middle).  The pair space is cut early at A**X > bound/2 and partitioned into
stripes of the first index across workers; results are merged and sorted
before annotation, so reports are deterministic for any worker count.

A deliberately naive triple-enumeration oracle with its own power
enumeration (repeated multiplication, no root extraction, no sum index)
provides the independent cross-check used by the acceptance suite.

Exponent minimums apply to the unordered pair: a canonical hit (A**X <=
B**Y) qualifies when either orientation of its left side meets (min_x,
min_y), equivalently min(X, Y) >= min(min_x, min_y) and max(X, Y) >=
max(min_x, min_y).
"""

from __future__ import annotations

import multiprocessing
import time
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction

from .coprime import Restriction, exponent_restriction
from .errors import BoundTooLarge
from .exact_arith import RadicalClass, is_perfect_power
from .reparam import Plane, canonical_alpha_beta
from .slopes import SlopeSet, slope_set
from .triples import BealTriple

# Modulus for the optional residue pre-filter: 2**4 * 3**2 * 5 * 7 * 11 * 13.
FILTER_MODULUS = 720720

ORACLE_MAX_BOUND = 10 ** 7


@dataclass(frozen=True)
class PowerEntry:
    value: int
    base: int
    exponent: int


@dataclass(frozen=True)
class SearchConfig:
    bound: int
    min_x: int = 3
    min_y: int = 3
    min_z: int = 3
    require_reduced: bool = True
    workers: int = 1
    seed: int = 0
    modular_filter: bool = False

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError(f"bound must be >= 1, got {self.bound}")
        if min(self.min_x, self.min_y, self.min_z) < 3:
            raise ValueError("exponent minimums must be >= 3")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    @property
    def minimums(self) -> tuple[int, int, int]:
        return self.min_x, self.min_y, self.min_z


@dataclass(frozen=True)
class VerificationRecord:
    """Per-check outcomes for one candidate hit; failures are data."""

    checks: dict[str, bool]
    gcd_abc: int

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failed_checks(self) -> list[str]:
        return [name for name, ok in self.checks.items() if not ok]


@dataclass(frozen=True)
class SearchHit:
    triple: BealTriple
    gcd_abc: int
    alpha_class: RadicalClass
    beta_class: RadicalClass
    slopes: SlopeSet
    verification: VerificationRecord

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return self.triple.cz, self.triple.by, self.triple.ax


@dataclass
class SearchReport:
    config: SearchConfig
    hits: list[SearchHit]
    counts: dict[str, int] = field(default_factory=dict)
    wall_time_s: float = 0.0

    @property
    def triples(self) -> list[BealTriple]:
        return [hit.triple for hit in self.hits]


def enumerate_powers(bound: int, min_exp: int = 3) -> list[PowerEntry]:
    """All reduced-base powers base**e <= bound with e >= min_exp, by value.

    Bases that are themselves perfect powers are skipped; their powers are
    reachable from the reduced base with a larger exponent, so every perfect
    power value below the bound appears exactly once.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if min_exp < 1:
        raise ValueError(f"min_exp must be >= 1, got {min_exp}")
    entries = []
    base = 2
    while base ** min_exp <= bound:
        if base < 4 or is_perfect_power(base) is None:
            value = base ** min_exp
            exponent = min_exp
            while value <= bound:
                entries.append(PowerEntry(value, base, exponent))
                exponent += 1
                value *= base
        base += 1
    entries.sort(key=lambda entry: entry.value)
    return entries


def _pair_qualifies(e1: int, e2: int, min_x: int, min_y: int) -> bool:
    return (e1 >= min_x and e2 >= min_y) or (e2 >= min_x and e1 >= min_y)


# Worker-side state for the striped pair scan (populated once per process).
_SCAN: dict = {}


def _init_scan(values, high_values, sums, bound, residue_filter):
    _SCAN["values"] = values
    _SCAN["high_values"] = high_values
    _SCAN["sums"] = sums
    _SCAN["bound"] = bound
    _SCAN["residue_filter"] = residue_filter


def _scan_stripe(args: tuple[int, int]) -> tuple[int, list[tuple[int, int]]]:
    """Scan outer indices start, start+step, ... of the ordered-pair space.

    Returns (pairs_tested, [(va, vb), ...]) for sums found in the table.
    The outer side iterates every power; the inner side iterates all powers
    when the outer exponent already meets the higher minimum, and only the
    high-exponent sublist otherwise, so each qualifying unordered pair is
    examined exactly once.
    """
    start, step = args
    values = _SCAN["values"]
    high_values = _SCAN["high_values"]
    sums = _SCAN["sums"]
    bound = _SCAN["bound"]
    residue_filter = _SCAN["residue_filter"]
    full_scan = high_values is None

    tested = 0
    found: list[tuple[int, int]] = []
    for i in range(start, len(values), step):
        va, ea_high = values[i]
        if 2 * va > bound:
            break
        limit = bound - va
        if full_scan or ea_high:
            lane = values
            j = i
            end = bisect_right(lane, (limit, True))
        else:
            lane = high_values
            j = bisect_left(lane, (va, False))
            end = bisect_right(lane, (limit, True))
        if residue_filter is None:
            for k in range(j, end):
                s = va + lane[k][0]
                if s in sums:
                    found.append((va, lane[k][0]))
            tested += max(0, end - j)
        else:
            for k in range(j, end):
                s = va + lane[k][0]
                if residue_filter[s % FILTER_MODULUS] and s in sums:
                    found.append((va, lane[k][0]))
            tested += max(0, end - j)
    return tested, found


def verify_hit(triple: BealTriple, minimums: tuple[int, int, int] = (3, 3, 3),
               require_reduced: bool = True) -> VerificationRecord:
    """Run every hit-level check on a candidate triple.

    Checks: exact equation, reduced bases (>= 2, not perfect powers),
    canonical ordering, orientation-aware exponent minimums, common factor
    > 1, the divisibility restriction on (X, Y, Z), rational root-form
    slopes matching C/B and C/A, and rational-canonical-parameter /
    common-factor consistency.  Failures are recorded, not raised.
    """
    min_x, min_y, min_z = minimums
    checks: dict[str, bool] = {}
    checks["equation_exact"] = triple.equation_holds

    reduced = all(
        base >= 2 and is_perfect_power(base) is None
        for base in (triple.A, triple.B, triple.C)
    )
    checks["bases_reduced"] = reduced or not require_reduced
    checks["canonical_order"] = triple.ax <= triple.by
    lo, hi = min(min_x, min_y), max(min_x, min_y)
    checks["exponent_minimums"] = (
        min(triple.X, triple.Y) >= lo
        and max(triple.X, triple.Y) >= hi
        and triple.Z >= min_z
    )
    gcd_abc = triple.gcd_abc
    checks["common_factor_present"] = gcd_abc > 1
    if min(triple.X, triple.Y, triple.Z) >= 3:
        checks["exponent_restriction"] = (
            exponent_restriction(triple.X, triple.Y, triple.Z) is Restriction.PERMITTED
        )
    else:
        checks["exponent_restriction"] = False

    slopes = slope_set(triple)
    checks["slopes_rational"] = (
        isinstance(slopes.m_cb, Fraction)
        and isinstance(slopes.m_ca, Fraction)
        and slopes.m_cb == Fraction(triple.C, triple.B)
        and slopes.m_ca == Fraction(triple.C, triple.A)
    )

    pair = canonical_alpha_beta(triple, Plane.CB)
    rational_parameter = (
        pair.alpha.classification.is_rational or pair.beta.classification.is_rational
    )
    checks["rational_parameters_imply_common_factor"] = (not rational_parameter) or gcd_abc > 1

    return VerificationRecord(checks=checks, gcd_abc=gcd_abc)


def annotate_hit(triple: BealTriple, minimums: tuple[int, int, int] = (3, 3, 3),
                 require_reduced: bool = True) -> SearchHit:
    """Attach gcd, canonical parameter classes, slopes, and verification."""
    pair = canonical_alpha_beta(triple, Plane.CB)
    return SearchHit(
        triple=triple,
        gcd_abc=triple.gcd_abc,
        alpha_class=pair.alpha.classification,
        beta_class=pair.beta.classification,
        slopes=slope_set(triple),
        verification=verify_hit(triple, minimums, require_reduced),
    )


def search_solutions(config: SearchConfig) -> SearchReport:
    """Find every in-bound solution, annotated and deterministically sorted."""
    started = time.perf_counter()
    lo_exp = min(config.min_x, config.min_y)
    hi_exp = max(config.min_x, config.min_y)
    entries = enumerate_powers(config.bound, min_exp=min(lo_exp, config.min_z))

    power_index = {entry.value: entry for entry in entries}
    right_side = {
        entry.value: entry for entry in entries if entry.exponent >= config.min_z
    }
    left_entries = [entry for entry in entries if entry.exponent >= lo_exp]
    # (value, meets_high_minimum) pairs; tuples keep bisect usable on values
    values = [(entry.value, entry.exponent >= hi_exp) for entry in left_entries]
    if hi_exp > lo_exp:
        high_values = [pair for pair in values if pair[1]]
    else:
        high_values = None

    residue_filter = None
    if config.modular_filter:
        residue_filter = bytearray(FILTER_MODULUS)
        for value in right_side:
            residue_filter[value % FILTER_MODULUS] = 1

    sums = set(right_side)
    stripes = [(w, config.workers) for w in range(config.workers)]
    if config.workers == 1 or not values:
        _init_scan(values, high_values, sums, config.bound, residue_filter)
        results = [_scan_stripe(stripe) for stripe in stripes]
    else:
        with multiprocessing.Pool(
            processes=config.workers,
            initializer=_init_scan,
            initargs=(values, high_values, sums, config.bound, residue_filter),
        ) as pool:
            results = pool.map(_scan_stripe, stripes)

    pairs_tested = sum(tested for tested, _ in results)
    raw_pairs = [pair for _, found in results for pair in found]
    raw_pairs.sort(key=lambda p: (p[0] + p[1], p[1], p[0]))

    hits = []
    for va, vb in raw_pairs:
        a = power_index[va]
        b = power_index[vb]
        if not _pair_qualifies(a.exponent, b.exponent, config.min_x, config.min_y):
            continue
        c = right_side[va + vb]
        triple = BealTriple(a.base, a.exponent, b.base, b.exponent, c.base, c.exponent)
        hits.append(annotate_hit(triple, config.minimums, config.require_reduced))

    counts = {
        "powers_enumerated": len(entries),
        "pairs_tested": pairs_tested,
        "hits": len(hits),
    }
    return SearchReport(
        config=config,
        hits=hits,
        counts=counts,
        wall_time_s=time.perf_counter() - started,
    )


def _oracle_powers(bound: int, min_exp: int) -> list[tuple[int, int, int]]:
    """Power table for the oracle, by repeated multiplication only.

    A base is kept when it is not itself a power of a smaller integer, which
    is detected by enumerating all small powers rather than extracting roots.
    """
    small_powers = set()
    base = 2
    while base * base <= bound:
        value = base * base
        while value <= bound:
            small_powers.add(value)
            value *= base
        base += 1
    table = []
    base = 2
    while base ** min_exp <= bound:
        if base not in small_powers:
            value = base ** min_exp
            exponent = min_exp
            while value <= bound:
                table.append((value, base, exponent))
                exponent += 1
                value *= base
        base += 1
    table.sort()
    return table


def brute_force_oracle(bound: int, minimums: tuple[int, int, int] = (3, 3, 3)) -> SearchReport:
    """Direct triple enumeration without any sum index.

    Intentionally naive; refuses bounds above 10**7.
    """
    if bound > ORACLE_MAX_BOUND:
        raise BoundTooLarge(f"oracle bound {bound} exceeds {ORACLE_MAX_BOUND}")
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    min_x, min_y, min_z = minimums
    started = time.perf_counter()
    lo_exp = min(minimums)
    table = _oracle_powers(bound, lo_exp)
    found = []
    pairs_tested = 0
    for i, (va, a_base, a_exp) in enumerate(table):
        if 2 * va > bound:
            break
        for j in range(i, len(table)):
            vb, b_base, b_exp = table[j]
            s = va + vb
            if s > bound:
                break
            pairs_tested += 1
            if not ((a_exp >= min_x and b_exp >= min_y)
                    or (b_exp >= min_x and a_exp >= min_y)):
                continue
            for vc, c_base, c_exp in table:
                if vc > s:
                    break
                if vc == s and c_exp >= min_z:
                    found.append(
                        BealTriple(a_base, a_exp, b_base, b_exp, c_base, c_exp))
    found.sort(key=lambda t: (t.cz, t.by, t.ax))
    hits = [annotate_hit(triple, minimums) for triple in found]
    config = SearchConfig(bound=bound, min_x=min_x, min_y=min_y, min_z=min_z)
    counts = {
        "powers_enumerated": len(table),
        "pairs_tested": pairs_tested,
        "hits": len(hits),
    }
    return SearchReport(
        config=config,
        hits=hits,
        counts=counts,
        wall_time_s=time.perf_counter() - started,
    )
