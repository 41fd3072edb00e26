"""Prime sweeps: orchestration, parallelism, aggregation, CSV/JSON output.

Rows are computed independently per prime (all lower layers are pure), so
the sweep partitions primes into contiguous blocks, farms the blocks out to
worker processes, and merges results in prime order. Output is byte
identical across worker counts; the only randomness anywhere (equal-degree
splitting) is derived from the config seed and the per-prime inputs.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arith import sieve_primes
from .charpoly import analyze_poly
from .detect import DetectPolicy, detect_full
from .recurrence import RecurrenceSpec, zero_term_scan

# Keeps p^(d-1) - 1, the largest integer the extension arithmetic factors,
# inside the fixed-width budget documented for the CSV schema.
MAX_LIMIT = 3_000_000
_WORD_GUARD = 2**63

CSV_HEADER = "p,pattern,squarefree,excluded_reason,verdict,method,witness_n,ord_G,index_G,Q"


@dataclass(frozen=True)
class SweepConfig:
    """One sweep: the sequence, the prime bound, budgets, and output paths."""

    spec: RecurrenceSpec
    limit: int
    r_cap: int = 2_000_000
    brute_cap: int = 10_000_000
    workers: int = 1
    seed: int = 0
    csv_path: str | None = None
    json_path: str | None = None


@dataclass(frozen=True)
class PrimeRow:
    """One CSV row: verdict and provenance for a single prime."""

    p: int
    pattern: str
    squarefree: bool
    reason: str | None
    verdict: str
    method: str
    witness: int | None
    ord_g: int | None
    index_g: int | None
    q: int | None


def _validate_config(config: SweepConfig) -> None:
    d = config.spec.order
    if config.limit > MAX_LIMIT or config.limit ** max(1, d - 1) >= _WORD_GUARD:
        raise ValueError(
            f"limit {config.limit} violates the sweep guard for order {d}"
        )
    if config.workers < 1:
        raise ValueError("workers must be positive")


def _row_for_prime(spec: RecurrenceSpec, p: int, policy: DetectPolicy) -> PrimeRow:
    pat, ctx, v = detect_full(spec, p, policy)
    ord_g = index_g = q = None
    if ctx is not None:
        ord_g, index_g, q = ctx.ord_base, ctx.index_base, ctx.q
    return PrimeRow(
        p=p,
        pattern=pat.key,
        squarefree=pat.squarefree,
        reason=v.reason,
        verdict=v.kind,
        method=v.method,
        witness=v.witness,
        ord_g=ord_g,
        index_g=index_g,
        q=q,
    )


def _block_rows(args) -> list[PrimeRow]:
    spec, primes, policy = args
    return [_row_for_prime(spec, p, policy) for p in primes]


_COUNT_KEYS = ("total", "divisor", "nondivisor", "indeterminate")


@dataclass
class SweepSummary:
    """Aggregated counts per pattern plus exclusions; densities are derived.

    Merging is commutative and associative with the empty summary as the
    identity; merges require matching spec fingerprints and disjoint prime
    ranges.
    """

    fingerprint: str
    patterns: dict = field(default_factory=dict)
    excluded: dict = field(default_factory=dict)
    p_min: int | None = None
    p_max: int | None = None
    meta: dict | None = None

    @classmethod
    def empty(cls, fingerprint: str) -> "SweepSummary":
        return cls(fingerprint)

    def add_row(self, row: PrimeRow) -> None:
        self.p_min = row.p if self.p_min is None else min(self.p_min, row.p)
        self.p_max = row.p if self.p_max is None else max(self.p_max, row.p)
        if row.verdict == "excluded":
            self.excluded[row.reason] = self.excluded.get(row.reason, 0) + 1
            return
        counts = self.patterns.setdefault(row.pattern, dict.fromkeys(_COUNT_KEYS, 0))
        counts["total"] += 1
        counts[row.verdict] += 1

    # derived quantities, always recomputed from the counts

    @property
    def excluded_total(self) -> int:
        return sum(self.excluded.values())

    @property
    def unexcluded_total(self) -> int:
        return sum(c["total"] for c in self.patterns.values())

    @property
    def divisor_total(self) -> int:
        return sum(c["divisor"] for c in self.patterns.values())

    def pattern_frequency(self, key: str) -> float:
        return self.patterns[key]["total"] / self.unexcluded_total

    def divisor_fraction(self, key: str) -> float:
        c = self.patterns[key]
        return c["divisor"] / c["total"]

    @property
    def overall_divisor_fraction(self) -> float | None:
        total = self.unexcluded_total
        return self.divisor_total / total if total else None

    def merged(self, other: "SweepSummary") -> "SweepSummary":
        if self.fingerprint != other.fingerprint:
            raise ValueError("cannot merge summaries for different sequences")
        if (
            self.p_min is not None
            and other.p_min is not None
            and self.p_min <= other.p_max
            and other.p_min <= self.p_max
        ):
            raise ValueError("cannot merge summaries over overlapping prime ranges")
        if self.meta is not None and other.meta is not None and self.meta != other.meta:
            raise ValueError("cannot merge summaries with conflicting metadata")
        out = SweepSummary(self.fingerprint)
        out.meta = self.meta if self.meta is not None else other.meta
        for src in (self, other):
            for key, counts in src.patterns.items():
                acc = out.patterns.setdefault(key, dict.fromkeys(_COUNT_KEYS, 0))
                for k in _COUNT_KEYS:
                    acc[k] += counts[k]
            for reason, n in src.excluded.items():
                out.excluded[reason] = out.excluded.get(reason, 0) + n
        mins = [v for v in (self.p_min, other.p_min) if v is not None]
        maxs = [v for v in (self.p_max, other.p_max) if v is not None]
        out.p_min = min(mins) if mins else None
        out.p_max = max(maxs) if maxs else None
        return out

    def to_json_dict(self) -> dict:
        unex = self.unexcluded_total
        patterns = {}
        for key in sorted(self.patterns):
            c = self.patterns[key]
            patterns[key] = {
                "total": c["total"],
                "divisor": c["divisor"],
                "nondivisor": c["nondivisor"],
                "indeterminate": c["indeterminate"],
                "divisor_fraction": c["divisor"] / c["total"] if c["total"] else None,
                "frequency": c["total"] / unex if unex else None,
            }
        return {
            "fingerprint": self.fingerprint,
            "meta": self.meta,
            "p_min": self.p_min,
            "p_max": self.p_max,
            "primes_total": self.excluded_total + unex,
            "excluded": {k: self.excluded[k] for k in sorted(self.excluded)},
            "excluded_total": self.excluded_total,
            "unexcluded_total": unex,
            "patterns": patterns,
            "divisor_total": self.divisor_total,
            "overall_divisor_fraction": self.overall_divisor_fraction,
        }


def summarize_rows(fingerprint: str, rows: list[PrimeRow]) -> SweepSummary:
    """Fold rows into a summary; run_sweep's summary equals this fold."""
    summary = SweepSummary.empty(fingerprint)
    for row in rows:
        summary.add_row(row)
    return summary


def merge_summaries(s1: SweepSummary, s2: SweepSummary) -> SweepSummary:
    """Componentwise sum over disjoint prime ranges of the same sequence."""
    return s1.merged(s2)


def run_sweep(config: SweepConfig) -> tuple[list[PrimeRow], SweepSummary]:
    """All rows for primes <= limit, in prime order, plus the summary fold."""
    _validate_config(config)
    spec = config.spec
    profile = analyze_poly(list(spec.char_poly()))
    policy = DetectPolicy(
        r_cap=config.r_cap, brute_cap=config.brute_cap, seed=config.seed
    )
    primes = sieve_primes(config.limit)
    if config.workers > 1 and len(primes) >= 4 * config.workers:
        size = max(32, -(-len(primes) // (config.workers * 8)))
        blocks = [primes[i : i + size] for i in range(0, len(primes), size)]
        rows = []
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for block in pool.map(_block_rows, [(spec, b, policy) for b in blocks]):
                rows.extend(block)
    else:
        rows = [_row_for_prime(spec, p, policy) for p in primes]
    summary = summarize_rows(spec.fingerprint(), rows)
    zeros = zero_term_scan(spec, policy.zero_scan_bound)
    summary.meta = {
        "coeffs": list(spec.coeffs),
        "init": list(spec.init),
        "limit": config.limit,
        "seed": config.seed,
        "r_cap": config.r_cap,
        "brute_cap": config.brute_cap,
        "degenerate_zero_term": bool(zeros),
        "zero_term_indices": zeros[:10],
        "hypotheses": {
            "discriminant": profile.discriminant,
            "irreducible": profile.irreducible,
            "nondegenerate": profile.nondegenerate,
            "sd_certified": profile.sd_certified,
            "multiplicative_independence": profile.multiplicative_independence,
            "witness_primes": profile.witness_primes,
            "all_verified": profile.all_verified,
        },
    }
    if config.csv_path:
        write_csv(rows, config.csv_path)
    if config.json_path:
        write_json(summary, config.json_path)
    return rows, summary


def _cell(v) -> str:
    return "" if v is None else str(v)


def csv_lines(rows: list[PrimeRow]) -> list[str]:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            ",".join(
                (
                    str(r.p),
                    r.pattern,
                    "1" if r.squarefree else "0",
                    r.reason or "",
                    r.verdict,
                    r.method,
                    _cell(r.witness),
                    _cell(r.ord_g),
                    _cell(r.index_g),
                    _cell(r.q),
                )
            )
        )
    return lines


def write_csv(rows: list[PrimeRow], path: str) -> None:
    """Fixed-schema CSV, LF line endings, one header line."""
    try:
        with open(path, "w", newline="") as fh:
            fh.write("\n".join(csv_lines(rows)) + "\n")
    except OSError as exc:
        raise OSError(f"failed writing CSV to {path}: {exc}") from exc


def write_json(summary: SweepSummary, path: str) -> None:
    """Summary JSON with stable key order."""
    try:
        with open(path, "w", newline="") as fh:
            fh.write(json.dumps(summary.to_json_dict(), indent=2) + "\n")
    except OSError as exc:
        raise OSError(f"failed writing JSON to {path}: {exc}") from exc
