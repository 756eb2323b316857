"""Timing harness for hash generation and hash aggregation.

For each requested curve the harness draws n scalars uniformly from
[1, order) with a seeded generator, hashes each one (timed, mean reported),
then aggregates all n hash points (timed, total and per-item reported;
folding n points takes n-1 additions).

Timing covers hash_record only: scalars are materialized before the clock
starts, so random-number generation never counts against the hash.  A short
warm-up batch runs first and is excluded from the statistics.  All timing
uses the monotonic performance counter; the hashing and aggregation loops
are strictly sequential.
"""

import random
import time
from dataclasses import dataclass

from .curve import CURVE_NAMES, get_curve
from .homhash import aggregate, encode_point, hash_record

# Published baseline magnitudes (Bouncy Castle on a JVM), per security
# strength: mean per-hash generation ms and total ms to sum 10,000 hashes.
# Reported alongside results for context, never asserted.
REFERENCE_HASH_MS = {80: 5.67269117, 112: 5.71806574, 128: 5.71746361, 192: 5.84428082, 256: 5.87799408}
REFERENCE_AGG_MS = {80: 65.5990, 112: 64.7346, 128: 72.0647, 192: 85.2743, 256: 73.4115}

TIMING_NOTE = (
    "hash-generation timing covers the scalar multiplication only; "
    "record scalars are generated before the clock starts"
)

CSV_COLUMNS = "curve,strength_bits,n,hash_gen_mean_ms,agg_total_ms,agg_per_item_ms"

_WARMUP = 100


@dataclass(frozen=True)
class BenchReport:
    """Per-curve timing results for one benchmark run."""

    curve_name: str
    security_strength: int
    n_records: int
    hash_gen_mean_ms: float
    aggregate_total_ms: float
    aggregate_per_item_ms: float
    aggregate_point_hex: str

    @property
    def csv_row(self):
        return (
            f"{self.curve_name},{self.security_strength},{self.n_records},"
            f"{self.hash_gen_mean_ms:.6f},{self.aggregate_total_ms:.4f},"
            f"{self.aggregate_per_item_ms:.6f}"
        )


def bench_curve(name, n, seed):
    """Run the timing experiment for one curve."""
    if n < 2:
        raise ValueError(f"benchmark needs n >= 2, got {n}")
    params = get_curve(name)
    rng = random.Random(f"{seed}:{params.name}")
    scalars = [rng.randrange(1, params.order) for _ in range(n)]

    for k in scalars[: min(_WARMUP, n)]:
        hash_record(k, params)

    hashes = []
    t0 = time.perf_counter()
    for k in scalars:
        hashes.append(hash_record(k, params))
    hash_elapsed = time.perf_counter() - t0

    t0 = time.perf_counter()
    total = aggregate(hashes)
    agg_elapsed = time.perf_counter() - t0

    agg_total_ms = agg_elapsed * 1000.0
    return BenchReport(
        curve_name=params.name,
        security_strength=params.security_strength,
        n_records=n,
        hash_gen_mean_ms=hash_elapsed * 1000.0 / n,
        aggregate_total_ms=agg_total_ms,
        aggregate_per_item_ms=agg_total_ms / (n - 1),
        aggregate_point_hex=encode_point(total),
    )


def run_bench(curves=None, n=10000, seed=1):
    """Benchmark each curve in turn; defaults to all five, fastest first."""
    names = [get_curve(c).name for c in (curves or CURVE_NAMES)]
    return [bench_curve(name, n, seed) for name in names]


def _header_lines(reports, comment):
    yield f"{comment} {TIMING_NOTE}"
    for r in reports:
        yield (
            f"{comment} reference @ strength {r.security_strength}: "
            f"hash {REFERENCE_HASH_MS[r.security_strength]} ms, "
            f"10k-aggregate {REFERENCE_AGG_MS[r.security_strength]} ms total"
        )
    for r in reports:
        yield f"{comment} aggregate point {r.curve_name}: {r.aggregate_point_hex}"


def bench_to_csv(reports):
    lines = list(_header_lines(reports, "#"))
    lines.append(CSV_COLUMNS)
    lines.extend(r.csv_row for r in reports)
    return "\n".join(lines) + "\n"


def bench_to_markdown(reports):
    lines = [
        "| curve | strength (bits) | n | hash gen mean (ms) | aggregate total (ms) | aggregate per item (ms) |",
        "|---|---|---|---|---|---|",
    ]
    for r in reports:
        lines.append(
            f"| {r.curve_name} | {r.security_strength} | {r.n_records} "
            f"| {r.hash_gen_mean_ms:.6f} | {r.aggregate_total_ms:.4f} "
            f"| {r.aggregate_per_item_ms:.6f} |"
        )
    lines.append("")
    lines.extend(_header_lines(reports, ">"))
    return "\n".join(lines) + "\n"
