"""Benchmark harness: timed amplitude queries over the circuit families.

Each run asks one all-zeros to all-zeros amplitude of a generated circuit
and records wall time, per-run peak traced memory, the amplitude, and the
traversal counters.  Failures and timeouts become rows, never aborted
sweeps.  Results can be written as one flat CSV and as per-series plot
data files (n versus mean over trials).
"""
from __future__ import annotations

import csv
import time
import tracemalloc
from dataclasses import dataclass
from pathlib import Path

from . import _kernels
from .circuit import AmplitudeQuery, BasisState, CircuitError
from .engine import EngineOptions, QueryTimeout, path_sum_amplitude
from .generators import gen_hsp_standard, gen_layered_hadamard, gen_layered_qft
from .statevector import MAX_STATEVECTOR_QUBITS, statevector_amplitude

# family name -> (generator, smallest supported n)
FAMILIES = {
    "h-layer": (gen_layered_hadamard, 3),
    "qft-layer": (gen_layered_qft, 3),
    "hsp": (gen_hsp_standard, 5),
}

METHODS = ("pathsum", "statevector")

CSV_COLUMNS = [
    "family",
    "n",
    "seed",
    "method",
    "trial",
    "wall_time_s",
    "peak_mem_bytes",
    "amp_re",
    "amp_im",
    "recursion_calls",
    "prunes",
    "timed_out",
]

# Written next to every CSV because the CSV cannot say this about itself.
MEMORY_NOTE = (
    "peak_mem_bytes: per-run high-water mark of allocator-tracked memory "
    "(tracemalloc), measured from the start of each query; interpreter and "
    "JIT baseline memory is excluded.  Tracing is active during the timed "
    "region for both methods."
)


@dataclass(frozen=True)
class BenchPlan:
    """One sweep: families x n range x seeds x methods x trials."""

    families: tuple[str, ...]
    n_min: int
    n_max: int
    seeds: tuple[int, ...] = (1,)
    methods: tuple[str, ...] = METHODS
    trials: int = 3
    time_cap_s: float = 3600.0
    prune: bool = True

    def __post_init__(self):
        for family in self.families:
            if family not in FAMILIES:
                raise CircuitError(
                    f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}"
                )
            smallest = FAMILIES[family][1]
            if self.n_min < smallest:
                raise CircuitError(
                    f"family {family!r} supports n >= {smallest}, plan starts at {self.n_min}"
                )
        if self.n_max < self.n_min:
            raise CircuitError(
                f"empty n range: n_min={self.n_min}, n_max={self.n_max}"
            )
        for method in self.methods:
            if method not in METHODS:
                raise CircuitError(
                    f"unknown method {method!r}; known: {', '.join(METHODS)}"
                )
        if not self.seeds:
            raise CircuitError("plan needs at least one seed")
        if self.trials < 1:
            raise CircuitError(f"trials must be >= 1, got {self.trials}")
        if self.time_cap_s <= 0:
            raise CircuitError(f"time cap must be positive, got {self.time_cap_s}")


@dataclass
class BenchRecord:
    """One timed run (or one skipped/failed run, see ``note``)."""

    family: str
    n: int
    seed: int
    method: str
    trial: int
    wall_time_s: float
    peak_mem_bytes: int
    amplitude: complex | None
    recursion_calls: int | None
    prunes: int | None
    timed_out: bool
    note: str = ""

    @property
    def ran(self) -> bool:
        return not self.note


def _run_one(circuit, method: str, cap_s: float, prune: bool) -> BenchRecord:
    """Time a single all-zeros query; the returned record lacks identity fields."""
    width = circuit.num_qubits
    query = AmplitudeQuery(BasisState.zeros(width), BasisState.zeros(width))
    amplitude = None
    calls = None
    prune_count = None
    timed_out = False
    note = ""
    tracemalloc.start()
    tracemalloc.reset_peak()
    began = time.perf_counter()
    try:
        if method == "pathsum":
            options = EngineOptions(prune=prune, deadline_s=cap_s)
            amplitude, stats = path_sum_amplitude(circuit, query, options)
            calls = stats.recursion_calls
            prune_count = stats.prunes
        else:
            amplitude = statevector_amplitude(circuit, query, deadline_s=cap_s)
    except QueryTimeout:
        timed_out = True
    except Exception as exc:  # recorded, not raised: sweeps must finish
        note = f"error: {exc}"
    wall = time.perf_counter() - began
    peak = tracemalloc.get_traced_memory()[1]
    tracemalloc.stop()
    return BenchRecord(
        family="",
        n=0,
        seed=0,
        method=method,
        trial=0,
        wall_time_s=wall,
        peak_mem_bytes=peak,
        amplitude=amplitude,
        recursion_calls=calls,
        prunes=prune_count,
        timed_out=timed_out,
        note=note,
    )


def run_benchmark(plan: BenchPlan, progress=None) -> list[BenchRecord]:
    """Execute a plan and return one record per (family, n, seed, method, trial)."""
    _kernels.warm_up()
    records = []
    for family in plan.families:
        generate = FAMILIES[family][0]
        for n in range(plan.n_min, plan.n_max + 1):
            for seed in plan.seeds:
                circuit = generate(n, seed)
                for method in plan.methods:
                    for trial in range(1, plan.trials + 1):
                        if method == "statevector" and n > MAX_STATEVECTOR_QUBITS:
                            # Do not attempt a 2**n allocation; record why once
                            # per trial so the CSV keeps its regular shape.
                            record = BenchRecord(
                                family, n, seed, method, trial,
                                wall_time_s=0.0,
                                peak_mem_bytes=0,
                                amplitude=None,
                                recursion_calls=None,
                                prunes=None,
                                timed_out=False,
                                note=f"skipped: wider than {MAX_STATEVECTOR_QUBITS} qubits",
                            )
                        else:
                            record = _run_one(circuit, method, plan.time_cap_s, plan.prune)
                            record.family = family
                            record.n = n
                            record.seed = seed
                            record.trial = trial
                        records.append(record)
                        if progress is not None:
                            progress(record)
    return records


def _field_text(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv_rows(records, handle):
    """Write the header and one CSV row per record to an open text handle."""
    writer = csv.writer(handle)
    writer.writerow(CSV_COLUMNS)
    for r in records:
        amp_re = None if (r.amplitude is None or r.timed_out) else r.amplitude.real
        amp_im = None if (r.amplitude is None or r.timed_out) else r.amplitude.imag
        writer.writerow([
            r.family,
            r.n,
            r.seed,
            r.method,
            r.trial,
            _field_text(r.wall_time_s),
            r.peak_mem_bytes,
            _field_text(amp_re),
            _field_text(amp_im),
            _field_text(r.recursion_calls),
            _field_text(r.prunes),
            _field_text(r.timed_out),
        ])


def write_csv(records, path):
    """Flat results table; a '<path>.meta' sidecar documents the memory metric."""
    path = Path(path)
    with path.open("w", newline="") as handle:
        write_csv_rows(records, handle)
    Path(str(path) + ".meta").write_text(MEMORY_NOTE + "\n")


# Series where every trial of some n timed out mark that n with this value.
TIMEOUT_SENTINEL = -1.0


def write_plot_data(records, directory):
    """Per-(family, method) series files: n against the mean over trials.

    ``<family>_time_<method>.dat`` holds seconds, ``<family>_space_<method>.dat``
    megabytes (1e6 bytes).  Runs that were skipped or failed contribute no
    point; an n where every run timed out is written with value -1.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    series = {}
    for r in records:
        if r.note:
            continue
        series.setdefault((r.family, r.method), {}).setdefault(r.n, []).append(r)
    written = []
    for (family, method), by_n in sorted(series.items()):
        for metric in ("time", "space"):
            name = f"{family}_{metric}_{method}.dat"
            lines = [
                f"# {family} / {method}: n, mean "
                + ("wall time (s)" if metric == "time" else "peak traced memory (MB)")
                + f" over trials; {TIMEOUT_SENTINEL:g} marks an n where every trial timed out"
            ]
            for n in sorted(by_n):
                runs = by_n[n]
                finished = [r for r in runs if not r.timed_out]
                if not finished:
                    value = TIMEOUT_SENTINEL
                elif metric == "time":
                    value = sum(r.wall_time_s for r in finished) / len(finished)
                else:
                    value = sum(r.peak_mem_bytes for r in finished) / len(finished) / 1e6
                lines.append(f"{n} {value:.9g}")
            (directory / name).write_text("\n".join(lines) + "\n")
            written.append(directory / name)
    return written
