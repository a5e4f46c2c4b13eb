"""Error-vs-N sweeps: empirical decay against the theoretical bound.

Runs the full sweep for the linear and SIR systems (one model per
(N, repeat) cell), fits error ~ A * N**B, and checks that the mean error
sits below the bound curve at every N. Results land in
``output/sweep_linear/`` and ``output/sweep_sir/`` as errors.csv, fit.csv
and meta.json -- the same artifacts the ``kedmd sweep`` CLI writes, and the
input format of the frontend/ plotting package.
"""

import time
from pathlib import Path

from kedmd import ExperimentConfig, emit_results, run_sweep

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

for system in ("linear", "sir"):
    config = ExperimentConfig(system=system)
    t0 = time.monotonic()
    result = run_sweep(config)
    elapsed = time.monotonic() - t0

    print(f"{system}: error ~ {result.amplitude:.3f} * N^({result.exponent:.3f})  "
          f"[{len(result.rows)} cells in {elapsed:.1f}s]")
    bounds = dict(result.bounds)
    for n, mean_err in result.mean_errors():
        margin = bounds[n] / mean_err
        print(f"  N = {n:<4d}: mean error = {mean_err:.4f}  "
              f"bound = {bounds[n]:.4f}  (x{margin:.1f} headroom)")

    paths = emit_results(result, OUT / f"sweep_{system}")
    print(f"  wrote {paths['errors'].parent}/")
    print()

print("next: render these with the frontend package, e.g.")
print("  node frontend/dist/cli.js --kind error-curve \\")
print(f"    --in {OUT}/sweep_linear --out {OUT}/sweep_linear.svg")
