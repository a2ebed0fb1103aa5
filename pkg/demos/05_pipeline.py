"""
Batch runs with a resumable cache
=================================

The pipeline runs every check for a range of indices, caches one JSON file
per index and writes JSON, CSV or plain-text reports.  The same run is
available as ``cyclocert pipeline`` on the command line.
"""

import tempfile
import time

from cyclocert.pipeline import RunConfig, exit_code, render_report, run_pipeline

cache = tempfile.mkdtemp(prefix="cyclocert-")
config = RunConfig(j_min=0, j_max=12, cache_dir=cache, format="csv")

t0 = time.perf_counter()
records = run_pipeline(config)
print(f"cold run: {time.perf_counter() - t0:.2f}s")
print(render_report(records, "csv"))

t0 = time.perf_counter()
again = run_pipeline(config)
print(f"warm run: {time.perf_counter() - t0:.2f}s, identical: {again == records}")

print(render_report(records[:3], "text"))
print("exit code would be", exit_code(records))
