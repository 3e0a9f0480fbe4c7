"""CSV and JSON writers.

Floats are written with ``repr`` so every value round-trips exactly; a NaN
(a column that does not apply, e.g. ``a_value`` for PSO) becomes an empty cell.
"""

import csv
import io
import json
import math

import numpy as np

from .lifetime import FRAME_COLUMNS
from .search import TRACE_COLUMNS


def _cell(v):
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "" if math.isnan(v) else repr(float(v))
    if isinstance(v, np.integer):
        return str(int(v))
    return str(v)


def csv_text(columns, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([_cell(v) for v in r])
    return buf.getvalue()


def trace_csv(trace):
    return csv_text(TRACE_COLUMNS, (row.values() for row in trace))


def frames_csv(result):
    return csv_text(FRAME_COLUMNS, (f.values() for f in result.frames))


def placement_doc(result, scenario, algo):
    xy = np.asarray(result.best).reshape(-1, 2)
    return {
        "algo": algo,
        "seed": scenario.seed,
        "n_uavs": scenario.n_uavs,
        "placement": [[float(x), float(y)] for x, y in xy],
        "report": {
            "h": result.report.h_value,
            "nc": result.report.nc,
            "ncv1": result.report.ncv1,
            "ncv2": result.report.ncv2,
            "m": result.report.m,
            "m_active": result.report.m_active,
        },
        "initial_h": result.initial_fitness,
    }


def summary_doc(result, ecnsa_enabled):
    return {
        "ecnsa_enabled": ecnsa_enabled,
        "h_initial": result.h_initial,
        "coverage_floor": result.coverage_floor,
        "lifespan_frames": result.lifespan_frames,
        "n_frames": result.frames[-1].frame,
        "initial_energy_j": result.initial_energy_j,
        "final_residual_j": result.final_residual_j,
        "consumed_j": result.consumed_j,
        "final_nls_gstar_j": result.frames[-1].nls_gstar_j,
        "deaths": sum(f.deaths for f in result.frames),
        "swaps": sum(f.swaps for f in result.frames),
        "reoptimizations": sum(bool(f.reopt) for f in result.frames),
        "events": list(result.events),
    }


def write_text(path, text):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def write_json(path, doc):
    write_text(path, json.dumps(doc, indent=2, sort_keys=True) + "\n")
