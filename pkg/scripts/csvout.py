"""Shared CSV writer for the experiment scripts."""
import csv
import os

import numpy as np


def write_csv(path, columns, rows, note=""):
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", newline="") as fh:
        if note:
            fh.write(f"# {note}\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([f"{x:.16e}" if isinstance(x, (float, np.floating)) else x for x in row])
    print(f"wrote {path} ({len(rows)} rows)")
