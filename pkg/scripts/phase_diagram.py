"""Phase classes and PBC decay gaps over the (lambda, eta) square."""
import argparse

import numpy as np

from csvout import write_csv
from lossychain.spectral import classify_phase, pbc_gaps

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--grid", type=int, default=101)
ap.add_argument("--out", default="results/phase_diagram.csv")
args = ap.parse_args()

axis = np.clip(np.linspace(0, 1, args.grid), 1e-6, 1 - 1e-6)
rows = []
for lam in axis:
    for eta in axis:
        slow, fast = pbc_gaps(lam, eta)
        rows.append((lam, eta, classify_phase(lam, eta).value, slow, fast))
write_csv(args.out, ["lambda", "eta", "class", "gap_slow", "gap_fast"], rows)
counts = {}
for r in rows:
    counts[r[2]] = counts.get(r[2], 0) + 1
print(counts)
