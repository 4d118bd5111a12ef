"""Short-time momentum-space entanglement of the lossy Luttinger liquid for several interaction strengths."""
import argparse

import numpy as np

from csvout import write_csv
from lossychain.luttinger import LuttingerParams, bogoliubov_short_time, msee_short_time

ap = argparse.ArgumentParser(description=__doc__)
ap.add_argument("--gamma", type=float, default=0.1)
ap.add_argument("--q", type=float, default=0.5)
ap.add_argument("--out", default="results/luttinger_msee.csv")
args = ap.parse_args()

ts = np.logspace(-4, -2, 30)
X = (ts * np.log(1 / ts))[:, None]
rows = []
for g2 in (0.0, 0.3, 0.6):
    p = LuttingerParams(v=1.0, g2=g2, gamma=args.gamma)
    S = np.array([msee_short_time([bogoliubov_short_time(p, args.q, t)]).S for t in ts])
    coef, *_ = np.linalg.lstsq(X, S, rcond=None)
    print(f"g2 = {g2}: A = {coef[0]:.6f}")
    rows.extend((g2, t, s) for t, s in zip(ts, S))
write_csv(args.out, ["g2", "t", "S"], rows)
