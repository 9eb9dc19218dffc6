"""Real ground-state Bethe roots of spin-1/2 XXX chains, by direct Newton and by the Heine solver."""
import argparse

import numpy as np

from bethe_qsl.heine import SolverOptions, multiset_distance
from bethe_qsl.wilson import WilsonProblem, xxx_ground_config, xxx_heine_solve, xxx_newton_solve, xxx_residuals


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lengths", default="4,8,12,16")
    ap.add_argument("--starts", type=int, default=400)
    args = ap.parse_args()
    opts = SolverOptions(starts=args.starts)
    for L in (int(v) for v in args.lengths.split(",")):
        params, form = xxx_ground_config(L)
        n = form.n_ground
        heine, _ = xxx_heine_solve(WilsonProblem.from_params(params, n), opts)
        real = [np.sort(np.sqrt(h.roots.real))[::-1] for h in heine
                if not h.flags and np.all(np.abs(h.roots.imag) < 1e-10) and np.all(h.roots.real > 0)]
        for y in real:
            res = np.max(np.abs(xxx_residuals(y, params.s, True)))
            # an independent Newton run seeded nearby should land on the same roots
            direct, _ = xxx_newton_solve(params.s, n, starts=[y * (1 + 1e-4)], opts=opts)
            match = min((multiset_distance(d * d, y * y) for d in direct), default=np.inf)
            print(f"L={L} n={n} y={np.array2string(y, precision=8)} residual={res:.1e} newton_match={match:.1e}")
        if not real:
            print(f"L={L} n={n}: no real regular solution among {len(heine)}")

if __name__ == "__main__":
    main()
