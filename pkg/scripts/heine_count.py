"""Number of Heine-Stieltjes solutions found against the combinatorial bound."""
import argparse

import numpy as np

from bethe_qsl.awop import QParam
from bethe_qsl.heine import SolverOptions, heine_bound
from bethe_qsl.qsl import QslProblem, XxzParams, heine_stieltjes_solve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--starts", type=int, default=64)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    a = rng.uniform(-0.9, 0.9, 2 * args.N) + 1j * rng.uniform(-0.4, 0.4, 2 * args.N)
    params = XxzParams(QParam.from_q(0.55 + 0.25j), tuple(a))
    print("n,found,bound,flagged,starts_tried,converged,duplicates")
    for n in range(args.max_n + 1):
        problem = QslProblem.from_params(params, n)
        sols, diag = heine_stieltjes_solve(problem, SolverOptions(starts=args.starts, seed=args.seed))
        flagged = sum(1 for s in sols if s.flags)
        bound = heine_bound(n, args.N - 2)
        print(f"{n},{len(sols)},{bound},{flagged},{diag.starts_tried},{diag.converged},{diag.duplicates}")


if __name__ == "__main__":
    main()
