"""XXX ground-configuration weights next to their closed forms."""
import argparse

import numpy as np

from bethe_qsl.weights import xxx_weight, xxx_weight_closed
from bethe_qsl.wilson import xxx_ground_config


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lengths", default="2,4,6,8")
    ap.add_argument("--points", type=int, default=8)
    args = ap.parse_args()
    print("L,y,weight,closed_form,rel_diff")
    for L in (int(v) for v in args.lengths.split(",")):
        params, _ = xxx_ground_config(L)
        for y in np.linspace(0.1, 2.5, args.points):
            w, c = xxx_weight(y, params.s), xxx_weight_closed(y, L)
            print(f"{L},{y:.4f},{w:.10e},{c:.10e},{abs(w / c - 1):.2e}")


if __name__ == "__main__":
    main()
