"""KS distance of the Askey-Wilson zeros to the arcsine law as n grows."""
import argparse

import numpy as np

from bethe_qsl.cli import arcsine_ks
from bethe_qsl.qsl import aw_zeros


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--spins", default="-0.5,-0.5,-0.7,-0.9")
    ap.add_argument("--zeta", type=float, default=0.3, help="eta = i zeta")
    ap.add_argument("--degrees", default="10,25,50,100,200,400")
    args = ap.parse_args()
    spins = tuple(float(v) for v in args.spins.split(","))
    print("n,ks_distance,min_x,max_x")
    for n in (int(v) for v in args.degrees.split(",")):
        x = np.real(aw_zeros(n, spins, 1j * args.zeta))
        print(f"{n},{arcsine_ks(x):.6f},{x.min():.6f},{x.max():.6f}")


if __name__ == "__main__":
    main()
