"""Tabulate ground-state energies of the three systems against gamma at fixed mu1, mu2.

Shows the sqrt(1 - gamma^2) and mu/(1 - gamma) dependence of the closed forms.
Usage: python3 scripts/energy_sweep.py [--mu1 0.3] [--mu2 0.5] [--k 1] [--num 19]
"""
import argparse

import numpy as np

from dunkl2d.operators import ParameterError, make_params
from dunkl2d.special import DomainError
from dunkl2d.spectra import AngularQuantum, cartesian_energy, coulomb_state, polar_energy


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mu1", type=float, default=0.3)
    ap.add_argument("--mu2", type=float, default=0.5)
    ap.add_argument("--k", type=float, default=1.0)
    ap.add_argument("--num", type=int, default=19)
    args = ap.parse_args()

    print("gamma,eta1,eta2,E_cartesian_00,E_polar_00,E_coulomb_00")
    for g in np.linspace(-0.9, 0.9, args.num):
        try:
            p = make_params(args.mu1, args.mu2, float(g))
        except ParameterError:
            continue
        try:
            ec = coulomb_state(0, AngularQuantum(0, 1), args.k, p).energy
        except DomainError:
            ec = float("nan")
        print(f"{g:.3f},{p.eta1:.6f},{p.eta2:.6f},{cartesian_energy(0, 0, p):.9f},"
              f"{polar_energy(0, 0, p):.9f},{ec:.9f}")


if __name__ == "__main__":
    main()
