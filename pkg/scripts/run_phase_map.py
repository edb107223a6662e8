"""Early-time return-probability average on a (JT, eps) grid.

Maps the window-averaged even-period return probability of a polarized
chain over a two-dimensional grid of drive parameters at a single length.
Cells near JT = pi at small kick imperfection stay close to one (the
subharmonic response survives the averaging window); elsewhere the average
drops toward the ergodic floor.  Output is one summary CSV with a row per
grid cell, suitable for a color map.
"""

import argparse
from pathlib import Path

import numpy as np

from kicked_ising.sweep import SweepConfig, run_sweep


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--length", type=int, default=8, help="chain length (default 8)")
    parser.add_argument(
        "--jt-steps", type=int, default=21,
        help="grid points for JT/pi in [0, 2] (default 21)",
    )
    parser.add_argument(
        "--eps-steps", type=int, default=13,
        help="grid points for eps/pi in [0.02, 0.3] (default 13)",
    )
    parser.add_argument(
        "--window", type=int, default=1000,
        help="even-period samples to average per cell (default 1000)",
    )
    parser.add_argument("--jobs", type=int, default=4, help="worker processes (default 4)")
    parser.add_argument(
        "--out-dir", type=Path, default=Path("results"),
        help="directory for the CSV file (default ./results)",
    )
    args = parser.parse_args(argv)
    args.out_dir.mkdir(parents=True, exist_ok=True)

    config = SweepConfig(
        mode="phase-diagram",
        lengths=(args.length,),
        jt_over_pi=tuple(float(x) for x in np.linspace(0.0, 2.0, args.jt_steps)),
        epsilon_over_pi=tuple(float(x) for x in np.linspace(0.02, 0.3, args.eps_steps)),
        n_periods=2 * args.window,
        window=args.window,
        out=str(args.out_dir / "phase_map.csv"),
        jobs=args.jobs,
    )
    result = run_sweep(config)
    print(f"wrote {result.path} ({len(result.rows)} cells)")


if __name__ == "__main__":
    main()
