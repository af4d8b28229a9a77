#!/usr/bin/env python3
"""Sweep the noisy bot's error probability and report loss rates as CSV."""

import argparse

from pocketpipes import session, sim


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--runs", type=int, default=20, help="runs per grid point")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--out", default="noise_sweep.csv")
    parser.add_argument(
        "--grid", default="0,0.05,0.1,0.2,0.4,0.7,1.0",
        help="comma-separated error probabilities",
    )
    args = parser.parse_args()

    grid = [float(tok) for tok in args.grid.split(",")]
    points = sim.sweep(grid, session.DEFAULT_CONFIG, args.seed, args.runs)
    for p, rate in points:
        print(f"p={p:.2f}  loss_rate={rate:.2f}")
    sim.sweep_to_csv(points, args.out)
    print(f"written to {args.out}")


if __name__ == "__main__":
    main()
