#!/usr/bin/env python3
"""Exhaustively enumerate the canonical cube space and print the depth
histogram (the solver's independent oracle)."""

import time

from pocketpipes import enumeration


def main():
    t0 = time.time()
    report = enumeration.enumerate_all()
    elapsed = time.time() - t0
    print(f"reachable canonical states: {report.total_states}")
    print(f"diameter (optimal worst case): {report.diameter}")
    print(f"elapsed: {elapsed:.1f}s")
    print("depth histogram:")
    for depth, count in enumerate(report.depth_histogram):
        print(f"  {depth:2d}: {count}")


if __name__ == "__main__":
    main()
