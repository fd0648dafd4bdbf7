#!/usr/bin/env python3
"""Regenerate the headline tables: the seeded-row matrix, the sparse-left
window, the canonical period-6 placements, the composite seed matrix, and
the two long composite rows."""
import argparse

from ultraseq import (
    TauConfig,
    composite_row,
    omega_slice,
    pi_star_window,
    pi_window,
    tau_enumerate,
)


def seeded_row_matrix(n_max: int) -> None:
    print(f"Seeded rows, m = 1..8, indices 0..{n_max}")
    for m in range(1, 9):
        row = pi_window(m, n_max).slice(0, n_max)
        print("  " + "  ".join(f"{v:>6d}" for v in row))


def sparse_left_window() -> None:
    w = pi_star_window(1, 9)
    print("\nSparse-left family, m = 1")
    print(f"  right values 0..9: {w.slice(0, 9)}")
    marked = [(k, w.value_at(k)) for k in range(w.lo, 0)
              if w.value_at(k) != -2]
    print(f"  left placements:   {marked}")


def canonical_placements() -> None:
    print("\nCanonical period-6 placements")
    for c in tau_enumerate(1, canonical=True):
        print(f"  {c.descriptor():<22s} unit={list(c.unit())}")


def seed_matrix() -> None:
    print("\nComposite seed matrix (period-6 left tail, seeds 1..6)")
    c1 = TauConfig(1, {5}, {1})
    for seed in range(1, 7):
        row = composite_row(c1, (), seed, 8).slice(0, 8)
        print("  " + "  ".join(f"{v:>4d}" for v in row))


def long_rows() -> None:
    print("\nLong composite rows")
    r2 = composite_row(TauConfig(2, {6, 9}, {1, 3}),
                       omega_slice(-4, 6), 1, 12)
    print(f"  m=2: {r2.slice(0, 12)}")
    r3 = composite_row(TauConfig(3, {8, 11, 13}, {1, 3, 6}),
                       omega_slice(-6, 8), 1, 12)
    print(f"  m=3: {r3.slice(0, 12)}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=7,
                        help="last index of the seeded-row matrix")
    args = parser.parse_args()
    seeded_row_matrix(args.n_max)
    sparse_left_window()
    canonical_placements()
    seed_matrix()
    long_rows()


if __name__ == "__main__":
    main()
