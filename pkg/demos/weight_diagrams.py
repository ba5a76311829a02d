"""Dominant characters and dimension bookkeeping for a few small modules.

For each module the dominant weights are printed with their multiplicities
and orbit sizes; the orbit-weighted sum reproduces the closed dimension
formula exactly.

Run with: python3 demos/weight_diagrams.py
"""

from weightmult import build_root_system, character, is_under, orbit_size, weyl_dimension

MODULES = [
    ("A", 2, (1, 1)),
    ("A", 3, (1, 1, 0)),
    ("B", 2, (1, 1)),
    ("B", 3, (1, 1, 1)),
    ("G", 2, (0, 1)),
]


def main():
    for family, rank, lam in MODULES:
        rs = build_root_system(family, rank)
        chart = character(rs, lam)
        order = sorted(chart, key=lambda mu: -sum(is_under(rs, mu, lam)))
        print(f"== {rs.label()}, highest weight {lam} ==")
        total = 0
        for mu in order:
            m = chart[mu]
            orbit = orbit_size(rs, mu)
            total += m * orbit
            print(f"  mu={mu}  multiplicity={m}  orbit={orbit}")
        print(f"  dimension: {total} (orbit-weighted sum) = {weyl_dimension(rs, lam)} (product formula)")
        print()


if __name__ == "__main__":
    main()
