"""Tour of the root system layer: Cartan data, positive roots, Weyl orders.

Run with: python3 demos/explore_root_systems.py
"""

from weightmult import build_root_system, root_to_weight_coords


def show(family, rank):
    rs = build_root_system(family, rank)
    print(f"== {rs.label()} ==")
    print("Cartan matrix:")
    for row in rs.cartan:
        print("   ", " ".join(f"{x:3d}" for x in row))
    print("symmetrizer d = (" + ", ".join(str(x) for x in rs.symmetrizer) + ")")
    print(f"|positive roots| = {len(rs.pos_roots)}, |W| = {rs.weyl_order}")
    print("positive roots by height (root coordinates):")
    height = None
    line = []
    for beta in rs.pos_roots:
        h = sum(beta)
        if h != height:
            if line:
                print(f"  height {height}: " + "  ".join(line))
            height, line = h, []
        line.append(str(beta))
    print(f"  height {height}: " + "  ".join(line))
    print()


def main():
    for family, rank in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]:
        show(family, rank)

    # The highest root of G2 reaches level 3 on the first simple root.
    g2 = build_root_system("G", 2)
    theta = max(g2.pos_roots, key=sum)
    print(f"highest root of G2: {theta} (weight coordinates {root_to_weight_coords(g2, theta)})")


if __name__ == "__main__":
    main()
