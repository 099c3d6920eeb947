"""Scan every rotation system of K5 (vertex 1 fixed) for one certifying planarity of all K4s."""
from genuslab.classes import check_k5_chered


def fmt(rot):
    return "(" + "".join(map(str, rot)) + ")"


def main():
    rep = check_k5_chered()
    print(rep.message)
    print(f"systems planar on the four K4s through vertex 1: {rep.four_planar}")
    print("\nforced subsequences (row: vertex, column: dropped vertex)")
    print("      " + "  ".join(f"drop {d}" for d in (2, 3, 4, 5)))
    for v in range(1, 6):
        cells = [fmt(rep.forced_table[(v, d)]) if (v, d) in rep.forced_table else "-" for d in (2, 3, 4, 5)]
        print(f"pi({v})  " + "  ".join(f"{c:6s}" for c in cells))
    print("\nforced rotation: " + ", ".join(f"pi({v})={fmt(r)}" for v, r in sorted(rep.forced.items())))
    print(f"facial walk 2,5,4,3,2 on {{2,3,4,5}}: {'yes' if rep.forced_has_walk_2543 else 'no'}")


if __name__ == "__main__":
    main()
