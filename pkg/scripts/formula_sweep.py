"""Print the formula/oracle comparison table and summarise the unicellular indexing check."""
import argparse
import csv
import sys

from genuslab.formulas import formula_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=None, help="CSV path (default: stdout)")
    args = ap.parse_args()

    rows = formula_sweep()
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["name", "args", "value", "flag"])
    w.writerows(rows)
    if args.out:
        fh.close()

    tally = {}
    for name, _, _, flag in rows:
        tally.setdefault(name, {}).setdefault(flag or "-", 0)
        tally[name][flag or "-"] += 1
    print("\nsummary:", file=sys.stderr)
    for name, flags in tally.items():
        print(f"  {name:20s} " + ", ".join(f"{k}: {v}" for k, v in sorted(flags.items())), file=sys.stderr)


if __name__ == "__main__":
    main()
