"""Run the exhaustive census, write CSVs and the verification report."""
import argparse
import time
from pathlib import Path

from genuslab.census import CensusConfig, run_census, unimap_proxy, verify_inequalities, write_report


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=7)
    ap.add_argument("--out", default="census_out")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--resume", action="store_true")
    args = ap.parse_args()

    out = Path(args.out)
    t0 = time.perf_counter()
    res = run_census(CensusConfig(nmax=args.nmax, out=out, jobs=args.jobs, resume=args.resume))
    print(f"census: {len(res.records)} records in {time.perf_counter() - t0:.1f}s -> {out}")
    report = verify_inequalities(res)
    write_report(report, out / "verification.json")
    for r in report:
        print(f"  {r.claim:32s} {r.status:15s} {r.witness}")
    print("\nplanar maps proxy (unlabelled connected planar graphs vs unicellular bound x dissections)")
    for row in unimap_proxy():
        print(f"  n={row.n} e={row.e:2d}  graphs={row.graphs:3d}  bound={row.bound:12d}  {'ok' if row.holds else 'VIOLATED'}")
    print("\n n  family  h  labelled  unlabelled")
    for r in res.records:
        if r.h <= 2:
            print(f"{r.n:2d}  {r.family:6s} {r.h:2d}  {r.labelled:8d}  {r.unlabelled:10d}")


if __name__ == "__main__":
    main()
