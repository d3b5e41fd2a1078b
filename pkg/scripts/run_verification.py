"""Run every verification check with per-check timing and write a JSON report."""

import argparse
import json
import time
from pathlib import Path

from treegrammar import verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suite", default="all", choices=("all",) + verify.SUITES)
    ap.add_argument("--max-n", type=int, default=None)
    ap.add_argument("--out", type=Path, default=None, help="optional JSON report path")
    args = ap.parse_args()

    rows = []
    total = time.perf_counter()
    for name, params in verify.suite_jobs(args.suite, args.max_n):
        t0 = time.perf_counter()
        report = getattr(verify, name)(*params)
        dt = time.perf_counter() - t0
        print(f"{report.line()}  ({dt:.2f}s)")
        rows.append({**report.to_dict(), "seconds": round(dt, 3)})
    print(f"total {time.perf_counter() - total:.2f}s, {sum(r['passed'] for r in rows)}/{len(rows)} passed")
    if args.out:
        args.out.write_text(json.dumps(rows, indent=2) + "\n")
    return 0 if all(r["passed"] for r in rows) else 1


if __name__ == "__main__":
    raise SystemExit(main())
