"""Write the plane trees with a given number of edges, and their statistics, to CSV files."""

import argparse
from pathlib import Path

from treegrammar.trees import ALL, TIP_AUGMENTED, enumerate_trees, stats_csv


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-edges", type=int, default=6)
    ap.add_argument("--outdir", type=Path, default=Path("trees_out"))
    ap.add_argument("--tip-augmented", action="store_true")
    args = ap.parse_args()
    filt = TIP_AUGMENTED if args.tip_augmented else ALL
    args.outdir.mkdir(parents=True, exist_ok=True)
    for n in range(args.max_edges + 1):
        trees = enumerate_trees(n, filt)
        path = args.outdir / f"{filt}_{n:02d}.csv"
        path.write_text(stats_csv(trees))
        print(f"{path}: {len(trees)} trees")


if __name__ == "__main__":
    main()
