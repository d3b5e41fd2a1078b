"""Print the first few derivative iterates of each built-in grammar next to the family values."""

import argparse

from treegrammar.grammar import BUILTIN
from treegrammar.poly import parse_poly
from treegrammar.verify import GRAMMAR_THEOREMS, grammar_normalized


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--grammar", choices=sorted(BUILTIN), action="append")
    args = ap.parse_args()
    for name in args.grammar or list(GRAMMAR_THEOREMS):
        seed, n0 = GRAMMAR_THEOREMS[name][:2]
        g = BUILTIN[name]
        print(f"# {name}: seed {seed}")
        for n in range(n0, args.n + 1):
            print(f"D^{n}({seed}) = {g.derive_n(parse_poly(seed), n)}")
            print(f"    normalized: {grammar_normalized(name, n)}")
        print()


if __name__ == "__main__":
    main()
