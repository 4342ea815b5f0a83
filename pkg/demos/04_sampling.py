"""Empirical average-quantile bodies converge to the population body.

Samples of growing size from the uniform square; the median Hausdorff
distance to the exact body shrinks roughly like n^{-1/2}.
"""
from __future__ import annotations

from _common import output_dir

from sublinbodies.experiments import experiment_concentration
from sublinbodies.svg import figure_svg


def main() -> None:
    out = output_dir(__doc__)
    rep, figure = experiment_concentration(seed=0, n=20_000, seeds=20, decay_seeds=20)
    res = rep.results
    print(f"sandwich frequency {res['frequency']:.2f} (bound {res['bound']:.3f})")
    for n, med in res["median_hausdorff"].items():
        print(f"n={int(n):>6d}  median Hausdorff {med:.4f}")
    path = out / "sampling.svg"
    path.write_text(figure_svg(figure, "empirical vs exact body, alpha = 0.3"))
    print("figure:", path)


if __name__ == "__main__":
    main()
