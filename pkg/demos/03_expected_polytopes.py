"""Expected convex hulls of m uniform points in the square.

Support values come from the maximum-extension spectral formula and are
checked against a Monte Carlo average of random hulls.
"""
from __future__ import annotations

from _common import output_dir

from sublinbodies.experiments import experiment_expected_polytope
from sublinbodies.svg import figure_svg


def main() -> None:
    out = output_dir(__doc__)
    rep, figure = experiment_expected_polytope(seed=0, trials=20_000)
    for c in rep.checks:
        print(f"{c.name:40s} {'ok' if c.passed else 'FAILED'}  value={c.value:.3g}  tol={c.tolerance:.3g}")
    path = out / "expected_polytopes.svg"
    path.write_text(figure_svg(figure, "expected polytopes, m = 2, 3, 5"))
    print("figure:", path)


if __name__ == "__main__":
    main()
