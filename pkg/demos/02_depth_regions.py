"""Depth-trimmed regions against average-quantile bodies.

For the uniform law on a polygon the average-quantile body of level alpha
sits between two depth regions with constants (e-1)/e and 1/e.
"""
from __future__ import annotations

import math

from _common import output_dir

from sublinbodies import AvgQuantile, DirectionGrid, contains, depth_region, floating_like_body
from sublinbodies.shapes import make_rng, random_polygon
from sublinbodies.svg import figure_svg


def main() -> None:
    out = output_dir(__doc__)
    K = random_polygon(make_rng(7), 7)
    g = DirectionGrid.uniform(720)
    figure = [("K", K.as_polygon(), "#888888")]
    for alpha in (0.1, 0.3, 0.5):
        E = floating_like_body(K, AvgQuantile(alpha), g)
        inner = depth_region(K, (math.e - 1) / math.e * alpha, g)
        outer = depth_region(K, alpha / math.e, g)
        ok = contains(E.outer, inner, tol=1e-6) and contains(outer, E.inner, tol=1e-6)
        print(f"alpha={alpha:.1f}  D_inner <= E_alpha <= D_outer: {ok}  (gap {E.gap:.1e})")
        if alpha == 0.3:
            figure += [("D_{(e-1)a/e}", inner, None), ("E_a", E.body, None), ("D_{a/e}", outer, None)]
    path = out / "depth_regions.svg"
    path.write_text(figure_svg(figure, "depth regions around E_0.3"))
    print("figure:", path)


if __name__ == "__main__":
    main()
