"""Average-quantile bodies of the l1 ball and of a thin box inside it.

The box is a subset of the ball, yet its body reaches further along the
x-axis.  Rescaling alpha by the volumes restores the inclusion.
"""
from __future__ import annotations

from _common import output_dir

from sublinbodies import AvgQuantile, BoxShape, L1BallShape, floating_like_body
from sublinbodies.experiments import experiment_nonmonotone
from sublinbodies.svg import figure_svg


def main() -> None:
    out = output_dir(__doc__)
    K = L1BallShape([0.0, 0.0], 1.0)
    L = BoxShape([0.0, 0.0], [0.8, 0.1])
    for alpha in (0.1, 0.3, 0.5):
        hK = floating_like_body(K, AvgQuantile(alpha), 4).field.values[0]
        hL = floating_like_body(L, AvgQuantile(alpha), 4).field.values[0]
        print(f"alpha={alpha:.1f}  h(E K, e1)={hK:.6f}  h(E L, e1)={hL:.6f}  box wins: {hL > hK}")

    rep, figure = experiment_nonmonotone()
    print("verdict:", rep.results["verdict"])
    for c in rep.checks:
        print(f"  {c.name:38s} {'ok' if c.passed else 'FAILED'}  value={c.value:.3e}")
    path = out / "floating_bodies.svg"
    path.write_text(figure_svg(figure, "l1 ball vs box, alpha = 0.5"))
    print("figure:", path)


if __name__ == "__main__":
    main()
