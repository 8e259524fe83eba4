"""Write the standard SVG figures into a directory."""
import argparse
from pathlib import Path

from snakefrac.labeled import example_labeled_graph
from snakefrac.matchings import edges_of, enumerate_matchings
from snakefrac.snake import SnakeShape, cf_to_snake, snakes_with_matching_count
from snakefrac.svg import render_svg


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", default="figures")
    args = p.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    figures = {
        "single_tile.svg": render_svg(SnakeShape(1, ())),
        "staircase_2_3_1_2_3.svg": render_svg(cf_to_snake((2, 3, 1, 2, 3))[0]),
    }
    g = example_labeled_graph()
    labels = {e: g.weight_of(e) for e in edges_of(g.shape)}
    figures["example_labeled.svg"] = render_svg(g.shape, labels, dict(g.tile_label))
    figures["matchings_2_3_1.svg"] = render_svg(g.shape, labels, dict(g.tile_label),
                                                enumerate_matchings(g.shape))
    for k, shape in enumerate(snakes_with_matching_count(11), 1):
        figures[f"eleven_{k:02d}.svg"] = render_svg(shape)
    for name, svg in figures.items():
        (out / name).write_text(svg, encoding="utf-8")
        print("wrote", out / name)


if __name__ == "__main__":
    main()
