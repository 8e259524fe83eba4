"""Snake graphs, continued fractions and their Laurent-polynomial expansions."""
from snakefrac.cf_core import ContinuedFraction, continuant, evaluate, from_rational
from snakefrac.matchings import count_matchings, enumerate_matchings
from snakefrac.snake import NeChoice, SnakeShape, cf_to_snake, snake_to_cf

__all__ = [
    "ContinuedFraction", "continuant", "evaluate", "from_rational",
    "count_matchings", "enumerate_matchings",
    "NeChoice", "SnakeShape", "cf_to_snake", "snake_to_cf",
]
__version__ = "0.1.0"
