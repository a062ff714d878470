from pomsat.strategy.brute_force import brute_force_exists, brute_force_search
from pomsat.strategy.extract import extract_strategy
from pomsat.strategy.product import ProductGraph, build_product_graph
from pomsat.strategy.serialize import dump_strategy, load_strategy
from pomsat.strategy.simulate import Play, simulate_play, uniform_distribution
from pomsat.strategy.verify import verify_almost_sure

__all__ = [
    "Play",
    "ProductGraph",
    "brute_force_exists",
    "brute_force_search",
    "build_product_graph",
    "dump_strategy",
    "extract_strategy",
    "load_strategy",
    "simulate_play",
    "uniform_distribution",
    "verify_almost_sure",
]
