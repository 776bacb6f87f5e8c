#!/usr/bin/env python3
"""
Time the alliance polynomial of a random graph with 1 and with several workers.

Usage:
    python scripts/benchmark_threads.py
    python scripts/benchmark_threads.py --n 22 --threads 8 --seed 7
"""

import os
import sys
import time
import random
import logging
import argparse
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv(override=True)

# Add the project root to the path so we can import our modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from allipoly.models.graph import Graph
from allipoly.services.alliance.engine import alliance_polynomial
from allipoly.services.graphs.builders import new_graph

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def random_graph(n: int, probability: float, seed: int) -> Graph:
    """Erdos-Renyi graph G(n, p) from a seeded generator."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < probability]
    return new_graph(n, edges)


def timed(graph: Graph, threads: int) -> float:
    start = time.perf_counter()
    polynomial = alliance_polynomial(graph, threads=threads)
    elapsed = time.perf_counter() - start
    logger.info(f"threads={threads}: {elapsed:.2f}s, A(G;1)={polynomial.total()}")
    return elapsed


def main() -> None:
    parser = argparse.ArgumentParser(description="Compare single-worker and multi-worker enumeration time")
    parser.add_argument("--n", type=int, default=20, help="Graph order (default 20)")
    parser.add_argument("--p", type=float, default=0.3, help="Edge probability (default 0.3)")
    parser.add_argument("--threads", type=int, default=8, help="Worker count to compare against 1 (default 8)")
    parser.add_argument("--seed", type=int, default=1, help="Random seed (default 1)")
    args = parser.parse_args()

    graph = random_graph(args.n, args.p, args.seed)
    logger.info(f"Random graph n={graph.order}, m={graph.size}")

    single = timed(graph, 1)
    multi = timed(graph, args.threads)
    if multi <= 0:
        logger.error("Timing resolution too coarse to compare")
        sys.exit(1)
    print(f"speedup with {args.threads} workers: {single / multi:.2f}x")


if __name__ == "__main__":
    main()
