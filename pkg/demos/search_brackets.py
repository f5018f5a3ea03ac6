"""Search for power brackets, exhaustively on a 1-element biquandle over Z_3
and randomized on the 2-element swap biquandle over Z_4."""

from itertools import islice

from powerbracket import SearchConfig, search, search_space_estimate, serialize_bracket
from powerbracket.biquandle import validate


def main():
    one = validate([[1]], [[1]])
    solutions = list(search(SearchConfig(one, 3)))
    print(f"exhaustive, 1-element biquandle over Z_3: {len(solutions)} brackets")

    est = search_space_estimate(2, 4)
    print(f"2-element biquandle over Z_4: naive candidate count {est['naive_count']}")

    swap = validate([[2, 2], [1, 1]], [[2, 2], [1, 1]])
    cfg = SearchConfig(swap, 4, "randomized", seed=7, max_candidates=100_000)
    print("first randomized hit:")
    print(serialize_bracket(next(iter(islice(search(cfg), 1)))))


if __name__ == "__main__":
    main()
