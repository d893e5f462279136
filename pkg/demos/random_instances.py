"""Compare the solvers across a batch of generated timetables.

For small sizes the direct orientation search double-checks the graph
method; for all sizes the heuristic's gap to the exact answer shows
what the cheap path costs.

Run from the repository root:  python3 demos/random_instances.py
"""

import time

from breakmin import generate_circle, min_breaks_bruteforce, solve_bmp

SIZES = ((4, 6), (6, 6), (8, 3))
HEURISTIC_SEEDS = (0, 1, 2)


def main():
    print(f"{'teams':>5} {'seed':>4} {'exact':>5} {'direct':>6} "
          f"{'heuristic':>9} {'time_s':>7}")
    for n_teams, instances in SIZES:
        for seed in range(instances):
            tt = generate_circle(n_teams, seed)
            t0 = time.perf_counter()
            exact = solve_bmp(tt, "exact").b_min
            elapsed = time.perf_counter() - t0
            if n_teams <= 6:
                direct = str(min_breaks_bruteforce(tt))
                assert int(direct) == exact
            else:
                direct = "-"
            heur = min(
                solve_bmp(tt, "heuristic", seed=hs).b_min for hs in HEURISTIC_SEEDS
            )
            assert heur >= exact
            print(f"{n_teams:>5} {seed:>4} {exact:>5} {direct:>6} "
                  f"{heur:>9} {elapsed:>7.3f}")
    print("\nexact always matches the direct search where both run;")
    print("the best-of-3 heuristic answer is an upper bound, often tight.")


if __name__ == "__main__":
    main()
