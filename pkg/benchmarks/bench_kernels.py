"""Compare the compiled and pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from matroidvol import kernels
from matroidvol.families import K4_EDGES, greedy_circuit_hyperplanes
from matroidvol.matroid import graphic, sparse_paving, uniform
from matroidvol.oracle import _constraints


def lattice_job(m, t):
    masks, ranks = _constraints(m)

    def run(mod):
        return mod.count_lattice_points(m.ground_size, t, t * m.rank, masks, [t * r for r in ranks])

    return run


def workloads():
    k4 = graphic(4, K4_EDGES)
    fano_like = sparse_paving(6, 2, greedy_circuit_hyperplanes(6, 2))
    u48 = uniform(4, 8)
    big = uniform(6, 12)
    yield "lattice U(4,8) t=5", lattice_job(u48, 5)
    yield "lattice M(K4) t=5", lattice_job(k4, 5)
    yield "lattice sparse paving n=6 d=2 t=6", lattice_job(fano_like, 6)
    yield "rank table U(6,12)", lambda mod: mod.rank_table(big.basis_masks, 12)
    yield "exchange check U(5,10)", lambda mod: mod.exchange_violation(uniform(5, 10).basis_masks)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = kernels.backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the Python kernels are available")
    header = f"{'workload':<38}" + "".join(f"{name:>12}" for name in backends) + f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, job in workloads():
        times, results = {}, set()
        for bname, mod in backends.items():
            best = float("inf")
            for _ in range(args.repeat):
                start = time.perf_counter()
                result = job(mod)
                best = min(best, time.perf_counter() - start)
            times[bname] = best
            results.add(repr(result) if not isinstance(result, list) else hash(tuple(result)))
        if len(results) != 1:
            raise SystemExit(f"backends disagree on {name}")
        speedup = times["python"] / times["compiled"] if "compiled" in times else float("nan")
        print(f"{name:<38}" + "".join(f"{times[b]:>11.4f}s" for b in backends) + f"{speedup:>9.1f}x")


if __name__ == "__main__":
    main()
