"""Benchmark the compiled kernel against the pure-Python twin.

Workloads mirror the hot paths of the package: GF(2)/GF(p) ranks of
coboundary-sized matrices and the full cohomology pipeline over the
restrictions of a flag ideal's Stanley-Reisner complex.

Run:  python3 benchmarks/bench_kernels.py
"""

import random
import time

from flagposet import _kernel_py

try:
    from flagposet import _kernel_c
except ImportError:
    _kernel_c = None

import flagposet as fp


def timed(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_rank_gf2(impl):
    rng = random.Random(1)
    rows = [rng.getrandbits(600) for _ in range(600)]
    return lambda: impl.rank_gf2(rows, 600)


def bench_rank_mod_p(impl):
    rng = random.Random(2)
    rows = [[rng.randrange(-1, 2) for _ in range(220)] for _ in range(220)]
    return lambda: impl.rank_mod_p(rows, 32003)


def bench_restrictions(impl, p):
    g = fp.example_4_9()
    ideal = fp.flag_ideal(g)
    index = {v: i for i, v in enumerate(ideal.variables)}
    gen_masks = [sum(1 << index[v] for v in gen) for gen in ideal.generators]
    rng = random.Random(3)
    subs = [rng.getrandbits(16) for _ in range(150)]

    def run():
        total = 0
        for sub in subs:
            gens = [m for m in gen_masks if m & ~sub == 0]
            faces = impl.faces_from_nonfaces(gens, sub)
            total += sum(impl.cohomology_dims(faces, p))
        return total

    return run


def main():
    impls = [("pure", _kernel_py)]
    if _kernel_c is not None:
        impls.append(("compiled", _kernel_c))
    else:
        print("compiled kernel not built; timing the pure twin only")

    workloads = [
        ("rank_gf2 600x600", bench_rank_gf2),
        ("rank_mod_p 220x220 p=32003", bench_rank_mod_p),
        ("flag-ideal restrictions GF(2)",
         lambda impl: bench_restrictions(impl, 2)),
        ("flag-ideal restrictions GF(32003)",
         lambda impl: bench_restrictions(impl, 32003)),
    ]

    print(f"{'workload':38} " + " ".join(f"{name:>12}" for name, _ in impls)
          + ("     speedup" if len(impls) == 2 else ""))
    for label, make in workloads:
        times = []
        results = []
        for _, impl in impls:
            best, result = timed(make(impl))
            times.append(best)
            results.append(result)
        assert len(set(results)) == 1, f"twins disagree on {label}"
        row = f"{label:38} " + " ".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
