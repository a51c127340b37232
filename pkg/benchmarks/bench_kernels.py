"""Time the compiled and pure-Python kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

from peuler.dyck import DyckWord
from peuler.kernels import STAT_DES, STAT_W1, backends
from peuler.poset import add_bottom, antichain, disjoint_union, poset_from_covers


def _workloads():
    n_shape = poset_from_covers(4, [(1, 2), (3, 2), (3, 4)])
    forest = disjoint_union(add_bottom(antichain(3)), n_shape)
    yield "census W1, antichain(8)", lambda k: k.extension_census(8, [0] * 8, STAT_W1)
    yield "census DES, antichain(9)", lambda k: k.extension_census(9, [0] * 9, STAT_DES)
    yield "count, forest(8)", lambda k: k.count_extensions(forest.n, forest.pred_masks())
    yield "list, n_shape + antichain(4)", lambda k: k.linear_extensions(8, disjoint_union(n_shape, antichain(4)).pred_masks())
    w, v = DyckWord("uuuudddu"), DyckWord("uududududu")
    yield "bullet, 8 x 10 letters", lambda k: k.bullet_words(w.bits, w.length, v.bits, v.length)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = backends()
    names = list(impls)
    print(f"{'workload':32s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, job in _workloads():
        times = []
        for name in names:
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                job(impls[name])
                best = min(best, time.perf_counter() - t0)
            times.append(best)
        row = f"{label:32s}" + "".join(f"{t:11.4f}s" for t in times)
        if len(times) > 1:
            row += f"{times[0] / times[-1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
