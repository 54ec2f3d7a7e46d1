"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Prints one CSV row per (kernel, backend) with the best wall time, and checks
that both backends agree (exactly for integer kernels, to 1e-9 for floats).
"""

import argparse
import csv
import sys
import timeit

from zetaseries import kernels


def _cases(bits):
    samples = [(1 << bits) // (k + 1) for k in range(400)]
    return {
        "alt_sums[400]": lambda b: b.alt_sums(samples),
        "alt_sums_windows[300,8]": lambda b: b.alt_sums_windows(samples[:300], 8),
        "stirling1_rows[0..300]": lambda b: _stirling_rows(b, 300),
        "gregory_abs_float[10000]": lambda b: b.gregory_abs_float(10000),
        "gregory_abs_fixed[2000]": lambda b: b.gregory_abs_fixed(2000, bits),
        "fixed_convolve[1000]": lambda b: b.fixed_convolve(samples * 3, samples * 3, 1000, bits),
    }


def _stirling_rows(b, n):
    row = [1]
    for k in range(n):
        row = b.stirling1_next_row(row, k)
    return row


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--bits", type=int, default=256)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels not built; run `python setup.py build_ext --inplace`", file=sys.stderr)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["kernel", "backend", "best_seconds", "speedup_vs_python"])
    for name, fn in _cases(args.bits).items():
        results, times = {}, {}
        for be in backends:
            mod = kernels.backend(be)
            results[be] = fn(mod)
            times[be] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        if len(results) == 2:
            a, c = results["python"], results["cython"]
            if name.startswith("gregory_abs_float"):  # summation order differs; compare to rounding
                same = all(abs(x - y) <= 1e-9 * abs(y) for x, y in zip(a, c))
            else:
                same = a == c
            if not same:
                raise SystemExit(f"backends disagree on {name}")
        for be in backends:
            w.writerow([name, be, f"{times[be]:.5f}", f"{times['python'] / times[be]:.2f}"])


if __name__ == "__main__":
    main()
