"""Compare the pure-Python and compiled table kernels on shared workloads."""

import argparse
import os
import time

from iquotients.kernels import _pure

if os.environ.get("IQUOTIENTS_PURE_KERNELS"):
    _speed = None
else:
    try:
        from iquotients.kernels import _speed
    except ImportError:
        _speed = None


def count_tables(n, **kwargs):
    def job(mod):
        return sum(1 for _ in mod.enumerate_tables(n, **kwargs))

    return job


def canonical_job(tables, n):
    def job(mod):
        forms = {mod.canonical_table(flat, n) for flat in tables}
        return len(forms)

    return job


def rstar_job(tables, n):
    def job(mod):
        return hash(tuple(mod.rstar_matrix(flat, n) for flat in tables))

    return job


def associativity_job(tables, n):
    def job(mod):
        return sum(
            1 for flat in tables if mod.find_nonassociative_triple(flat, n) is None
        )

    return job


def workloads(full):
    tables4 = list(_pure.enumerate_tables(4))
    jobs = [
        ("order-4 semigroup tables", count_tables(4)),
        ("order-5 monoid tables", count_tables(5, identity0=True)),
        ("order-6 semilattice tables", count_tables(6, commutative=True, idempotent=True)),
        ("canonical forms over order 4", canonical_job(tables4, 4)),
        ("R* matrices over order 4", rstar_job(tables4, 4)),
        ("associativity scan over order 4", associativity_job(tables4, 4)),
    ]
    if full:
        jobs.append(("order-5 semigroup tables", count_tables(5)))
        jobs.append(("order-6 monoid tables", count_tables(6, identity0=True)))
    return jobs


def best_time(job, mod, repeat):
    best = None
    value = None
    for _ in range(repeat):
        start = time.perf_counter()
        value = job(mod)
        elapsed = time.perf_counter() - start
        if best is None or elapsed < best:
            best = elapsed
    return value, best


def main(argv=None):
    parser = argparse.ArgumentParser(
        description="time the table kernels on both backends"
    )
    parser.add_argument("--repeat", type=int, default=3,
                        help="runs per workload, best time kept")
    parser.add_argument("--full", action="store_true",
                        help="add the long order-5 and order-6 enumerations")
    args = parser.parse_args(argv)
    if _speed is None:
        print("compiled backend unavailable; timing the pure backend only")
    header = "%-34s %10s %10s %9s" % ("workload", "pure", "compiled", "speedup")
    print(header)
    print("-" * len(header))
    for name, job in workloads(args.full):
        value, pure_time = best_time(job, _pure, args.repeat)
        if _speed is None:
            print("%-34s %9.3fs %10s %9s" % (name, pure_time, "-", "-"))
            continue
        speed_value, speed_time = best_time(job, _speed, args.repeat)
        if speed_value != value:
            raise SystemExit("backends disagree on %r: %r vs %r"
                             % (name, value, speed_value))
        print("%-34s %9.3fs %9.3fs %8.1fx"
              % (name, pure_time, speed_time, pure_time / speed_time))


if __name__ == "__main__":
    main()
