"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--max-length 400]

Each kernel is timed with ``timeit`` on the same inputs for both backends; the
best of ``--repeat`` runs is reported together with the speed-up.
"""

import argparse
import sys
import timeit

from circsqf import _accel, _pykernels, enumeration, words
from circsqf.construct import EXCEPTIONAL_LENGTHS, NotRepresentable, construct_word


def inputs(max_length):
    words = []
    for l in range(18, max_length + 1, 37):
        try:
            words.append(construct_word(l).letters.encode())
        except NotRepresentable:
            pass
    # square-free circles force full scans; the linear doubling gives an early hit
    return words, [w + w for w in words]


def cases(max_length):
    circles, doubled = inputs(max_length)
    return [
        ("find_square, square-free prefixes", lambda k: [k.find_square(w[: len(w) // 2 * 2 - 1]) for w in circles]),
        ("find_square, doubled words", lambda k: [k.find_square(w) for w in doubled]),
        ("find_circular_square", lambda k: [k.find_circular_square(w) for w in circles]),
        ("square_free_words(24)", lambda k: k.square_free_words(24, b"abc")),
    ]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--max-length", type=int, default=400)
    args = p.parse_args(argv)

    if _accel.BACKEND != "cython":
        print("compiled kernels not available; only the Python backend is timed", file=sys.stderr)
    backends = {"python": _pykernels}
    if _accel.BACKEND == "cython":
        backends["cython"] = _accel.kernels

    print(f"{'kernel':<36}" + "".join(f"{name:>12}" for name in backends) + f"{'speed-up':>11}")
    for name, fn in cases(args.max_length):
        best = {}
        for bname, k in backends.items():
            assert fn(k) == fn(_pykernels), name
            best[bname] = min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat))
        ratio = best["python"] / best["cython"] if "cython" in best else float("nan")
        print(f"{name:<36}" + "".join(f"{t * 1e3:>10.2f}ms" for t in best.values()) + f"{ratio:>10.1f}x")

    for bname in backends:
        # construction end to end, kernels switched underneath the library
        words.kernels = enumeration.kernels = backends[bname]
        t = min(timeit.repeat(lambda: [construct_word(l) for l in range(18, 300) if l not in EXCEPTIONAL_LENGTHS],
                              number=1, repeat=max(1, args.repeat // 2)))
        print(f"construct_word 18..299 [{bname}]: {t:.2f}s")


if __name__ == "__main__":
    main()
