#!/usr/bin/env python3
"""Generate the bundled table of Riemann zeta zero ordinates.

The zeros come from Arb (python-flint), whose zero isolation is rigorous. A few
indices are spot-checked against mpmath.zetazero, and the count below the
last zero is checked against mpmath.nzeros.

usage: gen_zero_table.py COUNT OUT
"""
import sys

import flint
import mpmath


def main():
    count = int(sys.argv[1])
    out = sys.argv[2]
    flint.ctx.prec = 80
    zeros = []
    batch = 500
    n = 1
    while n <= count:
        k = min(batch, count - n + 1)
        for z in flint.acb.zeta_zeros(n, k):
            t = z.imag
            assert t.rad() < 1e-12, t
            zeros.append(float(t.mid()))
        n += k
    assert all(a < b for a, b in zip(zeros, zeros[1:]))
    mpmath.mp.dps = 20
    below = int(mpmath.nzeros((zeros[-1] + zeros[-2]) / 2))
    print(f"nzeros between the last two zeros: {below}", file=sys.stderr)
    assert below == count - 1
    for i in (1, 2, 3, 29, 30, 100, 1000, count // 2, count):
        ref = float(mpmath.zetazero(i).imag)
        print(f"check n={i}: {zeros[i - 1]:.10f} vs {ref:.10f}", file=sys.stderr)
        assert abs(zeros[i - 1] - ref) < 1e-9
    with open(out, "w") as f:
        f.write(f"# first {count} nontrivial zeros of zeta(s), ordinates of 1/2 + i t\n")
        f.write("# precision=1e-10\n")
        for z in zeros:
            f.write(f"{z:.12f}\n")


if __name__ == "__main__":
    main()
