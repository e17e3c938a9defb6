#!/usr/bin/env python3
"""Write generator files for G2(p) acting on its 7-dimensional module.

The Lie algebra g2 sits inside so(7) via e_short = e_{a1} + e_{a3},
e_long = e_{a2}, where a1 = e1-e2, a2 = e2-e3 (long) and a3 = e3 (short)
are the simple roots of B3.  The group generators are the root elements
x_{+-short}(1), x_{+-long}(1) = exp(e) of the four Chevalley generators,
computed over Z and reduced mod p.

The natural basis order is v1, v2, v3, v0, v-3, v-2, v-1, preserving the
symmetric form with (v_i, v_-i) = 1 and (v0, v0) = 2.

Files are written in row-vector convention: the matrix of g has row i equal
to the image of basis vector i, i.e. the transpose of the column matrix.

Usage: make_g2_generators.py OUTDIR [p ...]
"""
import sys
from pathlib import Path

import sympy as sp

IDX = {1: 0, 2: 1, 3: 2, 0: 3, -3: 4, -2: 5, -1: 6}


def unit(i, j):
    m = sp.zeros(7, 7)
    m[IDX[i], IDX[j]] = 1
    return m


def chevalley_b3():
    e1 = unit(1, 2) - unit(-2, -1)
    e2 = unit(2, 3) - unit(-3, -2)
    e3 = 2 * unit(3, 0) - unit(0, -3)
    f1 = unit(2, 1) - unit(-1, -2)
    f2 = unit(3, 2) - unit(-2, -3)
    f3 = unit(0, 3) - 2 * unit(-3, 0)
    return (e1, e2, e3), (f1, f2, f3)


def form():
    j = sp.zeros(7, 7)
    for i in (1, 2, 3):
        j[IDX[i], IDX[-i]] = 1
        j[IDX[-i], IDX[i]] = 1
    j[IDX[0], IDX[0]] = 2
    return j


def lie_closure(gens):
    basis = []

    def add(m):
        vecs = [b.reshape(1, 49) for b in basis] + [m.reshape(1, 49)]
        if sp.Matrix.vstack(*vecs).rank() > len(basis):
            basis.append(m)
            return True
        return False

    for g in gens:
        add(g)
    changed = True
    while changed:
        changed = False
        for a in list(basis):
            for b in list(basis):
                if add(a * b - b * a):
                    changed = True
    return basis


def exp_nilpotent(x):
    result = sp.eye(7)
    term = sp.eye(7)
    k = 1
    while True:
        term = term * x / k
        if term == sp.zeros(7, 7):
            return result
        result += term
        k += 1


def main():
    outdir = Path(sys.argv[1])
    primes = [int(a) for a in sys.argv[2:]] or [3, 5, 7]
    (e1, e2, e3), (f1, f2, f3) = chevalley_b3()
    xs, xl = e1 + e3, e2
    ys, yl = f1 + f3, f2
    j = form()
    for x in (xs, xl, ys, yl):
        assert x.T * j + j * x == sp.zeros(7, 7), "not in so(7)"
    hs = xs * ys - ys * xs
    hl = xl * yl - yl * xl
    assert hs * xl - xl * hs == -3 * xl
    assert hl * xs - xs * hl == -1 * xs
    assert hs * xs - xs * hs == 2 * xs
    assert hl * xl - xl * hl == 2 * xl
    dim = len(lie_closure([xs, xl, ys, yl]))
    assert dim == 14, f"generated Lie algebra has dimension {dim}"

    gens = [exp_nilpotent(x) for x in (xs, ys, xl, yl)]
    for g in gens:
        assert all(v.is_integer for v in g), "non-integral root element"
        assert g.det() == 1
        assert g.T * j * g == j
    outdir.mkdir(parents=True, exist_ok=True)
    for p in primes:
        lines = [f"7 {p} {len(gens)}"]
        for g in gens:
            rows = g.T  # row-vector convention
            for r in range(7):
                lines.append(" ".join(str(int(rows[r, c]) % p) for c in range(7)))
        path = outdir / f"g2_{p}.gens"
        path.write_text("\n".join(lines) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
