"""Scratch validation of the remaining scenarios (deleted before delivery)."""
import itertools, sys, time
from fractions import Fraction
from detindex import ring, parse_polynomial
from detindex.poly import Polynomial
from detindex.idealops import (
    ideal, buchberger, staircase_dimension, mora_standard_basis, saturate_ideal,
    krull_dimension,
)

def det(rows, cols, M):
    if len(rows) == 1:
        return M[rows[0]][cols[0]]
    total = None
    for j, c in enumerate(cols):
        term = M[rows[0]][c] * det(rows[1:], cols[:j] + cols[j + 1 :], M)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total

def run(names, rows_txt, t, form_coeffs_txt, l, pert=None, eps=None, tau=1, mode="both", label=""):
    t0 = time.time()
    R = ring(*names)
    P = lambda s: parse_polynomial(s, R)
    N = len(names)
    F = [[P(e) for e in row] for row in rows_txt]
    if pert:
        F = [
            [F[i][j] + Polynomial.constant(R, Fraction(eps) * pert[i][j]) for j in range(len(F[0]))]
            for i in range(len(F))
        ]
    m, n = len(F), len(F[0])
    minors = [
        det(rs, cs, F)
        for rs in itertools.combinations(range(m), t)
        for cs in itertools.combinations(range(n), t)
    ]
    minors = [q for q in minors if not q.is_zero()]
    GI = buchberger(ideal(R, *minors))
    dimX = krull_dimension(GI)
    c = N - dimX
    print(f"[{label}] N={N} dim={dimX} c={c}", flush=True)
    w = [P(s) for s in form_coeffs_txt]
    wt = [w[i] + Polynomial.constant(R, Fraction(tau) * l[i]) for i in range(N)]
    jac = [[q.partial_derivative(i) for i in range(N)] for q in minors]

    def kdims(row, tag):
        aug = jac + [row]
        K = list(minors)
        size = c + 1
        for rs in itertools.combinations(range(len(aug)), size):
            for cs in itertools.combinations(range(N), size):
                q = det(rs, cs, aug)
                if not q.is_zero():
                    K.append(q)
        print(f"  [{tag}] K gens {len(K)} t={time.time()-t0:.1f}", flush=True)
        G = buchberger(ideal(R, *K))
        gd = staircase_dimension(G)
        print(f"  [{tag}] global={gd} t={time.time()-t0:.1f}", flush=True)
        S = mora_standard_basis(ideal(R, *G.elements))
        ld = staircase_dimension(S)
        print(f"  [{tag}] local={ld} t={time.time()-t0:.1f}", flush=True)
        return gd.count, ld.count

    dl = [Polynomial.constant(R, x) for x in l]
    g1, l1 = kdims(wt, "form")
    g2, l2 = kdims(dl, "dl")
    print(f"[{label}] form: {g1}-{l1}={g1-l1}  dl: {g2}-{l2}={g2-l2}  total {time.time()-t0:.1f}s", flush=True)

if __name__ == "__main__":
    which = sys.argv[1]
    if which == "hankel":
        run(
            ["x1", "x2", "x3", "x4", "x5"],
            [["x1", "x2", "x3", "x4"], ["x2", "x3", "x4", "x5"]],
            2,
            ["3*x1^2", "x3", "x2", "0", "1"],  # df for f = x1^3 + x5 + x2*x3
            [2, 5, 3, -5, -7],
            pert=[[0, 0, 0, 0], [0, 0, -1, 0]],
            eps="1/100",
            label="hankel",
        )
    elif which == "sym":
        run(
            ["x1", "x2", "x3", "x4", "x5"],
            [["x1", "x2", "x3"], ["x2", "x3", "x4"], ["x3", "x4", "x5"]],
            2,
            ["3*x1^2", "x3", "x2", "0", "1"],
            [2, 5, 3, -5, -7],
            pert=[[0, 0, 0], [0, -1, 0], [0, 0, 0]],
            eps="1/4",
            label="sym",
        )
    elif which == "gen24":
        run(
            ["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"],
            [["x1", "x2", "x3", "x4"], ["x5", "x6", "x7", "x8"]],
            2,
            # df for f = x1^2 + 3 x2^2 x3 + x6^3 - x7^4
            ["2*x1", "6*x2*x3", "3*x2^2", "0", "0", "3*x6^2", "-4*x7^3", "0"],
            [2, 5, 3, -5, -7, 11, -8, 3],
            label="gen24",
        )
