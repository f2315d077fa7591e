"""Independent sympy computations for the frozen values in the unit tests.

Run: python3 tests/oracles/oracle.py
Nothing here shares code with the C++ library.
"""

import itertools
import json

import sympy as sp


class Alg:
    def __init__(self, n, rel):
        # rel: {(i, j): {k: c}} 1-based, i < j
        self.n = n
        self.c = {}
        for (i, j), v in rel.items():
            vec = sp.zeros(n, 1)
            for k, c in v.items():
                vec[k - 1] += sp.Rational(c)
            self.c[(i, j)] = vec
            self.c[(j, i)] = -vec

    def br(self, x, y):
        out = sp.zeros(self.n, 1)
        for i in range(self.n):
            for j in range(self.n):
                if x[i] != 0 and y[j] != 0 and (i + 1, j + 1) in self.c:
                    out += x[i] * y[j] * self.c[(i + 1, j + 1)]
        return out

    def e(self, i):
        v = sp.zeros(self.n, 1)
        v[i - 1] = 1
        return v

    def ad(self, x):
        return sp.Matrix.hstack(*[self.br(x, self.e(k)) for k in range(1, self.n + 1)])


def Ln(n):
    return Alg(n, {(1, i): {i + 1: 1} for i in range(2, n)})


def jacobi_first_failure(g):
    for i, j, k in itertools.combinations(range(1, g.n + 1), 3):
        X, Y, Z = g.e(i), g.e(j), g.e(k)
        r = g.br(g.br(X, Y), Z) + g.br(g.br(Y, Z), X) + g.br(g.br(Z, X), Y)
        if r != sp.zeros(g.n, 1):
            return [i, j, k], [str(t) for t in r]
    return None


def span_rref(vectors, n):
    if not vectors:
        return []
    m = sp.Matrix.hstack(*vectors).T.rref()[0]
    return [[str(m[r, c]) for c in range(n)] for r in range(m.rows) if any(m[r, c] != 0 for c in range(n))]


def lcs(g):
    cur = [g.e(i) for i in range(1, g.n + 1)]
    out = [span_rref(cur, g.n)]
    while True:
        nxt = [g.br(g.e(i), v) for i in range(1, g.n + 1) for v in cur]
        nxt = [v for v in nxt if v != sp.zeros(g.n, 1)]
        rows = span_rref(nxt, g.n)
        out.append(rows)
        if not rows:
            break
        cur = [sp.Matrix(r).applyfunc(sp.Rational) for r in rows]
    return out


def nabla(g, G, x, y):
    n = g.n
    rhs = sp.zeros(n, 1)
    for k in range(1, n + 1):
        z = g.e(k)
        ip = lambda a, b: (a.T * G * b)[0]
        rhs[k - 1] = ip(g.br(x, y), z) + ip(g.br(z, x), y) + ip(g.br(z, y), x)
    return G.inv() * rhs / 2


def defect(g, G, y):
    alpha = sp.Matrix([(g.br(g.e(k), y).T * G * y)[0] for k in range(1, g.n + 1)])
    return G.inv() * alpha


def vec(v):
    return [str(t) for t in v]


def main():
    out = {}
    # dim6 Jacobi and an injected failure
    dim6 = Alg(6, {**{(1, i): {i + 1: 1} for i in range(2, 6)}, (2, 3): {6: -1}})
    out["dim6_jacobi"] = jacobi_first_failure(dim6)
    broken = Alg(4, {(1, 2): {3: 1}, (1, 3): {4: 1}, (2, 3): {3: 1}})
    out["broken_L4_jacobi"] = jacobi_first_failure(broken)
    out["L4_lcs"] = lcs(Ln(4))
    out["L3_ad_X1_rank"] = Ln(3).ad(Ln(3).e(1)).rank()
    out["dim6_adX1_4_X2"] = vec((dim6.ad(dim6.e(1)) ** 4) * dim6.e(2))

    # direct sum L3 + R: centre dimension
    L3R = Alg(4, {(1, 2): {3: 1}})
    centre = sp.Matrix.vstack(*[L3R.ad(L3R.e(i)) for i in range(1, 5)]).nullspace()
    out["L3_plus_R_center_dim"] = len(centre)

    # Levi-Civita on L3
    L3 = Ln(3)
    I3 = sp.eye(3)
    out["L3_nabla_X1_X2"] = vec(nabla(L3, I3, L3.e(1), L3.e(2)))
    out["L3_nabla_X1_X1"] = vec(nabla(L3, I3, L3.e(1), L3.e(1)))

    # so(3) with diag(1,2,3)
    so3 = Alg(3, {(1, 2): {3: 1}, (2, 3): {1: 1}, (1, 3): {2: -1}})
    G = sp.diag(1, 2, 3)
    out["so3_diag123_defects"] = [vec(defect(so3, G, so3.e(i))) for i in (1, 2, 3)]
    out["so3_killing"] = [[str(sp.trace(-so3.ad(so3.e(i)) * so3.ad(so3.e(j)))) for j in (1, 2, 3)] for i in (1, 2, 3)]

    # solvable exp: f(Y)
    sexp = Alg(3, {(1, 2): {2: 1}, (1, 3): {3: -1}})
    out["solv_exp_defect_Y"] = vec(defect(sexp, sp.eye(3), sexp.e(2)))
    out["solv_exp_nabla_Y_Y"] = vec(nabla(sexp, sp.eye(3), sexp.e(2), sexp.e(2)))

    # L4: h = span(X2,X3) TG value for X1
    L4 = Ln(4)
    ip = lambda a, b: (a.T * b)[0]
    X1, X2, X3 = L4.e(1), L4.e(2), L4.e(3)
    out["L4_tg_value_X1_X2_X3"] = str(ip(L4.br(X1, X2), X3) + ip(L4.br(X1, X3), X2))

    # L3 bi-invariance failure value
    out["L3_biinv_value"] = str(ip(L3.br(L3.e(1), L3.e(2)), L3.e(3)) + ip(L3.br(L3.e(1), L3.e(3)), L3.e(2)))

    # Gram-Schmidt downward on L4 with <X2,X3> = 1/2
    G = sp.eye(4)
    G[1, 2] = G[2, 1] = sp.Rational(1, 2)
    B = [L4.e(i) for i in range(1, 5)]
    E = [None] * 4
    for i in reversed(range(4)):
        v = B[i]
        for j in range(i + 1, 4):
            v = v - (B[i].T * G * E[j])[0] / (E[j].T * G * E[j])[0] * E[j]
        E[i] = v
    out["L4_gs_half"] = [vec(v) for v in E]

    # cd2f at n = 5
    n = 5
    Ecd = {1: Ln(n).e(1), n: Ln(n).e(n)}
    for i in range(2, n):
        v = sp.zeros(n, 1)
        for j in range((n - 1 - i) // 2 + 1):
            v[i + 2 * j - 1] += sp.binomial(n - 1 - i - j, j)
        Ecd[i] = v
    M = sp.Matrix.hstack(*[Ecd[i] for i in range(1, n + 1)]).T
    Gcd = M.inv() * M.inv().T
    Y = [Ecd[i] if (n - i) % 2 == 0 else Ecd[i] - Ecd[n - 1] for i in list(range(2, n - 1)) + [n]]
    perp = (sp.Matrix.hstack(*Y).T * Gcd).nullspace()
    out["cd2f5_E"] = [vec(Ecd[i]) for i in range(1, n + 1)]
    out["cd2f5_h_rref"] = span_rref(Y, n)
    out["cd2f5_perp_rref"] = span_rref(perp, n)
    out["cd2f5_expected_perp_rref"] = span_rref([Ecd[1], Ecd[2] + Ecd[4]], n)
    out["cd2f5_gram"] = [[str(Gcd[r, c]) for c in range(n)] for r in range(n)]

    # L_C rescaling for C = (2,3,4)
    f = {2: sp.Integer(1)}
    C = {2: 2, 3: 3, 4: 4}
    for i in range(2, 5):
        f[i + 1] = sp.Rational(C[i]) / f[i]
    out["LC_234_f"] = [str(f[i]) for i in range(2, 6)]

    # irreg6 generated subalgebra and maximal nilpotency of X1 - X2
    irr = Alg(6, {**{(1, i): {i + 1: 1} for i in range(2, 6)}, (2, 5): {6: 1}, (3, 4): {6: -1}})
    E1 = irr.e(1) - irr.e(2)
    out["irreg6_ad_E1_4_rank"] = (irr.ad(E1) ** 4).rank()
    gens = [E1, irr.e(3), irr.e(4)]
    cur = span_rref(gens, 6)
    while True:
        vs = [sp.Matrix(r).applyfunc(sp.Rational) for r in cur]
        more = vs + [irr.br(a, b) for a in vs for b in vs]
        nxt = span_rref(more, 6)
        if nxt == cur:
            break
        cur = nxt
    out["irreg6_generated_E1E3E4"] = cur

    # 4-dim normal form on L4 with Gram diag(1,4,1,1): normalized squares
    n1, n2, n3, n4 = 1, 4, 1, 1
    out["L4_diag1411_alpha_sq"] = str(sp.Rational(1) * n3 / (n1 * n2))
    out["L4_diag1411_gamma_sq"] = str(sp.Rational(1) * n4 / (n1 * n3))

    # Killing form of sl2 (indefinite)
    sl2 = Alg(3, {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}})
    out["sl2_killing"] = [[str(sp.trace(sl2.ad(sl2.e(i)) * sl2.ad(sl2.e(j)))) for j in (1, 2, 3)] for i in (1, 2, 3)]

    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
