"""Independent sympy oracle used to freeze expected values for the C++ tests.

Builds interpolation polynomials straight from their vanishing conditions by
solving a dense linear system; shares no code with the C++ library.
"""
import itertools
import sys

import sympy as sp

q, t, r, a = sp.symbols("q t r a")


def compositions(n, d):
    out = []
    for total in range(d + 1):
        for c in itertools.product(range(total + 1), repeat=n):
            if sum(c) == total:
                out.append(c)
    return out


def stable_rank(v):
    # position i -> rank (0-based) in the stable descending sort
    order = sorted(range(len(v)), key=lambda i: (-v[i], i))
    rank = [0] * len(v)
    for k, i in enumerate(order):
        rank[i] = k
    return rank


def bar_qt(v):
    rk = stable_rank(v)
    return [q ** v[i] * t ** (-rk[i]) for i in range(len(v))]


def bar_r(v):
    rk = stable_rank(v)
    return [v[i] - r * rk[i] for i in range(len(v))]


def tilde(v, bar):
    return bar([-x for x in reversed(v)])


def xs(n):
    return sp.symbols(" ".join(f"x{i+1}" for i in range(n)), seq=True)


def interp(alpha, bar):
    n = len(alpha)
    d = sum(alpha)
    X = xs(n)
    mons = compositions(n, d)
    cs = sp.symbols(f"c0:{len(mons)}")
    f = sum(c * sp.Mul(*[X[i] ** m[i] for i in range(n)]) for c, m in zip(cs, mons))
    eqs = [f.subs({X[i]: p for i, p in enumerate(bar(b))}) for b in mons if b != tuple(alpha)]
    eqs.append(cs[mons.index(tuple(alpha))] - 1)
    sol = sp.solve(eqs, cs, dict=True)[0]
    return sp.expand(sp.simplify(f.subs(sol)))


def interp_general(alpha, bar):
    """interp through sympy's linear solver, returning an expanded polynomial."""
    n = len(alpha)
    d = sum(alpha)
    X = xs(n)
    mons = compositions(n, d)
    cs = sp.symbols(f"c0:{len(mons)}")
    f = sum(c * sp.Mul(*[X[i] ** m[i] for i in range(n)]) for c, m in zip(cs, mons))
    eqs = [f.subs({X[i]: p for i, p in enumerate(bar(b))}) for b in mons if b != tuple(alpha)]
    eqs.append(cs[mons.index(tuple(alpha))] - 1)
    (sol,) = sp.linsolve(eqs, cs)
    return sp.expand(f.subs(dict(zip(cs, [sp.cancel(v) for v in sol]))))


def node_qt(b):
    return [1 / p for p in bar_qt(b)]


def reciprocity(alpha, variant):
    """O_alpha from its interpolation conditions, with a symbolic."""
    n = len(alpha)
    d = sum(alpha)
    X = xs(n)
    mons = compositions(n, d)
    if variant == "qt":
        shifted = [a * p for p in tilde(alpha, bar_qt)]
        base = [a * t ** (-i) for i in range(n)]
        nodes = [node_qt(b) for b in mons]
        G = [interp_general(b, bar_qt) for b in mons]
    else:
        shifted = [a + p for p in tilde(alpha, bar_r)]
        base = [a - r * i for i in range(n)]
        nodes = [bar_r(b) for b in mons]
        G = [interp_general(b, bar_r) for b in mons]

    def at(f, pt):
        return f.subs({X[i]: pt[i] for i in range(n)}, simultaneous=True)

    targets = [sp.cancel(at(g, shifted) / at(g, base)) for g in G]
    cs = sp.symbols(f"c0:{len(mons)}")
    eqs = [sum(c * sp.Mul(*[nd[i] ** m[i] for i in range(n)]) for c, m in zip(cs, mons)) - v
           for nd, v in zip(nodes, targets)]
    (sol,) = sp.linsolve(eqs, cs)
    return sp.expand(sum(sp.cancel(c) * sp.Mul(*[X[i] ** m[i] for i in range(n)]) for c, m in zip(sol, mons)))


def scalar_json(expr, gens):
    num, den = sp.fraction(sp.cancel(sp.together(expr)))

    def poly_json(p):
        out = {}
        for mon, c in sp.Poly(p, *gens).terms():
            out[",".join(str(e) for e in mon)] = str(c)
        return out

    if not (num.free_symbols | den.free_symbols):
        value = sp.Rational(num, den)
        return str(value.p) if value.q == 1 else f"{value.p}/{value.q}"
    return {"num": poly_json(num), "den": poly_json(den), "gens": [str(g) for g in gens]}


def poly_json(f, n, gens):
    X = xs(n)
    num, den = sp.fraction(sp.together(f))
    terms = []
    for mon, c in sp.Poly(sp.expand(num), *X).terms():
        terms.append({"exp": list(mon), "coeff": scalar_json(c / den, gens)})
    return {"n": n, "terms": terms}


def freeze(path):
    import json

    out = {"G": [], "O": []}
    for n, d in [(1, 3), (2, 2), (3, 1)]:
        for alpha in compositions(n, d):
            for name, bar, gens in [("qt", bar_qt, [q, t]), ("r", bar_r, [r])]:
                print("G", alpha, name, file=sys.stderr, flush=True)
                g = interp_general(alpha, bar)
                out["G"].append({"variant": name, "alpha": list(alpha), "poly": poly_json(g, n, gens)})
    for name, gens, scope in [("qt", [q, t, a], [(1, 2)]), ("r", [r, a], [(1, 2), (2, 1)])]:
        for n, d in scope:
            for alpha in compositions(n, d):
                print("O", alpha, name, file=sys.stderr, flush=True)
                o = reciprocity(alpha, name)
                out["O"].append({"variant": name, "alpha": list(alpha), "poly": poly_json(o, n, gens)})
    with open(path, "w") as fh:
        json.dump(out, fh, indent=1)
        fh.write("\n")


if __name__ == "__main__":
    if len(sys.argv) == 3 and sys.argv[1] == "--freeze":
        freeze(sys.argv[2])
        sys.exit(0)
    for alpha, bar in [((0, 1), bar_qt), ((1, 0), bar_qt), ((0, 1), bar_r), ((1, 0), bar_r)]:
        g = interp(alpha, bar)
        print(alpha, bar.__name__, sp.collect(sp.factor_terms(g), xs(2)))
    print("tilde (1,0) r:", tilde((1, 0), bar_r))
    # n = 1 reciprocity polynomial, r variant: O(x) with O(bar(b)) = G_b(a + tilde(1)) / G_b(a + rho)
    x = sp.Symbol("x")
    def G1(k, var):
        return sp.Mul(*[(var - j) for j in range(k)])
    tl = tilde((1,), bar_r)[0]
    vals = {0: sp.Integer(1), 1: sp.simplify(G1(1, a + tl) / G1(1, a))}
    c0, c1 = sp.symbols("c0 c1")
    sol = sp.solve([c0 + c1 * 0 - vals[0], c0 + c1 * 1 - vals[1]], [c0, c1])
    O = sp.simplify(sol[c0] + sol[c1] * x)
    print("O_1(x;r) n=1:", O)
    for b in (2, 3):
        print("  check b=", b, sp.simplify(O.subs(x, b) - G1(b, a + tl) / G1(b, a)))

    # Degree-two and three-variable values frozen into test_interpolation.cpp.
    for alpha in [(2, 0), (0, 2), (1, 1), (0, 0, 1)]:
        for bar in (bar_qt, bar_r):
            X = xs(len(alpha))
            print(alpha, bar.__name__, sp.collect(sp.expand(interp(alpha, bar)), X))
