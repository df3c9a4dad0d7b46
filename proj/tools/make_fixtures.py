"""Regenerates the scenario corpus in fixtures/ (run from the repository root)."""

import itertools
import json
from pathlib import Path

import sympy as sp


def terms(expr, gens):
    poly = sp.Poly(sp.expand(expr), *gens)
    out = []
    for exps, c in sorted(poly.terms(), key=lambda t: (sum(t[0]), t[0])):
        c = sp.Rational(c)
        out.append({"coeff": f"{c.p}/{c.q}" if c.q != 1 else str(c.p), "exponents": list(exps)})
    return out


def monomial(exps, coeff="1"):
    return [{"coeff": coeff, "exponents": list(exps)}]


def residue(variables, num, den, gens):
    return {"variables": variables, "numerator": terms(num, gens), "denominator": terms(den, gens)}


def scenario(name, points, triangulation, mode, poly, order, **extra):
    s = {
        "name": name,
        "lattice_dim": len(points[0]),
        "points": points,
        "triangulation": triangulation,
        "polynomial": {"mode": mode, "terms": poly},
        "order": order,
    }
    s.update(extra)
    return s


y1, y2 = sp.symbols("y1 y2")
u1, u2 = sp.symbols("u1 u2")
a = sp.symbols("a1:6")


def hirzebruch():
    pts = [[-1, 1], [0, -1], [1, 0], [0, 1]]
    tri = [[3, 4], [4, 1], [1, 2], [2, 3]]
    den = 1 + y1 - 8 * y2 + 16 * y2**2 - 36 * y1 * y2 - 27 * y1**2 * y2
    cases = [
        ("f1", [0, 2, 0, 0], 1 + y1 + 4 * y2 + 3 * y1 * y2),
        ("f1_x1x2", [1, 1, 0, 0], 1 + y1 - 4 * y2 - 6 * y1 * y2),
        ("f1_x1sq", [2, 0, 0, 0], y1 * (1 + 12 * y2)),
    ]
    for name, e, num in cases:
        yield name, scenario(name, pts, tri, "P", monomial(e), 4,
                             mori_generators=[[1, 0, 1, -1], [0, 1, 0, 1]],
                             expected_residue=residue("mori", num, den, (y1, y2)))


def flop():
    pts = [[1, 0, 0], [0, 1, 0], [-1, -1, 0], [0, 0, 1], [1, 1, -1]]
    tris = {
        1: [[1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5], [2, 3, 5], [2, 3, 4]],
        2: [[1, 4, 5], [2, 4, 5], [1, 3, 4], [1, 3, 5], [2, 3, 5], [2, 3, 4]],
    }
    gens = {1: [[1, 1, 1, 0, 0], [-1, -1, 0, 1, 1]], 2: [[0, 0, 1, 1, 1], [1, 1, 0, -1, -1]]}

    def m(*e):
        return sp.Mul(*[x**k for x, k in zip(a, e)])

    num = m(4, 4, 4, 3, 3) - 27 * m(5, 5, 5, 3, 3) - 81 * m(4, 4, 5, 4, 4)
    ea = (m(4, 4, 4, 3, 3) - 54 * m(5, 5, 5, 3, 3) - m(3, 3, 4, 4, 4) + 729 * m(6, 6, 6, 3, 3)
          + 54 * m(3, 3, 5, 5, 5) - 2187 * m(5, 5, 6, 4, 4) + 2187 * m(4, 4, 6, 5, 5) - 729 * m(3, 3, 6, 6, 6))
    for k in (1, 2):
        name = f"flop{k}"
        yield name, scenario(name, pts, tris[k], "P", monomial([1, 1, 0, 1, 0]), 3,
                             mori_generators=gens[k], expected_residue=residue("a", num, ea, a))


def weighted(name, w, q, mu_num, order):
    d = len(w) - 1
    v1 = [-x for x in w[1:]]
    pts = [v1] + [[1 if i == j else 0 for i in range(d)] for j in range(d)]
    tri = [list(c) for c in itertools.combinations(range(1, d + 2), d)]
    return name, scenario(name, pts, tri, "yukawa", monomial(q), order, weights=w,
                          expected_residue=residue("mori", mu_num[0], 1 - mu_num[1] * y1, (y1,)))


def blowup():
    pts = [[-1, -2, -2, -2], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, -1, -1, -1]]
    tri = [[2, 3, 4, 5], [1, 3, 4, 5], [1, 6, 4, 5], [6, 2, 4, 5],
           [1, 6, 3, 5], [6, 2, 3, 5], [1, 6, 3, 4], [6, 2, 3, 4]]
    D = (1 - 2**8 * y1) ** 2 - 2**18 * y1**2 * y2
    forms = [
        (8, D),
        (4 * (1 - 2**8 * y1), D),
        (8 * y2 * (-1 + 2**9 * y1), (1 - 4 * y2) * D),
        (4 * y2 * (1 - 2**8 * y1 + 2**2 * y2 - 2**10 * 3 * y1 * y2), (1 - 4 * y2) ** 2 * D),
    ]
    for k, (num, den) in enumerate(forms):
        name = f"P11222_blowup_k{k}"
        q = [k, 0, 3 - k, 0, 0, 0]
        yield name, scenario(name, pts, tri, "yukawa", monomial(q), 4,
                             mori_generators=[[0, 0, 1, 1, 1, 1], [1, 1, 0, 0, 0, -2]],
                             expected_residue=residue("mori", num, den, (y1, y2)))


def product_points(dims):
    d = sum(dims)
    pts, blocks, off = [], [], 0
    for n in dims:
        idx = []
        for i in range(n):
            p = [0] * d
            p[off + i] = 1
            idx.append(len(pts) + 1)
            pts.append(p)
        p = [0] * d
        for i in range(n):
            p[off + i] = -1
        idx.append(len(pts) + 1)
        pts.append(p)
        blocks.append(idx)
        off += n
    tri = []
    for skip in itertools.product(*[range(len(b)) for b in blocks]):
        tri.append([i for b, s in zip(blocks, skip) for j, i in enumerate(b) if j != s])
    gens = []
    for b in blocks:
        gens.append([1 if i + 1 in b else 0 for i in range(len(pts))])
    return pts, tri, gens, blocks


def products():
    # closed forms in u_j = (d_j + 1)^(d_j + 1) y_j
    p1p2_den = (1 - u1) ** 3 - 2 * u2 * (1 + 3 * u1) + u2**2
    p2p2_den = (1 - u1 - u2) ** 3 - 27 * u1 * u2
    cases = [
        ("p1p1", [1, 1], (1, 0), 2 * (1 + u1 - u2), (1 - u1 - u2) ** 2 - 4 * u1 * u2),
        ("p1p2_k20", [1, 2], (2, 0), sp.Rational(9, 2) * u1 * (3 + u1), p1p2_den),
        ("p1p2_k11", [1, 2], (1, 1), 3 * (1 - u2 - u1**2), p1p2_den),
        ("p1p2_k02", [1, 2], (0, 2), 2 * ((1 - u1) ** 2 + 2 * u2), p1p2_den),
        ("p2p2_k30", [2, 2], (3, 0), 9 * u1 * (2 + u1 + u2), p2p2_den),
        ("p2p2_k21", [2, 2], (2, 1), 3 * ((1 - u2) ** 2 + u1 * (1 - 2 * u1 - u2)), p2p2_den),
    ]
    for name, dims, k, num, den in cases:
        pts, tri, gens, blocks = product_points(dims)
        q = [0] * len(pts)
        for b, kj in zip(blocks, k):
            q[b[0] - 1] = kj
        sub = {u1: (dims[0] + 1) ** (dims[0] + 1) * y1, u2: (dims[1] + 1) ** (dims[1] + 1) * y2}
        yield name, scenario(name, pts, tri, "yukawa", monomial(q), 4, product_dims=dims,
                             mori_generators=gens,
                             expected_residue=residue("mori", num.subs(sub), den.subs(sub), (y1, y2)))


def dump(x, indent=0):
    pad = "  " * indent
    flat = isinstance(x, dict) and all(not isinstance(v, (dict, list)) or
                                       (isinstance(v, list) and not any(isinstance(w, (dict, list)) for w in v))
                                       for v in x.values())
    if flat:
        return pad + json.dumps(x, separators=(", ", ": ")).replace(", ", ",").replace(",\"", ", \"")
    if isinstance(x, dict):
        items = [f'{pad}  {json.dumps(k)}: {dump(v, indent + 1).lstrip()}' for k, v in x.items()]
        return pad + "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(x, list) and any(isinstance(v, (dict, list)) for v in x):
        if all(isinstance(v, list) for v in x):
            return pad + "[" + ", ".join(json.dumps(v, separators=(",", ":")) for v in x) + "]"
        return pad + "[\n" + ",\n".join(dump(v, indent + 1) for v in x) + "\n" + pad + "]"
    if isinstance(x, list):
        return pad + json.dumps(x, separators=(",", ":"))
    return pad + json.dumps(x)


def main():
    out = Path("fixtures")
    out.mkdir(exist_ok=True)
    corpus = list(hirzebruch()) + list(flop())
    corpus.append(weighted("quintic", [1, 1, 1, 1, 1], [3, 0, 0, 0, 0], (5, 5**5), 5))
    corpus.append(weighted("P11222", [1, 1, 2, 2, 2], [0, 0, 3, 0, 0], (8, 2**18), 5))
    corpus += list(blowup()) + list(products())
    for name, s in corpus:
        (out / f"{name}.json").write_text(dump(s) + "\n")
    print(f"wrote {len(corpus)} scenarios")


if __name__ == "__main__":
    main()
