#!/usr/bin/env python3
"""Regenerate the bundled lattice Gram matrices under data/lattices/.

Every lattice is built from a textbook construction, reduced with an exact
LLL pass, and written as {"label": ..., "gram": [[int, ...], ...]}.

  z2      identity Gram of Z^2
  d4      Cartan matrix of D4
  e8      Cartan matrix of E8
  k12     Coxeter-Todd lattice from its Eisenstein-integer description
  leech   Leech lattice from the extended binary Golay code

Usage: python3 tools/gen_lattices.py [OUTPUT_DIR]
"""

import sys
from fractions import Fraction
from itertools import product
from pathlib import Path


def row_echelon_basis(rows):
    """Integer row reduction: returns a Z-basis of the row lattice."""
    rows = [list(r) for r in rows if any(r)]
    ncols = len(rows[0])
    basis = []
    col = 0
    while rows and col < ncols:
        live = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            pivot = live[0]
            reduced = [pivot]
            for r in live[1:]:
                q = r[col] // pivot[col]
                nr = [a - q * b for a, b in zip(r, pivot)]
                if nr[col] != 0:
                    reduced.append(nr)
                elif any(nr):
                    rest.append(nr)
            live = reduced
        if live:
            basis.append(live[0])
        rows = rest
        col += 1
    return basis


def lll(basis, form, delta=Fraction(3, 4)):
    """Exact LLL with respect to the bilinear form `form(u, v)`."""
    b = [list(v) for v in basis]
    n = len(b)

    def gso():
        mu, norms = [[Fraction(0)] * n for _ in range(n)], []
        # Gram-Schmidt carried out on coefficient vectors in the form's metric.
        g = [[Fraction(form(b[i], b[j])) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i):
                s = g[i][j] - sum(mu[j][k] * mu[i][k] * norms[k] for k in range(j))
                mu[i][j] = s / norms[j]
            norms.append(g[i][i] - sum(mu[i][k] ** 2 * norms[k] for k in range(i)))
        return mu, norms

    mu, norms = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, norms = gso()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, norms = gso()
            k = max(k - 1, 1)
    return b


def gram_of(basis, form):
    return [[form(u, v) for v in basis] for u in basis]


def det(m):
    m = [[Fraction(x) for x in row] for row in m]
    n, d = len(m), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return d


def golay_code():
    residues = {(i * i) % 23 for i in range(1, 23)}
    for support in (residues, set(range(1, 23)) - residues):
        word = [1 if i in support else 0 for i in range(23)]
        gens = []
        for s in range(23):
            w = word[-s:] + word[:-s] if s else word[:]
            gens.append(w + [sum(w) % 2])
        basis = gf2_basis(gens)
        if len(basis) != 12:
            continue
        weights = set()
        for coeffs in product((0, 1), repeat=12):
            w = [0] * 24
            for c, g in zip(coeffs, basis):
                if c:
                    w = [(a + b) % 2 for a, b in zip(w, g)]
            weights.add(sum(w))
        if weights == {0, 8, 12, 16, 24}:
            return basis
    raise RuntimeError("no Golay code found")


def gf2_basis(rows):
    rows = [r[:] for r in rows]
    basis, col = [], 0
    while rows and col < len(rows[0]):
        piv = next((r for r in rows if r[col]), None)
        if piv is not None:
            rows.remove(piv)
            rows = [[(a + b) % 2 for a, b in zip(r, piv)] if r[col] else r for r in rows]
            basis = [[(a + b) % 2 for a, b in zip(r, piv)] if r[col] else r for r in basis]
            basis.append(piv)
        col += 1
    return basis


def leech():
    gens = []
    for c in golay_code():
        gens.append([2 * x for x in c])
    for i in range(24):
        v = [0] * 24
        v[i] = 8
        gens.append(v)
        for j in range(i + 1, 24):
            v = [0] * 24
            v[i] = v[j] = 4
            gens.append(v)
    gens.append([-3] + [1] * 23)
    basis = row_echelon_basis(gens)
    form = lambda u, v: Fraction(sum(a * b for a, b in zip(u, v)), 8)
    basis = lll(basis, form)
    return gram_of(basis, form)


def k12():
    # (a, b) pairs encode a + b*w with w a primitive cube root of unity.
    def form(u, v):
        s = Fraction(0)
        for k in range(6):
            a, b = u[2 * k], u[2 * k + 1]
            c, d = v[2 * k], v[2 * k + 1]
            s += a * c + b * d - Fraction(a * d + b * c, 2)
        return s

    def member(x):
        res = {(x[2 * k] + x[2 * k + 1]) % 3 for k in range(6)}
        return len(res) == 1 and sum(x[0::2]) % 3 == 0 and sum(x[1::2]) % 3 == 0

    gens = []
    for k in range(12):
        v = [0] * 12
        v[k] = 3
        gens.append(v)
    # Residue classes mod 3 that satisfy the congruences, lifted to Z^12.
    for x in product(range(3), repeat=12):
        if any(x) and member(list(x)):
            gens.append(list(x))
    basis = row_echelon_basis(gens)
    basis = lll(basis, form)
    g = gram_of(basis, form)
    scale = 2 if any(e.denominator != 1 for row in g for e in row) else 1
    return [[e * scale for e in row] for row in g]


def cartan_d4():
    return [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]


def cartan_e8():
    # Bourbaki labelling: 1-3-4-5-6-7-8 chain with 2 attached to 4.
    edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
    g = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in edges:
        g[i][j] = g[j][i] = -1
    return g


def write(out, name, label, gram):
    gram = [[int(Fraction(e)) for e in row] for row in gram]
    d = det(gram)
    path = out / f"{name}.json"
    with open(path, "w") as f:
        f.write('{\n  "label": "%s",\n  "gram": [\n' % label)
        f.write(",\n".join("    [" + ", ".join(str(e) for e in row) + "]" for row in gram))
        f.write("\n  ]\n}\n")
    print(f"{path}: dim {len(gram)}, det {d}")


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "lattices")
    out.mkdir(parents=True, exist_ok=True)
    write(out, "z2", "Z2", [[1, 0], [0, 1]])
    write(out, "d4", "D4", cartan_d4())
    write(out, "e8", "E8", cartan_e8())
    write(out, "k12", "K12", k12())
    write(out, "leech", "Leech", leech())


if __name__ == "__main__":
    main()
