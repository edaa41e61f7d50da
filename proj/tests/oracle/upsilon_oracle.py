"""Independent reference for the bigraded complex, written against sympy.

Bases differ from the C++ library on purpose: cycles come from a rational
nullspace of the incidence matrix, cochain classes are stored as functionals
on that cycle basis, and the projection onto ker<., e> uses a different
complement. Only basis-independent quantities (ranks, filtration dimensions)
are meant to be compared.
"""
import itertools
import json
import sys

import sympy as sp


def parse(doc):
    g = json.loads(doc) if isinstance(doc, str) else doc
    index = {v: i for i, v in enumerate(g["vertices"])}
    return len(g["vertices"]), [(index[t], index[h]) for _, t, h in g["edges"]]


def connected(n, edges, alive):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for e in alive:
        a, b = find(edges[e][0]), find(edges[e][1])
        parent[a] = b
    return len({find(v) for v in range(n)}) == 1


def cycle_space(n, edges, alive):
    """Columns: a basis of H_1 of the subgraph, as vectors over all edges."""
    alive = sorted(alive)
    B = sp.zeros(n, len(alive))
    for c, e in enumerate(alive):
        t, h = edges[e]
        if t != h:
            B[h, c] += 1
            B[t, c] -= 1
    basis = []
    for v in B.nullspace():
        full = [sp.Integer(0)] * len(edges)
        for c, e in enumerate(alive):
            full[e] = v[c]
        basis.append(full)
    return basis


class Space:
    """HH of the subgraph with edges `alive`: cycles z_0..z_{b-1}, then the
    dual functionals w_0..w_{b-1} (w_j(z_i) = delta_ij)."""

    def __init__(self, n, edges, alive):
        self.alive = frozenset(alive)
        self.cycles = cycle_space(n, edges, alive)
        self.b = len(self.cycles)

    def cycle_coords(self, vec):
        M = sp.Matrix(self.cycles).T
        sol = M.solve_least_squares(sp.Matrix(vec)) if self.b else sp.zeros(0, 1)
        assert M * sol == sp.Matrix(vec)
        return list(sol)


def wedge_mul(terms, vec):
    """(sum c*x_S) ^ (sum a_j x_j) with S sorted tuples."""
    out = {}
    for S, c in terms.items():
        for j, a in enumerate(vec):
            if a == 0 or j in S:
                continue
            sign = (-1) ** sum(1 for s in S if s > j)
            T = tuple(sorted(S + (j,)))
            out[T] = out.get(T, 0) + sign * c * a
    return {k: v for k, v in out.items() if v != 0}


def edge_map(src, dst, e, l):
    """Matrix of d_e on wedge^l, columns/rows indexed by sorted tuples."""
    b, bt = src.b, dst.b
    alpha = [src.cycles[i][e] for i in range(b)] + [0] * b
    # complement vector: the last basis cycle meeting e
    star = max(i for i in range(b) if alpha[i] != 0)
    proj = []
    for k in range(2 * b):
        v = [sp.Integer(0)] * (2 * b)
        v[k] = sp.Integer(1)
        if alpha[k] != 0:
            v[star] -= sp.Rational(alpha[k], alpha[star])
        proj.append(v)
    # images in dst coordinates of the basis of ker alpha's ambient
    image = []
    for k in range(2 * b):
        vec = proj[k]
        cyc = [sum(vec[i] * src.cycles[i][f] for i in range(b)) for f in range(len(src.cycles[0]) if b else 0)]
        out = [sp.Integer(0)] * (2 * bt)
        if bt:
            cc = dst.cycle_coords(cyc)
            out[:bt] = cc
            # functional part: w = sum vec[b+j] w_j restricted to dst cycles
            for j in range(bt):
                z = dst.cycles[j]
                zc = src.cycle_coords(z)
                out[bt + j] = sum(vec[b + i] * zc[i] for i in range(b))
        image.append(out)
    rows = list(itertools.combinations(range(2 * bt), l - 1))
    cols = list(itertools.combinations(range(2 * b), l))
    M = sp.zeros(len(rows), len(cols))
    rindex = {r: i for i, r in enumerate(rows)}
    for c, S in enumerate(cols):
        for pos, s in enumerate(S):
            if alpha[s] == 0:
                continue
            terms = {(): sp.Integer((-1) ** pos * alpha[s])}
            for r in S:
                if r != s:
                    terms = wedge_mul(terms, image[r])
            for T, v in terms.items():
                M[rindex[T], c] += v
    return M


class Complex:
    def __init__(self, n, edges):
        self.n, self.edges = n, edges
        E = range(len(edges))
        self.summands = []
        for k in range(len(edges) + 1):
            for J in itertools.combinations(E, k):
                alive = [e for e in E if e not in J]
                if connected(n, edges, alive):
                    self.summands.append((frozenset(J), Space(n, edges, alive)))
        self.index = {J: s for s, (J, _) in enumerate(self.summands)}
        self.cells = {}
        for s, (J, sp_) in enumerate(self.summands):
            for l in range(2 * sp_.b + 1):
                i, m = 2 * len(J) + l, 2 * len(J) + 2 * l
                cell = self.cells.setdefault((i, m), [])
                cell.append((s, l, len(list(itertools.combinations(range(2 * sp_.b), l)))))

    def offsets(self, i, m):
        off, out = 0, {}
        for s, l, size in self.cells.get((i, m), []):
            out[s] = (off, size)
            off += size
        return out, off

    def differential(self, i, m):
        src, ns = self.offsets(i, m)
        dst, nd = self.offsets(i + 1, m)
        D = sp.zeros(nd, ns)
        for s, (off, size) in src.items():
            J, space = self.summands[s]
            l = m - i
            if l == 0:
                continue
            for e in space.alive:
                alive = space.alive - {e}
                if not connected(self.n, self.edges, alive):
                    continue
                t = self.index[J | {e}]
                if t not in dst:
                    continue
                toff, _ = dst[t]
                D[toff:toff + dst[t][1], off:off + size] += edge_map(space, self.summands[t][1], e, l)
        return D

    def ranks(self):
        out = {}
        for (i, m) in sorted(self.cells):
            _, n = self.offsets(i, m)
            dout = self.differential(i, m).rank() if n else 0
            din = self.differential(i - 1, m).rank() if (i - 1, m) in self.cells else 0
            if n - dout - din:
                out[(i, m)] = n - dout - din
        return out

    def single_summand_classes(self, i, m):
        """dim of (sum over summands of cocycles supported on that summand + B) / B."""
        src, n = self.offsets(i, m)
        d = self.differential(i, m)
        B = self.differential(i - 1, m) if (i - 1, m) in self.cells else sp.zeros(n, 0)
        gens = [B.col(c) for c in range(B.cols)]
        for s, (off, size) in src.items():
            for z in d[:, off:off + size].nullspace():
                full = sp.zeros(n, 1)
                full[off:off + size, 0] = z
                gens.append(full)
        total = sp.Matrix.hstack(*gens).rank() if gens else 0
        return total - (B.rank() if B.cols else 0)


if __name__ == "__main__":
    n, edges = parse(sys.stdin.read())
    c = Complex(n, edges)
    r = c.ranks()
    print(json.dumps([{"i": i, "m": m, "rank": v} for (i, m), v in sorted(r.items())]))
    if len(sys.argv) > 2:
        i, m = int(sys.argv[1]), int(sys.argv[2])
        print("single-summand classes", c.single_summand_classes(i, m))
