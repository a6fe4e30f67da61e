"""Dense reference implementation of the classical Drinfeld double D(H) = H*^cop-op # H.

Works on plain nested lists of Fractions and shares no code with the package beyond reading
the structure constants of H.  Element xi # h is a dense vector of length n*n, with
delta_j # e_i at position j*n + i.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product


def _zeros(*shape):
    if len(shape) == 1:
        return [Fraction(0)] * shape[0]
    return [_zeros(*shape[1:]) for _ in range(shape[0])]


def _invert(M):
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


class ClassicalDouble:
    def __init__(self, H):
        e = H.group.identity
        n = self.n = H.dims[e]
        # m[i][j][k]: coefficient of e_k in e_i e_j
        self.m = _zeros(n, n, n)
        for (i, j), w in H.mult[e].table.items():
            for k, c in w.items():
                self.m[i][j][k] = Fraction(c)
        self.one = _zeros(n)
        for i, c in H.unit[e].items():
            self.one[i] = Fraction(c)
        # d[i][p][q]: coefficient of e_p (x) e_q in Delta(e_i)
        self.d = _zeros(n, n, n)
        for i, row in enumerate(H.comult[(e, e)].rows):
            for (p, q), c in row.items():
                self.d[i][p][q] = Fraction(c)
        self.eps = [Fraction(H.counit.get(i, 0)) for i in range(n)]
        # S[i][k]: coefficient of e_k in S(e_i)
        self.S = _zeros(n, n)
        for i, col in enumerate(H.antipode[e].cols):
            for k, c in col.items():
                self.S[i][k] = Fraction(c)
        self.Sinv = _invert(self.S)

    # ---- H-level helpers on dense vectors

    def hmul(self, u, v):
        n = self.n
        out = _zeros(n)
        for i, j in product(range(n), range(n)):
            if u[i] and v[j]:
                for k in range(n):
                    out[k] += u[i] * v[j] * self.m[i][j][k]
        return out

    def unit_vec(self, i):
        v = _zeros(self.n)
        v[i] = Fraction(1)
        return v

    def apply(self, M, v):
        out = _zeros(self.n)
        for i, c in enumerate(v):
            if c:
                for k in range(self.n):
                    out[k] += c * M[i][k]
        return out

    def delta2(self, i):
        """Delta^2(e_i) as a dict (a, b, c) -> coefficient."""
        out = {}
        n = self.n
        for p, q in product(range(n), range(n)):
            x = self.d[i][p][q]
            if x:
                for a, b in product(range(n), range(n)):
                    y = self.d[p][a][b]
                    if y:
                        out[(a, b, q)] = out.get((a, b, q), 0) + x * y
        return out

    # ---- functionals are dense vectors of values on the basis

    def conv_op(self, xi, eta):
        """(xi eta)(c) = xi(c_(2)) eta(c_(1))."""
        n = self.n
        return [sum(xi[q] * eta[p] * self.d[c][p][q] for p in range(n) for q in range(n)) for c in range(n)]

    def coadjoint(self, xi, h1, h3):
        """c -> xi(S(h1) c h3) for basis indices h1, h3."""
        s = self.apply(self.S, self.unit_vec(h1))
        out = []
        for c in range(self.n):
            v = self.hmul(self.hmul(s, self.unit_vec(c)), self.unit_vec(h3))
            out.append(sum(x * y for x, y in zip(xi, v)))
        return out

    # ---- the double

    def elem(self, xi, h):
        n = self.n
        out = _zeros(n * n)
        for j, i in product(range(n), range(n)):
            out[j * n + i] += xi[j] * h[i]
        return out

    def mul_basis(self, a, b):
        n = self.n
        j, i = divmod(a, n)
        j2, i2 = divmod(b, n)
        out = _zeros(n * n)
        for (p, q, r), c in self._delta2(i).items():
            left = self._twist(j, j2, p, r)
            right = self.m[q][i2]
            for s, x in enumerate(left):
                if x:
                    for t, y in enumerate(right):
                        if y:
                            out[s * n + t] += c * x * y
        return out

    @lru_cache(maxsize=None)
    def _delta2(self, i):
        return self.delta2(i)

    @lru_cache(maxsize=None)
    def _twist(self, j, j2, p, r):
        """delta_j . (c -> delta_j2(S(e_p) c e_r)) under the opposite convolution."""
        return tuple(self.conv_op(self.unit_vec(j), self.coadjoint(self.unit_vec(j2), p, r)))

    def mul(self, u, v):
        out = _zeros(self.n ** 2)
        for a, x in enumerate(u):
            if x:
                for b, y in enumerate(v):
                    if y:
                        for k, z in enumerate(self.mul_basis(a, b)):
                            out[k] += x * y * z
        return out

    def comult(self, idx):
        """Dense (n^2 x n^2) coefficient table of Delta(delta_j # e_i)."""
        n = self.n
        N = n * n
        j, i = divmod(idx, n)
        out = _zeros(N, N)
        for p, q in product(range(n), range(n)):
            c = self.m[p][q][j]
            if not c:
                continue
            for a, b in product(range(n), range(n)):
                x = self.d[i][a][b]
                if x:
                    out[p * n + a][q * n + b] += c * x
        return out

    def counit(self, idx):
        j, i = divmod(idx, self.n)
        return self.one[j] * self.eps[i]

    def _antipode(self, idx, on_h, on_xi):
        n = self.n
        j, i = divmod(idx, n)
        # (delta_j o f)(e_c) is the e_j-coefficient of f(e_c)
        xi_new = [on_xi[c][j] for c in range(n)]
        left = self.elem(self.eps, self.apply(on_h, self.unit_vec(i)))
        right = self.elem(xi_new, self.one)
        return self.mul(left, right)

    def antipode(self, idx):
        """(eps # S(h)) (xi o S^-1 # 1)."""
        return self._antipode(idx, self.S, self.Sinv)

    def twisted(self, idx):
        """(eps # S^-1(h)) (xi o S # 1)."""
        return self._antipode(idx, self.Sinv, self.S)

    def R(self):
        """sum_i (delta_i # 1) (x) (eps # e_i) as a dense N x N table."""
        n = self.n
        N = n * n
        out = _zeros(N, N)
        for i in range(n):
            left = self.elem(self.unit_vec(i), self.one)
            right = self.elem(self.eps, self.unit_vec(i))
            for a, x in enumerate(left):
                if x:
                    for b, y in enumerate(right):
                        if y:
                            out[a][b] += x * y
        return out
