"""Exact scalars, sparse vectors and the small tensor types everything else is built from.

Vectors are plain ``dict`` objects mapping a basis index (an ``int``, or a tuple of
ints for tensor products) to a nonzero scalar.  Zero coefficients are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

Vec = Dict  # index -> scalar, zeros dropped


class LinalgError(Exception):
    pass


class SingularMatrix(LinalgError):
    pass


class MissingComultiplication(LinalgError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class ModP:
    """Element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise LinalgError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return ModP(other, self.p) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} (mod {self.p})"


@dataclass(frozen=True)
class ScalarField:
    """Either the rationals (``p is None``) or the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise LinalgError(f"{self.p} is not prime")

    @classmethod
    def rationals(cls) -> "ScalarField":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "ScalarField":
        return cls(p)

    @property
    def kind(self) -> str:
        return "rational" if self.p is None else "prime"

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __call__(self, x):
        if self.p is None:
            if isinstance(x, ModP):
                raise LinalgError("prime-field element used over Q")
            return Fraction(x)
        if isinstance(x, ModP):
            if x.p != self.p:
                raise LinalgError("wrong modulus")
            return x
        if isinstance(x, Fraction):
            return ModP(x.numerator, self.p) / ModP(x.denominator, self.p)
        return ModP(int(x), self.p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, s: str):
        if self.p is None:
            return Fraction(s)
        if "/" in s:
            return self(Fraction(s))
        return ModP(int(s), self.p)

    def fmt(self, x) -> str:
        x = self(x)
        if self.p is None:
            if x.denominator == 1:
                return str(x.numerator)
            return f"{x.numerator}/{x.denominator}"
        return str(x.v)

    def spec(self) -> str:
        return "rational" if self.p is None else f"fp:{self.p}"

    @classmethod
    def from_spec(cls, s: str) -> "ScalarField":
        if s in ("rational", "Q", "rationals"):
            return cls(None)
        if s.startswith("fp:"):
            return cls(int(s[3:]))
        raise LinalgError(f"unknown field {s!r}")


# ---------------------------------------------------------------- sparse vectors

def axpy(acc: dict, c, v: dict) -> dict:
    """acc += c * v, in place; returns acc."""
    if not c:
        return acc
    for k, x in v.items():
        y = acc.get(k, 0) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def add_term(acc: dict, key, c) -> None:
    if not c:
        return
    y = acc.get(key, 0) + c
    if y:
        acc[key] = y
    else:
        acc.pop(key, None)


def scale(c, v: dict) -> dict:
    if not c:
        return {}
    out = {}
    for k, x in v.items():
        y = c * x
        if y:
            out[k] = y
    return out


def vsum(vectors: Iterable[dict]) -> dict:
    acc: dict = {}
    for v in vectors:
        axpy(acc, 1, v)
    return acc


def basis_vec(i, one=1) -> dict:
    return {i: one}


def tensor_vec(u: dict, v: dict) -> dict:
    """u (x) v with keys flattened into tuples."""
    out = {}
    for i, a in u.items():
        ki = i if isinstance(i, tuple) else (i,)
        for j, b in v.items():
            kj = j if isinstance(j, tuple) else (j,)
            y = a * b
            if y:
                out[ki + kj] = y
    return out


def evaluate(xi: dict, c: dict):
    """Pairing of a dual vector (same index set) with a vector."""
    total = 0
    for i, a in xi.items():
        b = c.get(i)
        if b is not None:
            total = total + a * b
    return total


def vec_equal(u: dict, v: dict) -> bool:
    if u.keys() != v.keys():
        return False
    return all(u[k] == v[k] for k in u)


# ---------------------------------------------------------------- spaces


@dataclass(frozen=True)
class Space:
    label: str
    basis: Tuple

    def __post_init__(self):
        if len(set(self.basis)) != len(self.basis):
            raise LinalgError(f"basis names of {self.label!r} are not unique")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def of_dim(cls, label: str, n: int) -> "Space":
        return cls(label, tuple(f"e{i}" for i in range(n)))


def _flat(name) -> tuple:
    return name if isinstance(name, tuple) else (name,)


def tensor_space(U: Space, V: Space) -> Space:
    """Row-major tensor product: index (i, j) sits at i * dim V + j."""
    names = tuple(_flat(a) + _flat(b) for a in U.basis for b in V.basis)
    return Space(f"{U.label}⊗{V.label}", names)


@dataclass(frozen=True)
class DualBasis:
    """Canonical dual basis of a space: the pairs (delta_i, e_i)."""

    space: Space

    @property
    def pairs(self) -> List[Tuple[dict, dict]]:
        return [({i: 1}, {i: 1}) for i in range(self.space.dim)]

    def reconstruct_vector(self, c: dict) -> dict:
        return vsum(scale(evaluate(d, c), e) for d, e in self.pairs)

    def reconstruct_functional(self, xi: dict) -> dict:
        return vsum(scale(evaluate(xi, e), d) for d, e in self.pairs)


def dual_basis(V: Space) -> DualBasis:
    return DualBasis(V)


# ---------------------------------------------------------------- maps and tensors


@dataclass
class LinMap:
    """Linear map stored column-wise: ``cols[j]`` is the image of basis vector j."""

    n_in: int
    n_out: int
    cols: List[dict]

    def __post_init__(self):
        if len(self.cols) != self.n_in:
            raise LinalgError("column count does not match the domain dimension")
        for col in self.cols:
            for i in col:
                if not 0 <= i < self.n_out:
                    raise LinalgError(f"row index {i} out of bounds")

    @classmethod
    def from_entries(cls, n_in, n_out, entries: Dict[Tuple[int, int], object]):
        cols = [dict() for _ in range(n_in)]
        for (i, j), c in entries.items():
            add_term(cols[j], i, c)
        return cls(n_in, n_out, cols)

    @classmethod
    def identity(cls, n, one=1):
        return cls(n, n, [{i: one} for i in range(n)])

    @classmethod
    def zero(cls, n_in, n_out):
        return cls(n_in, n_out, [dict() for _ in range(n_in)])

    def entries(self) -> Dict[Tuple[int, int], object]:
        return {(i, j): c for j, col in enumerate(self.cols) for i, c in col.items()}

    def __call__(self, v: dict) -> dict:
        acc: dict = {}
        for j, c in v.items():
            axpy(acc, c, self.cols[j])
        return acc

    def compose(self, first: "LinMap") -> "LinMap":
        """self ∘ first."""
        if first.n_out != self.n_in:
            raise LinalgError("dimension mismatch in composition")
        return LinMap(first.n_in, self.n_out, [self(col) for col in first.cols])

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.n_in, self.n_out) == (other.n_in, other.n_out) and all(
            vec_equal(a, b) for a, b in zip(self.cols, other.cols)
        )

    def is_identity(self) -> bool:
        return self.n_in == self.n_out and all(
            vec_equal(col, {j: 1}) for j, col in enumerate(self.cols)
        )

    def inverse(self, field: ScalarField) -> "LinMap":
        """Gauss-Jordan inverse; raises SingularMatrix."""
        n = self.n_in
        if n != self.n_out:
            raise SingularMatrix("non-square map")
        # rows of the augmented matrix [A | I]
        rows = [dict() for _ in range(n)]
        for j, col in enumerate(self.cols):
            for i, c in col.items():
                rows[i][j] = field(c)
        for i in range(n):
            rows[i][n + i] = field.one
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r].get(col)), None)
            if piv is None:
                raise SingularMatrix(f"no pivot in column {col}")
            rows[col], rows[piv] = rows[piv], rows[col]
            inv = field.one / rows[col][col]
            rows[col] = scale(inv, rows[col])
            for r in range(n):
                if r != col and rows[r].get(col):
                    axpy(rows[r], -rows[r][col], rows[col])
        cols = [dict() for _ in range(n)]
        for i in range(n):
            for k, c in rows[i].items():
                if k >= n:
                    cols[k - n][i] = c
        return LinMap(n, n, cols)


@dataclass
class MultTensor:
    """Bilinear map U x V -> W: ``table[(i, j)]`` is the W-vector of u_i * v_j."""

    dims: Tuple[int, int, int]
    table: Dict[Tuple[int, int], dict] = field(default_factory=dict)

    def __post_init__(self):
        du, dv, dw = self.dims
        for (i, j), w in self.table.items():
            if not (0 <= i < du and 0 <= j < dv):
                raise LinalgError(f"index ({i}, {j}) out of bounds for {self.dims}")
            for k in w:
                if not 0 <= k < dw:
                    raise LinalgError(f"target index {k} out of bounds")
        self.table = {k: w for k, w in self.table.items() if w}

    @classmethod
    def from_entries(cls, dims, entries: Dict[Tuple[int, int, int], object]):
        table: dict = {}
        for (i, j, k), c in entries.items():
            add_term(table.setdefault((i, j), {}), k, c)
        return cls(dims, table)

    def entries(self) -> Dict[Tuple[int, int, int], object]:
        return {(i, j, k): c for (i, j), w in self.table.items() for k, c in w.items()}

    def basis(self, i: int, j: int) -> dict:
        return self.table.get((i, j), {})

    def __call__(self, u: dict, v: dict) -> dict:
        acc: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                w = self.table.get((i, j))
                if w:
                    axpy(acc, a * b, w)
        return acc

    def __eq__(self, other):
        if not isinstance(other, MultTensor):
            return NotImplemented
        if self.dims != other.dims or self.table.keys() != other.table.keys():
            return False
        return all(vec_equal(self.table[k], other.table[k]) for k in self.table)


@dataclass
class CoTensor:
    """Linear map V -> W1 (x) ... (x) Wr: ``rows[i]`` maps tuples of target indices to scalars.

    Used for comultiplications and coactions, always in the analysis direction.
    """

    n_in: int
    targets: Tuple[int, ...]
    rows: List[dict]

    def __post_init__(self):
        if len(self.rows) != self.n_in:
            raise LinalgError("row count does not match the source dimension")
        r = len(self.targets)
        for row in self.rows:
            for key in row:
                if len(key) != r or not all(0 <= a < d for a, d in zip(key, self.targets)):
                    raise LinalgError(f"target index {key} out of bounds for {self.targets}")
        self.rows = [{k: c for k, c in row.items() if c} for row in self.rows]

    @classmethod
    def from_entries(cls, n_in, targets, entries: Dict[tuple, object]):
        rows = [dict() for _ in range(n_in)]
        for key, c in entries.items():
            add_term(rows[key[0]], tuple(key[1:]), c)
        return cls(n_in, tuple(targets), rows)

    def entries(self) -> Dict[tuple, object]:
        return {(i,) + k: c for i, row in enumerate(self.rows) for k, c in row.items()}

    def __call__(self, v: dict) -> dict:
        acc: dict = {}
        for i, c in v.items():
            axpy(acc, c, self.rows[i])
        return acc

    def __eq__(self, other):
        if not isinstance(other, CoTensor):
            return NotImplemented
        return (self.n_in, self.targets) == (other.n_in, other.targets) and all(
            vec_equal(a, b) for a, b in zip(self.rows, other.rows)
        )


def apply_on_factor(t: dict, pos: int, fn) -> dict:
    """Apply a linear map (basis index -> vector) to tensor factor ``pos`` of ``t``.

    ``fn(i)`` returns a dict whose keys are ints or tuples; tuple images splice in.
    """
    acc: dict = {}
    for key, c in t.items():
        img = fn(key[pos])
        for k2, c2 in img.items():
            k2 = k2 if isinstance(k2, tuple) else (k2,)
            add_term(acc, key[:pos] + k2 + key[pos + 1:], c * c2)
    return acc


def opposite_convolution(comult: CoTensor | None, xi: dict, xi2: dict) -> dict:
    """(xi xi')(c) = xi(c_(2)) xi'(c_(1)).

    ``comult`` splits the target component into (domain of xi') (x) (domain of xi).
    """
    if comult is None:
        raise MissingComultiplication("the required comultiplication component is absent")
    out = {}
    for k, row in enumerate(comult.rows):
        total = 0
        for (i, j), c in row.items():
            a = xi.get(j)
            b = xi2.get(i)
            if a is not None and b is not None:
                total = total + c * a * b
        if total:
            out[k] = total
    return out


def mat_from_rows(rows: Sequence[Sequence]) -> LinMap:
    """Build a LinMap from a dense row-major matrix (row i = coefficient of output i)."""
    n_out = len(rows)
    n_in = len(rows[0]) if rows else 0
    entries = {(i, j): c for i, row in enumerate(rows) for j, c in enumerate(row) if c}
    return LinMap.from_entries(n_in, n_out, entries)


def rank(vectors: Sequence[dict], field: ScalarField) -> int:
    """Rank of a list of sparse vectors by row reduction."""
    pivots: Dict[object, dict] = {}
    for v in vectors:
        w = {k: field(c) for k, c in v.items() if c}
        for k, row in pivots.items():
            if w.get(k):
                axpy(w, -w[k], row)
        if not w:
            continue
        k = min(w, key=lambda t: (str(type(t)), t))
        w = scale(field.one / w[k], w)
        for k2, row in pivots.items():
            if row.get(k):
                axpy(row, -row[k], w)
        pivots[k] = w
    return len(pivots)
