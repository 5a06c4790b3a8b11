"""Sparse exact matrices over Q(q) with tensor-leg bookkeeping.

Index convention for Kronecker products: the composite index of
``(i, j)`` (0-based) in ``A (x) B`` is ``i * rows(B) + j``; in 1-based terms
``(i-1)*rows(B) + j``.  Operators act on column vectors, so the matrix of
``R(x_i (x) x_j) = x_k (x) x_l R^{kl}_{ij}`` has ``R^{kl}_{ij}`` in row
``(k,l)`` and column ``(i,j)``.

Two evaluation back ends are offered: :class:`QMatrix` (symbolic, sparse) and
:class:`BlockMat` (a specialization at a rational point, stored as dense FLINT
blocks along a fixed block-diagonal decomposition).
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from flint import fmpq, fmpq_mat

from .scalar import ONE, ZERO, DomainError, ParseError, QScalar, to_fraction

__all__ = [
    "QMatrix",
    "BlockMat",
    "BlockStructure",
    "GenericityError",
    "SingularMatrixError",
    "DEFAULT_POINTS",
    "kron",
    "amplify",
    "partial_trace",
    "rank_generic",
    "rank_symbolic",
    "flip",
    "certify_identity",
]

DEFAULT_POINTS = (Fraction(3, 2), Fraction(5, 3))


class GenericityError(ArithmeticError):
    """Ranks at two sample points disagree."""


class SingularMatrixError(ArithmeticError):
    pass


def _lift(x) -> QScalar:
    return x if isinstance(x, QScalar) else QScalar(x)


class QMatrix:
    """Immutable sparse matrix with :class:`QScalar` entries.

    ``rows_data`` maps a row index to a dict ``{col: value}``; zero values are
    never stored.  Indices are 0-based internally, 1-based in JSON.
    """

    __slots__ = ("nrows", "ncols", "_rows", "row_legs", "col_legs")

    def __init__(self, nrows: int, ncols: int, entries=None, row_legs=None, col_legs=None):
        self.nrows = nrows
        self.ncols = ncols
        rows: dict = {}
        if entries:
            for (r, c), v in entries.items():
                if not (0 <= r < nrows and 0 <= c < ncols):
                    raise IndexError(f"entry ({r},{c}) outside {nrows}x{ncols}")
                v = _lift(v)
                if v:
                    rows.setdefault(r, {})[c] = v
        self._rows = rows
        self.row_legs = tuple(row_legs) if row_legs else None
        self.col_legs = tuple(col_legs) if col_legs else None
        if self.row_legs and prod(self.row_legs) != nrows:
            raise ValueError("row legs do not multiply to the row count")
        if self.col_legs and prod(self.col_legs) != ncols:
            raise ValueError("column legs do not multiply to the column count")

    @classmethod
    def _from_rows(cls, nrows, ncols, rows, row_legs=None, col_legs=None) -> "QMatrix":
        m = object.__new__(cls)
        m.nrows, m.ncols, m._rows = nrows, ncols, rows
        m.row_legs = tuple(row_legs) if row_legs else None
        m.col_legs = tuple(col_legs) if col_legs else None
        return m

    # -- constructors ---------------------------------------------------------
    @classmethod
    def eye(cls, n: int, legs=None) -> "QMatrix":
        return cls._from_rows(n, n, {i: {i: ONE} for i in range(n)}, legs, legs)

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None, row_legs=None, col_legs=None) -> "QMatrix":
        return cls._from_rows(nrows, nrows if ncols is None else ncols, {}, row_legs, col_legs)

    @classmethod
    def scalar(cls, n: int, s, legs=None) -> "QMatrix":
        s = _lift(s)
        if not s:
            return cls.zeros(n, n, legs, legs)
        return cls._from_rows(n, n, {i: {i: s} for i in range(n)}, legs, legs)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence], row_legs=None, col_legs=None) -> "QMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        ent = {(i, j): v for i, row in enumerate(data) for j, v in enumerate(row)}
        return cls(nrows, ncols, ent, row_legs, col_legs)

    @classmethod
    def diag(cls, values: Sequence, legs=None) -> "QMatrix":
        return cls(len(values), len(values), {(i, i): v for i, v in enumerate(values)}, legs, legs)

    # -- access ----------------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, rc) -> QScalar:
        r, c = rc
        return self._rows.get(r, {}).get(c, ZERO)

    def items(self) -> Iterable:
        for r in sorted(self._rows):
            row = self._rows[r]
            for c in sorted(row):
                yield (r, c), row[c]

    def row(self, r: int) -> dict:
        return dict(self._rows.get(r, {}))

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def is_zero(self) -> bool:
        return not self._rows

    def to_dense(self) -> list:
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.items():
            out[r][c] = v
        return out

    def with_legs(self, row_legs=None, col_legs=None) -> "QMatrix":
        return QMatrix._from_rows(self.nrows, self.ncols, self._rows, row_legs, col_legs)

    # -- arithmetic ---------------------------------------------------------------
    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        rows = {r: dict(row) for r, row in self._rows.items()}
        for r, orow in other._rows.items():
            row = rows.setdefault(r, {})
            for c, v in orow.items():
                w = row.get(c)
                if w is None:
                    row[c] = v
                else:
                    w = w + v
                    if w:
                        row[c] = w
                    else:
                        del row[c]
            if not row:
                del rows[r]
        return QMatrix._from_rows(self.nrows, self.ncols, rows, self.row_legs, self.col_legs)

    def __neg__(self) -> "QMatrix":
        rows = {r: {c: -v for c, v in row.items()} for r, row in self._rows.items()}
        return QMatrix._from_rows(self.nrows, self.ncols, rows, self.row_legs, self.col_legs)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return self + (-other)

    def __mul__(self, s) -> "QMatrix":
        if isinstance(s, QMatrix):
            raise TypeError("use @ for matrix products")
        s = _lift(s)
        if not s:
            return QMatrix.zeros(self.nrows, self.ncols, self.row_legs, self.col_legs)
        if s == ONE:
            return self
        rows = {r: {c: v * s for c, v in row.items()} for r, row in self._rows.items()}
        return QMatrix._from_rows(self.nrows, self.ncols, rows, self.row_legs, self.col_legs)

    __rmul__ = __mul__

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        orows = other._rows
        out = {}
        for r, row in self._rows.items():
            acc: dict = {}
            for k, a in row.items():
                brow = orows.get(k)
                if not brow:
                    continue
                for c, b in brow.items():
                    w = acc.get(c)
                    acc[c] = a * b if w is None else w + a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                out[r] = acc
        return QMatrix._from_rows(self.nrows, other.ncols, out, self.row_legs, other.col_legs)

    def add_scalar(self, s) -> "QMatrix":
        """``self + s*I`` for square matrices."""
        return self + QMatrix.scalar(self.nrows, s, self.row_legs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, tuple(self.items())))

    @property
    def T(self) -> "QMatrix":
        rows: dict = {}
        for r, row in self._rows.items():
            for c, v in row.items():
                rows.setdefault(c, {})[r] = v
        return QMatrix._from_rows(self.ncols, self.nrows, rows, self.col_legs, self.row_legs)

    def map(self, f) -> "QMatrix":
        rows = {}
        for r, row in self._rows.items():
            nr = {c: f(v) for c, v in row.items()}
            nr = {c: _lift(v) for c, v in nr.items() if v}
            if nr:
                rows[r] = nr
        return QMatrix._from_rows(self.nrows, self.ncols, rows, self.row_legs, self.col_legs)

    def trace(self) -> QScalar:
        acc = ZERO
        for r, row in self._rows.items():
            v = row.get(r)
            if v is not None:
                acc = acc + v
        return acc

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "QMatrix":
        cpos = {c: j for j, c in enumerate(cols)}
        out = {}
        for i, r in enumerate(rows):
            row = self._rows.get(r)
            if not row:
                continue
            nr = {cpos[c]: v for c, v in row.items() if c in cpos}
            if nr:
                out[i] = nr
        return QMatrix._from_rows(len(rows), len(cols), out)

    def first_difference(self, other: "QMatrix"):
        """The first (row, col) where two matrices differ, or ``None``."""
        self._check_same(other)
        keys = set()
        for src in (self._rows, other._rows):
            for r, row in src.items():
                keys.update((r, c) for c in row)
        for r, c in sorted(keys):
            if self[r, c] != other[r, c]:
                return (r, c)
        return None

    # -- specialization -----------------------------------------------------------
    def evaluate(self, q0) -> "QMatrix":
        """Entrywise evaluation, returned as a constant QMatrix."""
        return self.map(lambda v: QScalar(v.eval_at(q0)))

    def to_fmpq_mat(self, q0) -> fmpq_mat:
        x = q0 if isinstance(q0, fmpq) else fmpq(to_fraction(q0).numerator, to_fraction(q0).denominator)
        m = fmpq_mat(self.nrows, self.ncols)
        for r, row in self._rows.items():
            for c, v in row.items():
                m[r, c] = v._eval_fmpq(x)
        return m

    # -- symbolic inverse -----------------------------------------------------------
    def inverse(self) -> "QMatrix":
        """Gauss-Jordan inverse over Q(q)."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        work = [dict(self._rows.get(r, {})) for r in range(n)]
        inv = [{r: ONE} for r in range(n)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if col in work[r] and (piv is None or len(work[r]) < len(work[piv])):
                    piv = r
            if piv is None:
                raise SingularMatrixError(f"matrix is singular (no pivot in column {col + 1})")
            work[col], work[piv] = work[piv], work[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            p = work[col][col].inverse()
            work[col] = {c: v * p for c, v in work[col].items()}
            inv[col] = {c: v * p for c, v in inv[col].items()}
            for r in range(n):
                if r == col:
                    continue
                f = work[r].get(col)
                if f is None:
                    continue
                _axpy(work[r], work[col], -f)
                _axpy(inv[r], inv[col], -f)
        rows = {r: row for r, row in enumerate(inv) if row}
        return QMatrix._from_rows(n, n, rows, self.col_legs, self.row_legs)

    # -- json -------------------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "dim_row": self.nrows,
            "dim_col": self.ncols,
            "row_legs": list(self.row_legs) if self.row_legs else [self.nrows],
            "col_legs": list(self.col_legs) if self.col_legs else [self.ncols],
            "entries": [{"r": r + 1, "c": c + 1, "v": v.to_json()} for (r, c), v in self.items()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, obj) -> "QMatrix":
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise ParseError(f"malformed matrix JSON: {exc}") from exc
        try:
            nr, nc = int(obj["dim_row"]), int(obj["dim_col"])
            ent = {}
            for e in obj["entries"]:
                key = (int(e["r"]) - 1, int(e["c"]) - 1)
                if key in ent:
                    raise ParseError(f"duplicate entry {key}")
                ent[key] = QScalar.from_json(e["v"])
            rl = obj.get("row_legs")
            cl = obj.get("col_legs")
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"malformed matrix JSON: {exc}") from exc
        try:
            return cls(nr, nc, ent, rl, cl)
        except (IndexError, ValueError) as exc:
            raise ParseError(str(exc)) from exc

    def __repr__(self) -> str:
        return f"QMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"

    def __str__(self) -> str:
        d = self.to_dense()
        return "\n".join("[" + ", ".join(str(v) for v in row) + "]" for row in d)


def _axpy(y: dict, x: dict, a: QScalar) -> None:
    """In place ``y += a*x`` for sparse rows."""
    for c, v in x.items():
        w = y.get(c)
        if w is None:
            y[c] = a * v
        else:
            w = w + a * v
            if w:
                y[c] = w
            else:
                del y[c]


# -- tensor structure --------------------------------------------------------------

def kron(A: QMatrix, B: QMatrix) -> QMatrix:
    rb, cb = B.nrows, B.ncols
    out = {}
    for i, arow in A._rows.items():
        for j, brow in B._rows.items():
            row = {}
            for k, a in arow.items():
                base = k * cb
                for l, b in brow.items():
                    row[base + l] = a * b
            out[i * rb + j] = row
    rl = (A.row_legs or (A.nrows,)) + (B.row_legs or (B.nrows,))
    cl = (A.col_legs or (A.ncols,)) + (B.col_legs or (B.ncols,))
    return QMatrix._from_rows(A.nrows * rb, A.ncols * cb, out, rl, cl)


def amplify(M: QMatrix, i: int, p: int, N: int) -> QMatrix:
    """Place an operator on legs ``i, i+1, ...`` of ``V^{(x)p}`` (1-based ``i``).

    ``M`` acts on ``w`` consecutive legs where ``N**w == M.nrows``.
    """
    w = 0
    n = 1
    while n < M.nrows:
        n *= N
        w += 1
    if n != M.nrows or M.nrows != M.ncols:
        raise ValueError("operator size is not a power of N")
    if i < 1 or i + w - 1 > p:
        raise ValueError(f"legs {i}..{i + w - 1} outside 1..{p}")
    left = N ** (i - 1)
    right = N ** (p - i - w + 1)
    out = M
    if left > 1:
        out = kron(QMatrix.eye(left), out)
    if right > 1:
        out = kron(out, QMatrix.eye(right))
    legs = (N,) * p
    return out.with_legs(legs, legs)


def _split(index: int, legs: Sequence[int]) -> list:
    out = []
    for d in reversed(legs):
        out.append(index % d)
        index //= d
    return out[::-1]


def _join(parts: Sequence[int], legs: Sequence[int]) -> int:
    idx = 0
    for p, d in zip(parts, legs):
        idx = idx * d + p
    return idx


def partial_trace(M: QMatrix, traced: Iterable[int]) -> QMatrix:
    """Trace over the given 1-based legs; row and column legs must agree."""
    legs = M.row_legs
    if legs is None or M.col_legs != legs:
        raise ValueError("partial_trace needs matching row and column legs")
    traced = sorted(set(traced))
    keep = [k for k in range(1, len(legs) + 1) if k not in traced]
    klegs = tuple(legs[k - 1] for k in keep) or (1,)
    out: dict = {}
    for r, row in M._rows.items():
        rp = _split(r, legs)
        for c, v in row.items():
            cp = _split(c, legs)
            if any(rp[k - 1] != cp[k - 1] for k in traced):
                continue
            rr = _join([rp[k - 1] for k in keep], klegs) if keep else 0
            cc = _join([cp[k - 1] for k in keep], klegs) if keep else 0
            dst = out.setdefault(rr, {})
            w = dst.get(cc)
            dst[cc] = v if w is None else w + v
    dim = prod(klegs)
    rows = {}
    for r, row in out.items():
        row = {c: v for c, v in row.items() if v}
        if row:
            rows[r] = row
    return QMatrix._from_rows(dim, dim, rows, klegs, klegs)


def permute_legs(M: QMatrix, perm: Sequence[int]) -> QMatrix:
    """Relabel tensor legs: new leg ``k`` is old leg ``perm[k]`` (0-based)."""
    legs = M.row_legs
    if legs is None or M.col_legs != legs:
        raise ValueError("permute_legs needs matching legs")
    new_legs = tuple(legs[p] for p in perm)

    def move(idx):
        parts = _split(idx, legs)
        return _join([parts[p] for p in perm], new_legs)

    rows = {}
    for r, row in M._rows.items():
        rows[move(r)] = {move(c): v for c, v in row.items()}
    return QMatrix._from_rows(M.nrows, M.ncols, rows, new_legs, new_legs)


def flip(N: int, sign=None) -> QMatrix:
    """The flip ``x_i (x) x_j -> x_j (x) x_i``; ``sign(i, j)`` may twist it."""
    ent = {}
    for i in range(N):
        for j in range(N):
            ent[(j * N + i, i * N + j)] = 1 if sign is None else sign(i, j)
    return QMatrix(N * N, N * N, ent, (N, N), (N, N))


# -- ranks ------------------------------------------------------------------------------

def _as_fmpq(x) -> fmpq:
    x = to_fraction(x)
    return fmpq(x.numerator, x.denominator)


def rank_at(M: QMatrix, q0) -> int:
    if M.is_zero():
        return 0
    return M.to_fmpq_mat(_as_fmpq(q0)).rank()


def rank_generic(M: QMatrix, points: Sequence = DEFAULT_POINTS, symbolic: bool = False) -> int:
    """Generic rank by exact elimination at two sample points.

    With ``symbolic=True`` the rank is also computed over Q(q) directly and
    compared with the sampled value.
    """
    if len(points) < 2:
        raise ValueError("at least two sample points are required")
    ranks = [rank_at(M, p) for p in points]
    if len(set(ranks)) != 1:
        raise GenericityError(
            f"ranks {ranks} at sample points {[str(p) for p in points]} disagree; "
            "add a third point or use symbolic mode"
        )
    r = ranks[0]
    if symbolic:
        rs = rank_symbolic(M)
        if rs != r:
            raise GenericityError(f"symbolic rank {rs} differs from sampled rank {r}")
    return r


def rank_symbolic(M: QMatrix) -> int:
    """Rank over Q(q) by fraction-free elimination.

    Rows are combined as ``p*row_r - a*row_p`` (no division in the update);
    the pivot row is chosen with the fewest nonzeros.  Divisions are postponed
    to a final per-row normalization that keeps entries small.
    """
    rows = [dict(r) for r in M._rows.values() if r]
    rank = 0
    while rows:
        # pick the sparsest row; its smallest column is the pivot column
        k = min(range(len(rows)), key=lambda i: (len(rows[i]), min(rows[i])))
        prow = rows.pop(k)
        col = min(prow)
        p = prow[col]
        rank += 1
        nxt = []
        for row in rows:
            a = row.get(col)
            if a is not None:
                new = {c: v * p for c, v in row.items()}
                _axpy(new, prow, -a)
                new.pop(col, None)
                row = _normalize_row(new)
            if row:
                nxt.append(row)
        rows = nxt
    return rank


def _normalize_row(row: dict) -> dict:
    """Scale a row so its first entry becomes 1 (postponed division)."""
    if not row:
        return row
    lead = row[min(row)]
    if lead == ONE:
        return row
    inv = lead.inverse()
    return {c: v * inv for c, v in row.items()}


# -- block-diagonal point algebra ------------------------------------------------------------

class BlockStructure:
    """A partition of ``range(dim)`` into blocks stable under given generators.

    Built from the connected components of the union of the sparsity graphs
    of the generators, so every operator in the algebra they generate is
    block diagonal with respect to it.
    """

    def __init__(self, dim: int, generators: Sequence[QMatrix]):
        parent = list(range(dim))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in generators:
            for r, row in g._rows.items():
                for c in row:
                    a, b = find(r), find(c)
                    if a != b:
                        parent[a] = b
        comps: dict = {}
        for x in range(dim):
            comps.setdefault(find(x), []).append(x)
        self.dim = dim
        self.blocks = sorted(comps.values())
        self.where = [None] * dim
        for bi, blk in enumerate(self.blocks):
            for pos, x in enumerate(blk):
                self.where[x] = (bi, pos)


class BlockMat:
    """A rational matrix, block diagonal along a :class:`BlockStructure`."""

    __slots__ = ("bs", "blocks")

    def __init__(self, bs: BlockStructure, blocks: list):
        self.bs = bs
        self.blocks = blocks

    @classmethod
    def from_qmatrix(cls, bs: BlockStructure, M: QMatrix, q0) -> "BlockMat":
        x = _as_fmpq(q0)
        blocks = [fmpq_mat(len(b), len(b)) for b in bs.blocks]
        for r, row in M._rows.items():
            br, pr = bs.where[r]
            for c, v in row.items():
                bc, pc = bs.where[c]
                if bc != br:
                    raise ValueError("matrix is not block diagonal for this structure")
                blocks[br][pr, pc] = v._eval_fmpq(x)
        return cls(bs, blocks)

    @classmethod
    def eye(cls, bs: BlockStructure) -> "BlockMat":
        out = []
        for b in bs.blocks:
            m = fmpq_mat(len(b), len(b))
            for i in range(len(b)):
                m[i, i] = 1
            out.append(m)
        return cls(bs, out)

    def __matmul__(self, other: "BlockMat") -> "BlockMat":
        return BlockMat(self.bs, [a * b for a, b in zip(self.blocks, other.blocks)])

    def __add__(self, other: "BlockMat") -> "BlockMat":
        return BlockMat(self.bs, [a + b for a, b in zip(self.blocks, other.blocks)])

    def __sub__(self, other: "BlockMat") -> "BlockMat":
        return BlockMat(self.bs, [a - b for a, b in zip(self.blocks, other.blocks)])

    def __neg__(self) -> "BlockMat":
        return BlockMat(self.bs, [-a for a in self.blocks])

    def __mul__(self, s) -> "BlockMat":
        s = s if isinstance(s, fmpq) else _as_fmpq(s)
        return BlockMat(self.bs, [a * s for a in self.blocks])

    __rmul__ = __mul__

    def add_scalar(self, s) -> "BlockMat":
        return self + BlockMat.eye(self.bs) * s

    def rank(self) -> int:
        return sum(b.rank() for b in self.blocks if b.nrows())

    def trace(self) -> Fraction:
        acc = fmpq(0)
        for b in self.blocks:
            for i in range(b.nrows()):
                acc += b[i, i]
        return to_fraction(acc)

    def is_zero(self) -> bool:
        return all(b == fmpq_mat(b.nrows(), b.ncols()) for b in self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, BlockMat) and all(a == b for a, b in zip(self.blocks, other.blocks))

    __hash__ = None


# -- exact identity certificates by interpolation ---------------------------------------
#
# A matrix expression whose entries are Laurent polynomials of q with exponents in
# [lo, hi] vanishes identically iff it vanishes at hi - lo + 1 distinct nonzero
# points.  The span is tracked through the same expression evaluated abstractly.

class _Span:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        self.lo, self.hi = lo, hi

    @staticmethod
    def of(x):
        return x if isinstance(x, _Span) else _Span(*x) if x is not None else _ZSPAN

    @property
    def zero(self):
        return self.lo is None

    def __add__(self, o):
        if self.zero:
            return o
        if o.zero:
            return self
        return _Span(min(self.lo, o.lo), max(self.hi, o.hi))

    __sub__ = __add__

    def __neg__(self):
        return self

    def __matmul__(self, o):
        if self.zero or o.zero:
            return _ZSPAN
        return _Span(self.lo + o.lo, self.hi + o.hi)

    __mul__ = __matmul__
    __rmul__ = __matmul__

    def add_scalar(self, s):
        return self + s


_ZSPAN = _Span(None, None)


def matrix_span(M: QMatrix):
    lo = hi = None
    for _, v in M.items():
        sp = v.laurent_span()
        lo = sp[0] if lo is None else min(lo, sp[0])
        hi = sp[1] if hi is None else max(hi, sp[1])
    return _Span(lo, hi)


class _Ctx:
    """Backend handed to identity builders: ``m(name)`` base matrices, ``s(x)`` scalars."""

    def __init__(self, mode, bases, bs=None, point=None):
        self.mode, self.bases, self.bs, self.point = mode, bases, bs, point
        self._cache = {}

    def m(self, name):
        if name not in self._cache:
            M = self.bases[name]
            if self.mode == "symbolic":
                v = M
            elif self.mode == "span":
                v = matrix_span(M)
            else:
                v = BlockMat.from_qmatrix(self.bs, M, self.point)
            self._cache[name] = v
        return self._cache[name]

    def s(self, x):
        x = _lift(x)
        if self.mode == "symbolic":
            return x
        if self.mode == "span":
            return _Span.of(x.laurent_span())
        return _as_fmpq(x.eval_at(self.point))

    def eye(self, name):
        """Identity of the same size as base ``name``."""
        if self.mode == "symbolic":
            return QMatrix.eye(self.bases[name].nrows)
        if self.mode == "span":
            return _Span(0, 0)
        return BlockMat.eye(self.bs)


def certify_identity(build, bases: dict) -> tuple:
    """Decide exactly whether ``build(ctx)`` is the zero matrix.

    Returns ``(ok, method)``.  When all bases and scalars are Laurent the
    expression is evaluated at ``width + 1`` integer points; otherwise it is
    computed symbolically.
    """
    try:
        span = build(_Ctx("span", bases))
    except DomainError:
        span = None
    dim = next(iter(bases.values())).nrows
    bs = BlockStructure(dim, list(bases.values()))
    if span is None:
        return build(_Ctx("symbolic", bases)).is_zero(), "symbolic"
    if span.zero:
        return True, "span: structurally zero"
    width = span.hi - span.lo
    pts = list(range(2, width + 3))
    for p in pts:
        if not build(_Ctx("point", bases, bs, p)).is_zero():
            return False, f"nonzero at q={p}"
    return True, f"interpolation at {len(pts)} points (exponent span {span.lo}..{span.hi})"
