"""Exact rational matrices with named tensor factors.

A :class:`MatMorphism` stores an integer numerator array (numpy ``object``
dtype holding Python ints) and one positive common denominator, always in
lowest terms, so equality is plain comparison of the two.  Tensor factors
are indexed row-major: the leftmost factor is the most significant digit.

An optional float mode keeps ``float64`` arrays and compares with a
tolerance; it exists for user-supplied data only.
"""

from __future__ import annotations

import contextlib
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

_FLOAT_TOL = [1e-9]


@contextlib.contextmanager
def float_tolerance(tol: float):
    old = _FLOAT_TOL[0]
    _FLOAT_TOL[0] = tol
    try:
        yield
    finally:
        _FLOAT_TOL[0] = old


class ShapeError(ValueError):
    pass


class NotIdempotentError(ValueError):
    pass


@dataclass(frozen=True)
class MatObject:
    """A word of named factors ``((name, dim), ...)``; the empty word is I."""

    factors: tuple = ()

    def __post_init__(self):
        factors = tuple((str(n), int(d)) for n, d in self.factors)
        for _, d in factors:
            if d < 0:
                raise ShapeError("factor dimensions must be nonnegative")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def named(cls, name: str, dim: int) -> "MatObject":
        return cls(((name, dim),))

    @property
    def dim(self) -> int:
        return math.prod(d for _, d in self.factors)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.factors)

    def parts(self) -> list["MatObject"]:
        return [MatObject((f,)) for f in self.factors]

    def __len__(self):
        return len(self.factors)

    def __matmul__(self, other: "MatObject") -> "MatObject":
        return MatObject(self.factors + other.factors)

    def __pow__(self, n: int) -> "MatObject":
        return MatObject(self.factors * n)

    def __repr__(self):
        if not self.factors:
            return "I"
        return "⊗".join(f"{n}[{d}]" for n, d in self.factors)


I = MatObject()


def tensor_objects(objs: Iterable[MatObject]) -> MatObject:
    return reduce(MatObject.__matmul__, objs, I)


def parse_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(x).limit_denominator(10**12)
    return Fraction(x)


def _zeros(shape) -> np.ndarray:
    return np.zeros(shape, dtype=object)


def _int_eye(n: int) -> np.ndarray:
    a = _zeros((n, n))
    a[range(n), range(n)] = 1
    return a


def _normalize(num: np.ndarray, den: int) -> tuple[np.ndarray, int]:
    if den < 0:
        num, den = -num, -den
    if num.size == 0:
        return num, 1
    g = math.gcd(den, *num.flat)
    if g > 1:
        num = num // g
        den //= g
    return num, den


_INT64_SAFE = 2 ** 62
_FLOAT_EXACT = 2 ** 53


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return max(abs(a.max()), abs(a.min()))


def int_dot(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of integer object arrays.

    Falls back to object arithmetic unless every partial sum provably fits
    in a machine type (float64 below 2^53, else int64), in which case the
    machine product is exact.
    """
    if a.dtype != object or b.dtype != object:
        return a.dot(b)
    k = a.shape[-1]
    bound = _max_abs(a) * _max_abs(b) * k if k else 0
    if bound < _FLOAT_EXACT:
        # every partial sum is an integer below 2^53, so BLAS is exact in any order
        out = a.astype(np.float64).dot(b.astype(np.float64))
        return out.astype(np.int64).astype(object)
    if bound < _INT64_SAFE:
        return a.astype(np.int64).dot(b.astype(np.int64)).astype(object)
    return a.dot(b)


class MatMorphism:
    """A linear map ``dom -> cod`` as a ``cod.dim x dom.dim`` matrix."""

    __slots__ = ("dom", "cod", "num", "den")
    __hash__ = None

    def __init__(self, dom: MatObject, cod: MatObject, rows):
        fr = [[parse_scalar(x) for x in row] for row in rows]
        if cod.dim == 0 or dom.dim == 0:
            fr = [[Fraction(0)] * dom.dim for _ in range(cod.dim)]
        if len(fr) != cod.dim or any(len(r) != dom.dim for r in fr):
            raise ShapeError(f"matrix shape does not match {dom} -> {cod}")
        den = math.lcm(1, *(x.denominator for r in fr for x in r))
        num = _zeros((cod.dim, dom.dim))
        for i, r in enumerate(fr):
            for j, x in enumerate(r):
                num[i, j] = x.numerator * (den // x.denominator)
        self._set(dom, cod, num, den)

    def _set(self, dom, cod, num, den):
        self.dom, self.cod = dom, cod
        if num.dtype == object:
            num, den = _normalize(num, den)
        self.num, self.den = num, den

    @classmethod
    def raw(cls, dom: MatObject, cod: MatObject, num: np.ndarray, den: int = 1) -> "MatMorphism":
        if num.shape != (cod.dim, dom.dim):
            raise ShapeError(f"array shape {num.shape} does not match {dom} -> {cod}")
        self = cls.__new__(cls)
        self._set(dom, cod, num, den)
        return self

    @classmethod
    def from_float(cls, dom, cod, array) -> "MatMorphism":
        return cls.raw(dom, cod, np.asarray(array, dtype=float).reshape(cod.dim, dom.dim), 1)

    # constructors -----------------------------------------------------
    @classmethod
    def identity(cls, obj: MatObject) -> "MatMorphism":
        return cls.raw(obj, obj, _int_eye(obj.dim))

    @classmethod
    def zero(cls, dom: MatObject, cod: MatObject) -> "MatMorphism":
        return cls.raw(dom, cod, _zeros((cod.dim, dom.dim)))

    @classmethod
    def scalar(cls, x, obj: MatObject = I) -> "MatMorphism":
        x = parse_scalar(x)
        return cls.raw(obj, obj, _int_eye(obj.dim) * x.numerator, x.denominator)

    # inspection -------------------------------------------------------
    @property
    def exact(self) -> bool:
        return self.num.dtype == object

    @property
    def shape(self) -> tuple[int, int]:
        return self.num.shape

    def entry(self, i: int, j: int) -> Fraction:
        if not self.exact:
            return float(self.num[i, j])
        return Fraction(self.num[i, j], self.den)

    def entries(self) -> list[list]:
        return [[self.entry(i, j) for j in range(self.shape[1])] for i in range(self.shape[0])]

    def to_strings(self) -> list[list[str]]:
        if not self.exact:
            return [[repr(float(x)) for x in row] for row in self.num]
        return [[str(x) for x in row] for row in self.entries()]

    def to_float(self) -> "MatMorphism":
        if not self.exact:
            return self
        arr = np.array([[float(x) for x in row] for row in self.entries()], dtype=float)
        return MatMorphism.raw(self.dom, self.cod, arr.reshape(self.shape), 1)

    def is_identity(self) -> bool:
        return self.dom == self.cod and self == MatMorphism.identity(self.dom)

    def is_zero(self) -> bool:
        if self.exact:
            return not any(self.num.flat)
        return bool(np.all(np.abs(self.num) <= _FLOAT_TOL[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatMorphism):
            return NotImplemented
        if self.dom != other.dom or self.cod != other.cod:
            return False
        if self.exact and other.exact:
            return self.den == other.den and bool(np.array_equal(self.num, other.num))
        a, b = self.to_float().num, other.to_float().num
        return bool(np.allclose(a, b, rtol=0.0, atol=_FLOAT_TOL[0]))

    def __repr__(self):
        return f"MatMorphism({self.dom} -> {self.cod}, {self.to_strings()})"

    # algebra ----------------------------------------------------------
    def then(self, other: "MatMorphism") -> "MatMorphism":
        """``other ∘ self``."""
        return mat_compose(other, self)

    def tensor(self, other: "MatMorphism") -> "MatMorphism":
        return mat_tensor(self, other)

    __rshift__ = then
    __matmul__ = tensor

    def _binop(self, other, sign):
        if self.dom != other.dom or self.cod != other.cod:
            raise ShapeError("cannot add morphisms of different types")
        a, b = _coerce(self, other)
        if a.exact:
            return MatMorphism.raw(a.dom, a.cod, a.num * b.den + sign * b.num * a.den, a.den * b.den)
        return MatMorphism.raw(a.dom, a.cod, a.num + sign * b.num, 1)

    def __add__(self, other):
        return self._binop(other, 1)

    def __sub__(self, other):
        return self._binop(other, -1)

    def __neg__(self):
        return MatMorphism.raw(self.dom, self.cod, -self.num, self.den)

    def __rmul__(self, x):
        if not self.exact:
            return MatMorphism.raw(self.dom, self.cod, self.num * float(x), 1)
        x = parse_scalar(x)
        return MatMorphism.raw(self.dom, self.cod, self.num * x.numerator, self.den * x.denominator)

    def retype(self, dom: MatObject, cod: MatObject) -> "MatMorphism":
        """Same matrix viewed with different factor words of equal dimension."""
        return MatMorphism.raw(dom, cod, self.num, self.den)

    def rank(self) -> int:
        return len(_echelon(self._exact_num())[1])

    def _exact_num(self):
        if not self.exact:
            raise TypeError("operation requires the exact rational backend")
        return self.num

    def inverse(self) -> "MatMorphism":
        n = self.shape[0]
        if self.shape != (n, n):
            raise ShapeError("only square matrices are invertible")
        aug = np.concatenate([self._exact_num(), _int_eye(n)], axis=1)
        rows, pivots = _echelon(aug)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ZeroDivisionError("matrix is singular")
        num, den = _rows_to_rational(rows[:n, n:], [rows[i, i] for i in range(n)])
        return MatMorphism.raw(self.cod, self.dom, num * self.den, den)

    def is_invertible(self) -> bool:
        n = self.shape[0]
        return self.shape == (n, n) and self.rank() == n


def _coerce(a: MatMorphism, b: MatMorphism):
    if a.exact == b.exact:
        return a, b
    return a.to_float(), b.to_float()


def mat_compose(g: MatMorphism, f: MatMorphism) -> MatMorphism:
    """``g ∘ f``."""
    if f.cod != g.dom:
        raise ShapeError(f"cannot compose: codomain {f.cod} != domain {g.dom}")
    g, f = _coerce(g, f)
    return MatMorphism.raw(f.dom, g.cod, int_dot(g.num, f.num), g.den * f.den)


def mat_tensor(f: MatMorphism, g: MatMorphism) -> MatMorphism:
    f, g = _coerce(f, g)
    return MatMorphism.raw(f.dom @ g.dom, f.cod @ g.cod, np.kron(f.num, g.num), f.den * g.den)


def compose_all(*fs: MatMorphism) -> MatMorphism:
    """``compose_all(f1, f2, f3) = f3 ∘ f2 ∘ f1`` (diagrammatic order)."""
    return reduce(lambda acc, f: mat_compose(f, acc), fs[1:], fs[0])


def tensor_all(*fs: MatMorphism) -> MatMorphism:
    return reduce(mat_tensor, fs[1:], fs[0]) if fs else MatMorphism.identity(I)


def ident(obj: MatObject) -> MatMorphism:
    return MatMorphism.identity(obj)


def permutation(obj: MatObject, order: Sequence[int]) -> MatMorphism:
    """Reorder the factors of ``obj``: output factor k is input factor ``order[k]``."""
    dims = obj.dims
    n = obj.dim
    out = MatObject(tuple(obj.factors[i] for i in order))
    idx = np.arange(n).reshape(dims) if dims else np.arange(1).reshape(())
    moved = np.transpose(idx, order).reshape(-1) if dims else idx.reshape(-1)
    num = _zeros((n, n))
    num[np.arange(n), moved] = 1
    return MatMorphism.raw(obj, out, num)


def braiding(a: MatObject, b: MatObject) -> MatMorphism:
    """The symmetric braiding ``a ⊗ b -> b ⊗ a``."""
    na, nb = len(a), len(b)
    return permutation(a @ b, list(range(na, na + nb)) + list(range(na)))


# exact elimination ----------------------------------------------------------

def _echelon(num: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Fraction-free reduced row echelon form with first-nonzero pivoting.

    Returns the nonzero integer rows (pivot entries not normalized) and the
    pivot columns.  Every other row is cleared in each pivot column.
    """
    a = np.array(num, dtype=object, copy=True)
    m, n = a.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = [i for i in range(r, m) if a[i, c] != 0]
        if not nz:
            continue
        p = nz[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        pv = a[r, c]
        for i in range(m):
            x = a[i, c]
            if i != r and x != 0:
                row = a[i] * pv - a[r] * x
                g = math.gcd(*row)
                a[i] = row // g if g > 1 else row
        g = math.gcd(*a[r])
        if g > 1:
            a[r] = a[r] // g
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _rows_to_rational(rows: np.ndarray, pivots_values) -> tuple[np.ndarray, int]:
    """Divide row i by ``pivots_values[i]``; return (numerators, common den)."""
    if len(pivots_values) == 0:
        return rows, 1
    den = math.lcm(*(abs(int(p)) for p in pivots_values))
    out = rows.copy()
    for i, p in enumerate(pivots_values):
        out[i] = rows[i] * (den // int(p))
    return out, den


def split_idempotent(e: MatMorphism, name: str = "im") -> tuple[MatMorphism, MatMorphism]:
    """Split an idempotent as ``e = s ∘ r`` with ``r ∘ s = 1``.

    Returns ``(r, s)`` with ``r: A -> S`` and ``s: S -> A`` where ``S`` has
    dimension ``rank(e)``.  Uses the exact rank factorization
    ``e = (pivot columns of e) · (reduced row echelon form of e)``.
    """
    if e.dom != e.cod:
        raise ShapeError("idempotent must be an endomorphism")
    if mat_compose(e, e) != e:
        raise NotIdempotentError("e ∘ e != e")
    rows, pivots = _echelon(e._exact_num())
    k = len(pivots)
    image = MatObject.named(name, k)
    rnum, rden = _rows_to_rational(rows, [rows[i, c] for i, c in enumerate(pivots)])
    if k == 0:
        rnum = _zeros((0, e.dom.dim))
    r = MatMorphism.raw(e.dom, image, rnum, rden)
    s = MatMorphism.raw(image, e.cod, e.num[:, pivots] if k else _zeros((e.dom.dim, 0)), e.den)
    return r, s
