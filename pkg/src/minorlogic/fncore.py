"""Dense truth tables for k-valued functions.

A function f: Z_k^n -> Z_k is stored as its value row of length k**n in
row-index order (x1 most significant).  The whole row doubles as a base-k
numeral, the catalogue code: digit 0 (most significant) is the value at
the all-zero point.  Codes are the bit-exact external exchange format.

Besides the codec this module provides essential-variable analysis,
removal of fictive (inessential) variables, and the canonical form that
decides equality up to variable permutation and fictive variables.
"""

from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence, Union

from . import caches, kernels, maps


class FunctionTable:
    """Immutable value row of a k-valued function of n variables.

    ``values`` is a bytes object of length k**n with entries in 0..k-1.
    Variable indices in the public API are 1-based (x1..xn).
    """

    __slots__ = ("k", "n", "values")

    def __init__(self, k: int, n: int, values: Iterable[int]):
        k = int(k)
        n = int(n)
        if k < 2:
            raise ValueError(f"radix k must be at least 2, got {k}")
        if n < 0:
            raise ValueError(f"variable count n must be non-negative, got {n}")
        vals = bytes(values)
        if len(vals) != k**n:
            raise ValueError(
                f"table needs exactly k**n = {k ** n} entries, got {len(vals)}"
            )
        if max(vals) >= k:
            raise ValueError(f"table entries must be below k = {k}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "values", vals)

    @classmethod
    def _wrap(cls, k: int, n: int, vals: bytes) -> "FunctionTable":
        """Fast constructor for internally produced, already valid rows."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "k", k)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "values", vals)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("FunctionTable is immutable")

    def __eq__(self, other):
        if not isinstance(other, FunctionTable):
            return NotImplemented
        return (
            self.k == other.k and self.n == other.n and self.values == other.values
        )

    def __hash__(self):
        return hash((self.k, self.n, self.values))

    def __repr__(self):
        return f"FunctionTable(k={self.k}, n={self.n}, code={self.code})"

    @property
    def size(self) -> int:
        return len(self.values)

    @property
    def code(self) -> int:
        return _code_of(self.k, self.values)

    @property
    def ess(self) -> int:
        return _ess_mask(self.k, self.n, self.values).bit_count()


class CatalogueCode(NamedTuple):
    """A table serialized as one base-k integer below k**(k**n)."""

    k: int
    n: int
    code: int

    def digits(self) -> str:
        """The code as a digit string, leftmost digit = row 0."""
        return "".join(str(v) for v in _vals_of_code(self.k, self.n, self.code))


class CanonicalForm(NamedTuple):
    """Invariant deciding equality up to variable permutation and fictive
    variables: the count of essential variables plus the minimal catalogue
    code of the fictive-free table over all variable permutations."""

    ess: int
    code: CatalogueCode


CodeLike = Union[int, str, CatalogueCode]


def index_of(point: Sequence[int], k: int) -> int:
    """Row index of a point, x1 most significant."""
    idx = 0
    for a in point:
        if not 0 <= a < k:
            raise ValueError(f"point coordinate {a} outside Z_{k}")
        idx = idx * k + a
    return idx


def decode(code: CodeLike, k: int | None = None, n: int | None = None) -> FunctionTable:
    """Table of a catalogue code.

    Accepts an integer, a CatalogueCode, or a string holding either a
    decimal integer or a base-k digit row of length k**n (leftmost digit
    is row 0).
    """
    if isinstance(code, CatalogueCode):
        k, n, code = code
    if k is None or n is None:
        raise ValueError("decode needs k and n unless given a CatalogueCode")
    if isinstance(code, str):
        code = _parse_code_string(code, k, n)
    if not 0 <= code < k ** (k**n):
        raise ValueError(f"code {code} out of range for k={k}, n={n}")
    return FunctionTable._wrap(k, n, _vals_of_code(k, n, code))


def encode(f: FunctionTable) -> CatalogueCode:
    """Inverse of decode."""
    return CatalogueCode(f.k, f.n, _code_of(f.k, f.values))


def evaluate(f: FunctionTable, point: Sequence[int]) -> int:
    if len(point) != f.n:
        raise ValueError(f"point has {len(point)} coordinates, expected {f.n}")
    return f.values[index_of(point, f.k)]


def essential_vars(f: FunctionTable) -> set[int]:
    """1-based indices of the variables f essentially depends on."""
    mask = _ess_mask(f.k, f.n, f.values)
    return {i + 1 for i in range(f.n) if mask >> i & 1}


def drop_fictive(f: FunctionTable) -> FunctionTable:
    """Same mapping restricted to the essential variables, order preserved."""
    m, vals = _dropped(f.k, f.n, f.values)
    return FunctionTable._wrap(f.k, m, vals)


def equivalent(f: FunctionTable, g: FunctionTable) -> bool:
    """Equality up to variable permutation and fictive variables."""
    if f.k != g.k:
        raise ValueError(f"radix mismatch: {f.k} vs {g.k}")
    return _canonical_key(f.k, f.n, f.values) == _canonical_key(g.k, g.n, g.values)


def canonical_form(f: FunctionTable) -> CanonicalForm:
    """Canonical invariant; equal forms exactly characterize equivalent()."""
    m, cvals = _canonical_key(f.k, f.n, f.values)
    return CanonicalForm(m, CatalogueCode(f.k, m, _code_of(f.k, cvals)))


def all_tables(k: int, n: int):
    """Value rows of every function in P_k^n, in catalogue-code order."""
    for point in maps.iter_points(k, k**n):
        yield bytes(point)


# ---------------------------------------------------------------------------
# bytes-level helpers shared by the rest of the package

def _ess_mask(k: int, n: int, vals: bytes) -> int:
    return kernels.ess_mask(vals, k, n)


def _code_of(k: int, vals: bytes) -> int:
    code = 0
    for v in vals:
        code = code * k + v
    return code


def _vals_of_code(k: int, n: int, code: int) -> bytes:
    size = k**n
    out = bytearray(size)
    for idx in range(size - 1, -1, -1):
        code, out[idx] = divmod(code, k)
    return bytes(out)


def _parse_code_string(text: str, k: int, n: int) -> int:
    text = text.strip()
    if not text.isdigit():
        raise ValueError(f"catalogue code must be numeric, got {text!r}")
    value = int(text)
    size = k**n
    if len(text) == size and all(int(ch) < k for ch in text):
        # A digit row is only taken as such when the decimal reading is
        # impossible; for k <= 7 the two readings never collide otherwise.
        if text[0] == "0" or value >= k**size:
            return _code_of(k, bytes(int(ch) for ch in text))
    return value


@lru_cache(maxsize=None)
def _dropped(k: int, n: int, vals: bytes) -> tuple[int, bytes]:
    """(ess count, table over the essential variables in original order)."""
    mask = _ess_mask(k, n, vals)
    keep = tuple(i for i in range(n) if mask >> i & 1)
    if len(keep) == n:
        return n, vals
    return len(keep), kernels.apply_map(vals, maps.project_map(k, n, keep))


@lru_cache(maxsize=None)
def _min_perm(k: int, m: int, dvals: bytes) -> bytes:
    """Lexicographically minimal relabelling of a fictive-free table."""
    if m <= 1:
        return dvals
    return kernels.min_apply_maps(dvals, maps.all_perm_maps(k, m))


def _canonical_key(k: int, n: int, vals: bytes) -> tuple[int, bytes]:
    m, dvals = _dropped(k, n, vals)
    return m, _min_perm(k, m, dvals)


caches.register(_dropped.cache_clear)
caches.register(_min_perm.cache_clear)
