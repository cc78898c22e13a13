"""Cached index maps for dense truth-table transforms.

A k-valued function of n variables is a value row of length k**n indexed by
idx(a_1..a_n) = sum(a_t * k**(n-t)), x1 most significant.  Every structural
operation used in this package (assigning a constant, identifying two
variables, permuting or projecting variables, affine re-mapping of the
domain) boils down to an index map: a row of source indices that a kernel
applies to the value row.  Maps depend only on (k, n) and the operation
parameters, so they are built once and cached.  Treat all returned arrays
as read-only.

Variable positions in this module are 0-based; the public API of the
package uses the 1-based x1..xn naming.
"""

from array import array
from functools import lru_cache
from itertools import permutations, product


@lru_cache(maxsize=None)
def strides(k: int, n: int) -> tuple[int, ...]:
    return tuple(k ** (n - 1 - t) for t in range(n))


def iter_points(k: int, n: int):
    """All points of Z_k^n in row-index order."""
    return product(range(k), repeat=n)


def index_of_point(point, k: int) -> int:
    idx = 0
    for a in point:
        idx = idx * k + a
    return idx


@lru_cache(maxsize=None)
def fix_map(k: int, n: int, var: int, c: int) -> array:
    """Map realizing the assignment x_var := c on the full frame."""
    s = strides(k, n)[var]
    out = array("i", bytes(4 * k**n))
    for idx in range(k**n):
        out[idx] = idx + (c - (idx // s) % k) * s
    return out


@lru_cache(maxsize=None)
def identify_map(k: int, n: int, i: int, j: int) -> array:
    """Map realizing the identification x_i := x_j on the full frame."""
    s = strides(k, n)
    si, sj = s[i], s[j]
    out = array("i", bytes(4 * k**n))
    for idx in range(k**n):
        out[idx] = idx + ((idx // sj) % k - (idx // si) % k) * si
    return out


@lru_cache(maxsize=None)
def perm_map(k: int, n: int, perm: tuple[int, ...]) -> array:
    """Map of the variable relabelling g(a_1..a_n) = f(a_perm[0]+1, ...).

    ``perm`` is a 0-based permutation of range(n); entry t of the result
    point is read from position perm[t] of the argument point.
    """
    out = array("i", bytes(4 * k**n))
    for idx, point in enumerate(iter_points(k, n)):
        out[idx] = index_of_point((point[p] for p in perm), k)
    return out


@lru_cache(maxsize=None)
def all_perm_maps(k: int, n: int) -> tuple[array, ...]:
    return tuple(perm_map(k, n, p) for p in permutations(range(n)))


@lru_cache(maxsize=None)
def project_map(k: int, n: int, keep: tuple[int, ...]) -> array:
    """Map from the dense table over ``keep`` back into the full frame.

    Dropped variables are pinned to 0, so the map is only meaningful when
    they are inessential.
    """
    m = len(keep)
    s = strides(k, n)
    out = array("i", bytes(4 * k**m))
    for idx, point in enumerate(iter_points(k, m)):
        out[idx] = sum(a * s[v] for a, v in zip(point, keep))
    return out


@lru_cache(maxsize=None)
def diag_map(k: int, n: int) -> array:
    """Length-k map reading the diagonal f(a, a, ..., a)."""
    step = (k**n - 1) // (k - 1) if n else 0
    return array("i", (a * step for a in range(k)))


@lru_cache(maxsize=None)
def affine_domain_map(k: int, n: int, matrix, shift) -> array:
    """Map of the domain substitution x -> x.A + c (row vector convention)."""
    out = array("i", bytes(4 * k**n))
    for idx, point in enumerate(iter_points(k, n)):
        image = (
            (sum(point[i] * matrix[i][j] for i in range(n)) + shift[j]) % k
            for j in range(n)
        )
        out[idx] = index_of_point(image, k)
    return out


@lru_cache(maxsize=None)
def linear_offset(k: int, n: int, linear, offset: int) -> bytes:
    """Additive part a.x + d of an affine transform, tabulated per point."""
    return bytes(
        (sum(linear[i] * point[i] for i in range(n)) + offset) % k
        for point in iter_points(k, n)
    )
