"""Restricted affine transformations of P_k^n and orbit enumeration.

A transformation is the quadruple (A, c, a, d): the argument vector is
mapped through x -> x.A + c (row convention, mod k, A invertible), and
the output is shifted by the linear form a.x + d.  Subgroup kinds fix
some of the four parts:

    RAG  A invertible             GE   A permutation, a = 0, d = 0
    G    A permutation, a=0, d=0  CF   only d free
    CA   only c free              LF   only a free
    LG   only A free              S    A permutation, rest zero

GE as implemented equals G (argument permutations plus argument
translations, order n! * k**n); see the project notes for the source
conflict behind that choice.

Orbits over a whole space are found by union-find under the generator
images; the orbit of a single function by forward closure, which reaches
the full group orbit because the generated semigroup of a finite group
is the group itself.
"""

from dataclasses import dataclass
from enum import Enum
from math import gcd
from multiprocessing import get_context

from . import maps
from .classify import (
    DEFAULT_MAX_FUNCTIONS,
    Partition,
    PartitionClass,
    check_space_guard,
)
from .fncore import FunctionTable, _code_of, _vals_of_code, all_tables
from .kernels import apply_map_add


def determinant_mod(matrix, k: int) -> int:
    """Determinant mod k via exact integer elimination (Bareiss)."""
    n = len(matrix)
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1] % k if n else 1 % k


@dataclass(frozen=True)
class AffineMap:
    """One restricted affine transformation of P_k^n."""

    k: int
    n: int
    matrix: tuple[tuple[int, ...], ...]
    shift: tuple[int, ...]  # c, added to the argument vector
    linear: tuple[int, ...]  # a, output term a.x
    offset: int = 0  # d, output constant

    def __post_init__(self):
        k, n = self.k, self.n
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError(f"matrix must be {n}x{n}")
        entries = [e for row in self.matrix for e in row]
        entries += list(self.shift) + list(self.linear) + [self.offset]
        if len(self.shift) != n or len(self.linear) != n:
            raise ValueError(f"vectors must have length {n}")
        if any(not 0 <= e < k for e in entries):
            raise ValueError(f"entries must lie in Z_{k}")
        det = determinant_mod(self.matrix, k)
        if gcd(det, k) != 1:
            raise ValueError(
                f"matrix is singular over Z_{k} (determinant {det})"
            )

    @classmethod
    def identity(cls, k: int, n: int) -> "AffineMap":
        return cls.build(k, n)

    @classmethod
    def build(cls, k, n, matrix=None, shift=None, linear=None, offset=0):
        if matrix is None:
            matrix = tuple(
                tuple(1 if r == c else 0 for c in range(n)) for r in range(n)
            )
        zero = (0,) * n
        return cls(
            k,
            n,
            tuple(tuple(row) for row in matrix),
            tuple(shift) if shift is not None else zero,
            tuple(linear) if linear is not None else zero,
            offset,
        )

    def is_permutation_matrix(self) -> bool:
        return all(
            sorted(row) == [0] * (self.n - 1) + [1] for row in self.matrix
        ) and all(
            sorted(col) == [0] * (self.n - 1) + [1]
            for col in zip(*self.matrix)
        )

    def is_identity_matrix(self) -> bool:
        return all(
            self.matrix[r][c] == (1 if r == c else 0)
            for r in range(self.n)
            for c in range(self.n)
        )


def apply_affine(m: AffineMap, f: FunctionTable) -> FunctionTable:
    """g(x) = f(x.A + c) + a.x + d, everything mod k."""
    if (m.k, m.n) != (f.k, f.n):
        raise ValueError(
            f"map is for k={m.k}, n={m.n}; function has k={f.k}, n={f.n}"
        )
    vals = apply_map_add(
        f.values,
        maps.affine_domain_map(f.k, f.n, m.matrix, m.shift),
        maps.linear_offset(f.k, f.n, m.linear, m.offset),
        f.k,
    )
    return FunctionTable._wrap(f.k, f.n, vals)


def apply_output(sigma, f: FunctionTable) -> FunctionTable:
    """Compose an arbitrary (not necessarily injective) output map."""
    sigma = tuple(sigma)
    if len(sigma) != f.k or any(not 0 <= v < f.k for v in sigma):
        raise ValueError(f"output map must be a total map on Z_{f.k}")
    return FunctionTable._wrap(f.k, f.n, bytes(sigma[v] for v in f.values))


def compose(first: AffineMap, second: AffineMap) -> AffineMap:
    """Map whose application equals applying ``first`` then ``second``."""
    if (first.k, first.n) != (second.k, second.n):
        raise ValueError("maps act on different spaces")
    k, n = first.k, first.n
    a1, a2 = first.matrix, second.matrix
    matrix = tuple(
        tuple(sum(a2[r][t] * a1[t][c] for t in range(n)) % k for c in range(n))
        for r in range(n)
    )
    shift = tuple(
        (sum(second.shift[t] * a1[t][c] for t in range(n)) + first.shift[c]) % k
        for c in range(n)
    )
    linear = tuple(
        (sum(a2[r][t] * first.linear[t] for t in range(n)) + second.linear[r]) % k
        for r in range(n)
    )
    offset = (
        sum(first.linear[t] * second.shift[t] for t in range(n))
        + first.offset
        + second.offset
    ) % k
    return AffineMap(k, n, matrix, shift, linear, offset)


class SubgroupKind(Enum):
    RAG = "RAG"
    GE = "GE"
    CF = "CF"
    G = "G"
    LF = "LF"
    CA = "CA"
    LG = "LG"
    S = "S"

    def contains(self, m: AffineMap) -> bool:
        perm = m.is_permutation_matrix()
        ident = m.is_identity_matrix()
        zero_c = not any(m.shift)
        zero_a = not any(m.linear)
        zero_d = m.offset == 0
        if self is SubgroupKind.RAG:
            return True
        if self in (SubgroupKind.GE, SubgroupKind.G):
            return perm and zero_a and zero_d
        if self is SubgroupKind.CF:
            return ident and zero_a and zero_c
        if self is SubgroupKind.LF:
            return ident and zero_c and zero_d
        if self is SubgroupKind.CA:
            return ident and zero_a and zero_d
        if self is SubgroupKind.LG:
            return zero_c and zero_a and zero_d
        return perm and zero_c and zero_a and zero_d  # S


def _transposition_matrix(n: int, pos: int) -> tuple[tuple[int, ...], ...]:
    perm = list(range(n))
    perm[pos], perm[pos + 1] = perm[pos + 1], perm[pos]
    return tuple(
        tuple(1 if perm[r] == c else 0 for c in range(n)) for r in range(n)
    )


def _unit_vector(n: int, pos: int) -> tuple[int, ...]:
    return tuple(1 if t == pos else 0 for t in range(n))


def generators(kind: SubgroupKind, k: int, n: int) -> list[AffineMap]:
    """A finite generating set for the subgroup of the given kind."""
    kind = SubgroupKind(kind)
    build = AffineMap.build
    swaps = [
        build(k, n, matrix=_transposition_matrix(n, pos)) for pos in range(n - 1)
    ]
    translations = [build(k, n, shift=_unit_vector(n, pos)) for pos in range(n)]
    linear_adds = [build(k, n, linear=_unit_vector(n, pos)) for pos in range(n)]
    out_shift = [build(k, n, offset=1)]

    def transvections():
        out = []
        for r in range(n):
            for c in range(n):
                if r == c:
                    continue
                matrix = tuple(
                    tuple(
                        1 if rr == cc else (1 if (rr, cc) == (r, c) else 0)
                        for cc in range(n)
                    )
                    for rr in range(n)
                )
                out.append(build(k, n, matrix=matrix))
        units = [u for u in range(2, k) if gcd(u, k) == 1]
        for pos in range(n):
            for u in units:
                matrix = tuple(
                    tuple(
                        (u if rr == pos else 1) if rr == cc else 0
                        for cc in range(n)
                    )
                    for rr in range(n)
                )
                out.append(build(k, n, matrix=matrix))
        return out

    if kind is SubgroupKind.S:
        return swaps
    if kind is SubgroupKind.CF:
        return out_shift
    if kind is SubgroupKind.CA:
        return translations
    if kind is SubgroupKind.LF:
        return linear_adds
    if kind in (SubgroupKind.G, SubgroupKind.GE):
        return swaps + translations
    if kind is SubgroupKind.LG:
        return transvections()
    return transvections() + translations + linear_adds + out_shift  # RAG


def generated_group(gens: list[AffineMap], limit: int = 10**6) -> set[AffineMap]:
    """Closure of a generating set under composition (the identity included)."""
    if not gens:
        raise ValueError("need at least one generator")
    k, n = gens[0].k, gens[0].n
    seen = {AffineMap.identity(k, n)}
    frontier = list(seen)
    while frontier:
        current = frontier.pop()
        for g in gens:
            nxt = compose(current, g)
            if nxt not in seen:
                if len(seen) >= limit:
                    raise ValueError(f"group closure exceeds {limit} elements")
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def _generator_actions(kind, k: int, n: int):
    return [
        (
            maps.affine_domain_map(k, n, g.matrix, g.shift),
            maps.linear_offset(k, n, g.linear, g.offset),
        )
        for g in generators(kind, k, n)
    ]


def _image_chunk(args) -> list[tuple[int, ...]]:
    k, n, kind_value, start, stop = args
    actions = _generator_actions(SubgroupKind(kind_value), k, n)
    out = []
    for code in range(start, stop):
        vals = _vals_of_code(k, n, code)
        out.append(
            tuple(
                _code_of(k, apply_map_add(vals, idx_map, add, k))
                for idx_map, add in actions
            )
        )
    return out


def orbits(
    k: int,
    n: int,
    kind: SubgroupKind,
    *,
    jobs: int = 1,
    max_functions: int | None = DEFAULT_MAX_FUNCTIONS,
) -> Partition:
    """Orbit partition of P_k^n under the subgroup of the given kind."""
    kind = SubgroupKind(kind)
    total = check_space_guard(k, n, max_functions)
    if jobs > 1:
        chunk = (total + jobs - 1) // jobs
        spans = [
            (k, n, kind.value, start, min(start + chunk, total))
            for start in range(0, total, chunk)
        ]
        with get_context("fork").Pool(jobs) as pool:
            parts = pool.map(_image_chunk, spans)
        images = [row for part in parts for row in part]
    else:
        actions = _generator_actions(kind, k, n)
        images = [
            tuple(
                _code_of(k, apply_map_add(vals, idx_map, add, k))
                for idx_map, add in actions
            )
            for vals in all_tables(k, n)
        ]

    parent = list(range(total))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for code, row in enumerate(images):
        for image in row:
            ra, rb = find(code), find(image)
            if ra != rb:
                if rb < ra:
                    ra, rb = rb, ra
                parent[rb] = ra

    groups: dict[int, list[int]] = {}
    for code in range(total):
        groups.setdefault(find(code), []).append(code)
    classes = tuple(
        PartitionClass(pos + 1, len(members), members[0], tuple(members))
        for pos, members in enumerate(
            sorted(groups.values(), key=lambda g: g[0])
        )
    )
    return Partition(k, n, f"orbits:{kind.value}", classes)


def orbit_of(
    f: FunctionTable, kind: SubgroupKind, limit: int = 10**6
) -> frozenset[int]:
    """Codes of the orbit of one function under the subgroup."""
    kind = SubgroupKind(kind)
    actions = _generator_actions(kind, f.k, f.n)
    seen = {f.values}
    frontier = [f.values]
    while frontier:
        vals = frontier.pop()
        for idx_map, add in actions:
            image = apply_map_add(vals, idx_map, add, f.k)
            if image not in seen:
                if len(seen) >= limit:
                    raise ValueError(f"orbit exceeds {limit} functions")
                seen.add(image)
                frontier.append(image)
    return frozenset(_code_of(f.k, vals) for vals in seen)
