"""Equivalence relations on whole function spaces and their partitions.

Three relations compare functions by their reduction behaviour:

  * cmr-equivalence: same essential arity and, under a single relabelling
    of the essential variables, pairwise cmr-equivalent simple minors.
    Decided by a recursive canonical signature so that classifying a
    space is one pass plus grouping.
  * mnr-equivalence: the same number of minor classes at every essential
    arity (sequences compared with trailing zeros ignored, so functions
    of different arity can be equivalent).
  * nof-equivalence: literally equal unary diagonals.

partition_space() enumerates every function of P_k^n by catalogue code
and groups by the chosen invariant; 'equiv' groups by equality up to
variable permutation and fictive variables.
"""

import csv
import io
from dataclasses import dataclass
from multiprocessing import get_context

from . import caches, maps
from .fncore import (
    FunctionTable,
    _canonical_key,
    _code_of,
    _vals_of_code,
    all_tables,
)
from .kernels import apply_map
from .reductions import minors_closure, nof

RELATIONS = ("cmr", "mnr", "nof", "equiv")
DEFAULT_MAX_FUNCTIONS = 2**26

# A cmr signature is a nested tuple: (m,) for a class with m <= 1
# essential variables, else (m, child, child, ...) with one child
# signature per essential pair (j < i), pairs in row order, minimized
# lexicographically over all relabellings of the m essential variables.
Signature = tuple

_sig_cache: dict[tuple[int, int, bytes], Signature] = {}
caches.register(_sig_cache.clear)


def _pair_count(m: int) -> int:
    return m * (m - 1) // 2


def _sig_of_key(k: int, key: tuple[int, bytes]) -> Signature:
    m, cvals = key
    if m <= 1:
        return (m,)
    full_key = (k, m, cvals)
    hit = _sig_cache.get(full_key)
    if hit is not None:
        return hit
    best = None
    for pm in maps.all_perm_maps(k, m):
        relabeled = apply_map(cvals, pm)
        children = []
        for i0 in range(m):
            for j0 in range(i0):
                child = apply_map(
                    relabeled, maps.identify_map(k, m, i0, j0)
                )
                children.append(_sig_of_key(k, _canonical_key(k, m, child)))
        cand = (m, *children)
        if best is None or cand < best:
            best = cand
    return _sig_cache.setdefault(full_key, best)


def cmr_signature(f: FunctionTable) -> Signature:
    return _sig_of_key(f.k, _canonical_key(f.k, f.n, f.values))


def cmr_equivalent(f: FunctionTable, g: FunctionTable) -> bool:
    if f.k != g.k:
        raise ValueError(f"radix mismatch: {f.k} vs {g.k}")
    return cmr_signature(f) == cmr_signature(g)


def mnr_signature(f: FunctionTable) -> tuple[int, ...]:
    """Minor-class counts by essential arity, one entry per m < ess(f)."""
    return minors_closure(f).by_ess


def _strip(seq: tuple[int, ...]) -> tuple[int, ...]:
    end = len(seq)
    while end and seq[end - 1] == 0:
        end -= 1
    return seq[:end]


def mnr_equivalent(f: FunctionTable, g: FunctionTable) -> bool:
    if f.k != g.k:
        raise ValueError(f"radix mismatch: {f.k} vs {g.k}")
    return _strip(mnr_signature(f)) == _strip(mnr_signature(g))


def nof_signature(f: FunctionTable) -> int:
    """Catalogue code of the diagonal, an exact unary table."""
    return nof(f).code


def nof_equivalent(f: FunctionTable, g: FunctionTable) -> bool:
    if f.k != g.k:
        raise ValueError(f"radix mismatch: {f.k} vs {g.k}")
    return nof_signature(f) == nof_signature(g)


@dataclass(frozen=True)
class PartitionClass:
    class_id: int
    size: int
    representative: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class Partition:
    """Exact partition of P_k^n; classes ordered by smallest member code."""

    k: int
    n: int
    relation: str
    classes: tuple[PartitionClass, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_of(self, code: int) -> PartitionClass:
        for cls in self.classes:
            if code in cls.members:
                return cls
        raise KeyError(code)


def _signature_for(relation: str, k: int, n: int, vals: bytes):
    if relation == "cmr":
        return _sig_of_key(k, _canonical_key(k, n, vals))
    if relation == "mnr":
        return _strip(
            minors_closure(FunctionTable._wrap(k, n, vals)).by_ess
        )
    if relation == "nof":
        return _code_of(k, apply_map(vals, maps.diag_map(k, n)))
    if relation == "equiv":
        return _canonical_key(k, n, vals)
    raise ValueError(f"unknown relation {relation!r}; choose from {RELATIONS}")


def _signature_chunk(args) -> list:
    k, n, relation, start, stop = args
    return [
        _signature_for(relation, k, n, _vals_of_code(k, n, code))
        for code in range(start, stop)
    ]


def check_space_guard(k: int, n: int, max_functions: int | None) -> int:
    total = k ** (k**n)
    if max_functions is not None and total > max_functions:
        raise ValueError(
            f"P_{k}^{n} holds {total} functions, above the guard of "
            f"{max_functions}; raise or disable the guard to proceed"
        )
    return total


def partition_space(
    k: int,
    n: int,
    relation: str,
    *,
    jobs: int = 1,
    max_functions: int | None = DEFAULT_MAX_FUNCTIONS,
) -> Partition:
    """Group every function of P_k^n by the invariant of ``relation``.

    ``jobs`` shards the signature computation across processes; the
    resulting partition is identical for any job count.
    """
    if relation not in RELATIONS:
        raise ValueError(f"unknown relation {relation!r}; choose from {RELATIONS}")
    total = check_space_guard(k, n, max_functions)
    if jobs > 1:
        chunk = (total + jobs - 1) // jobs
        spans = [
            (k, n, relation, start, min(start + chunk, total))
            for start in range(0, total, chunk)
        ]
        with get_context("fork").Pool(jobs) as pool:
            parts = pool.map(_signature_chunk, spans)
        signatures = [sig for part in parts for sig in part]
    else:
        signatures = [
            _signature_for(relation, k, n, vals) for vals in all_tables(k, n)
        ]
    groups: dict = {}
    for code, sig in enumerate(signatures):
        groups.setdefault(sig, []).append(code)
    classes = tuple(
        PartitionClass(pos + 1, len(members), members[0], tuple(members))
        for pos, members in enumerate(sorted(groups.values(), key=lambda g: g[0]))
    )
    return Partition(k, n, relation, classes)


# ---------------------------------------------------------------------------
# export

def partition_rows(partition: Partition, zero_preserving: bool = False) -> list[dict]:
    """Export rows; the filter keeps codes whose value at the all-zero
    point is 0 and drops classes that empty out."""
    size = partition.k ** partition.n
    bound = partition.k ** (size - 1) if zero_preserving else None
    rows = []
    for cls in partition.classes:
        members = cls.members
        if zero_preserving:
            members = tuple(c for c in members if c < bound)
            if not members:
                continue
        rows.append(
            {
                "class_id": cls.class_id,
                "size": len(members),
                "representative": members[0],
                "members": members,
            }
        )
    return rows


def partition_to_json_obj(partition: Partition, zero_preserving: bool = False) -> dict:
    return {
        "k": partition.k,
        "n": partition.n,
        "relation": partition.relation,
        "zero_preserving": zero_preserving,
        "classes": [
            dict(row, members=list(row["members"]))
            for row in partition_rows(partition, zero_preserving)
        ],
    }


def partition_to_csv(partition: Partition, zero_preserving: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["class_id", "size", "representative", "members"])
    for row in partition_rows(partition, zero_preserving):
        writer.writerow(
            [
                row["class_id"],
                row["size"],
                row["representative"],
                ";".join(str(c) for c in row["members"]),
            ]
        )
    return buf.getvalue()
