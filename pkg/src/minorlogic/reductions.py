"""The two table reductions and the quantities they induce.

Assigning a constant to an essential variable yields a simple subfunction;
identifying one essential variable with another yields a simple
identification minor.  Both keep the full variable frame (the touched
variable merely turns fictive).  Iterating the first reduction gives the
subfunction set Sub(f) and the separable sets Sep(f); iterating the second
gives the minor set Mnr(f), the arity gap, and the unary normal form that
every maximal identification chain reaches.

Conventions calibrated against the shipped reference fixtures:
  * Sub(f) contains f itself and distinguishes members literally, as
    tables on the full frame.
  * Mnr(f) excludes f and merges members that are equal up to variable
    permutation and fictive variables.
"""

from dataclasses import dataclass
from itertools import combinations

from . import maps
from .fncore import (
    CanonicalForm,
    CatalogueCode,
    FunctionTable,
    _canonical_key,
    _code_of,
    _ess_mask,
)
from .kernels import apply_map, ess_mask


@dataclass(frozen=True)
class SubfunctionSet:
    """Closure of a function under assigning constants to essential
    variables; members are literal tables on the full frame, f included."""

    function: FunctionTable
    members: frozenset[FunctionTable]

    @property
    def count(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class MinorSet:
    """Classes (up to variable permutation and fictive variables) of all
    proper iterated identification minors; by_ess[m] counts classes with
    exactly m essential variables."""

    function: FunctionTable
    classes: frozenset[CanonicalForm]
    by_ess: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.classes)


def _require_essential(f: FunctionTable, i: int, mask: int) -> None:
    if not 1 <= i <= f.n:
        raise ValueError(f"variable x{i} outside x1..x{f.n}")
    if not mask >> (i - 1) & 1:
        raise ValueError(f"variable x{i} is not essential")


def subfunction(f: FunctionTable, i: int, c: int) -> FunctionTable:
    """f with the constant c assigned to the essential variable x_i."""
    mask = _ess_mask(f.k, f.n, f.values)
    _require_essential(f, i, mask)
    if not 0 <= c < f.k:
        raise ValueError(f"constant {c} outside Z_{f.k}")
    vals = apply_map(f.values, maps.fix_map(f.k, f.n, i - 1, c))
    return FunctionTable._wrap(f.k, f.n, vals)


def minor(f: FunctionTable, i: int, j: int) -> FunctionTable:
    """The simple identification minor: every use of x_i replaced by x_j."""
    if i == j:
        raise ValueError("identification needs two distinct variables")
    mask = _ess_mask(f.k, f.n, f.values)
    _require_essential(f, i, mask)
    _require_essential(f, j, mask)
    vals = apply_map(f.values, maps.identify_map(f.k, f.n, i - 1, j - 1))
    return FunctionTable._wrap(f.k, f.n, vals)


def nof(f: FunctionTable) -> FunctionTable:
    """The diagonal a -> f(a, ..., a) as a unary function."""
    return FunctionTable._wrap(f.k, 1, apply_map(f.values, maps.diag_map(f.k, f.n)))


def normal_form_via_chain(f: FunctionTable, strategy=None) -> FunctionTable:
    """Run identifications to exhaustion, one pair per step.

    ``strategy`` picks the pair to collapse from the available essential
    pairs (default: the first).  Whatever the strategy, the terminal is
    equivalent to nof(f); callers compare modulo fictive variables.
    Functions that are already normal (at most one essential variable)
    are returned unchanged.
    """
    if strategy is None:
        strategy = lambda table, pairs: pairs[0]
    current = f
    while True:
        pairs = essential_pairs(current)
        if not pairs:
            return current
        i, j = strategy(current, pairs)
        current = minor(current, i, j)


def essential_pairs(f: FunctionTable) -> list[tuple[int, int]]:
    """Pairs (i, j), j < i, of essential variable indices."""
    mask = _ess_mask(f.k, f.n, f.values)
    ess = [i + 1 for i in range(f.n) if mask >> i & 1]
    return [(i, j) for j, i in combinations(ess, 2)]


def all_subfunctions(f: FunctionTable) -> SubfunctionSet:
    k, n = f.k, f.n
    seen = {f.values}
    frontier = [f.values]
    while frontier:
        vals = frontier.pop()
        mask = ess_mask(vals, k, n)
        for var in range(n):
            if not mask >> var & 1:
                continue
            for c in range(k):
                child = apply_map(vals, maps.fix_map(k, n, var, c))
                if child not in seen:
                    seen.add(child)
                    frontier.append(child)
    members = frozenset(FunctionTable._wrap(k, n, v) for v in seen)
    return SubfunctionSet(f, members)


def separable_sets(f: FunctionTable) -> set[frozenset[int]]:
    """Essential-variable sets of the nonconstant subfunctions of f."""
    k, n = f.k, f.n
    out = set()
    for g in all_subfunctions(f).members:
        mask = _ess_mask(k, n, g.values)
        if mask:
            out.add(frozenset(i + 1 for i in range(n) if mask >> i & 1))
    return out


def strongly_essential(f: FunctionTable) -> set[int]:
    """Variables removable, and removable alone, by one assignment."""
    k, n = f.k, f.n
    mask = _ess_mask(k, n, f.values)
    out = set()
    for var in range(n):
        if not mask >> var & 1:
            continue
        target = mask & ~(1 << var)
        for c in range(k):
            child = apply_map(f.values, maps.fix_map(k, n, var, c))
            if ess_mask(child, k, n) == target:
                out.add(var + 1)
                break
    return out


def arity_gap(f: FunctionTable) -> int:
    """Drop in essential arity forced by the best single identification.

    A minor of maximal essential arity is always a simple one, so only
    the simple minors need inspecting.
    """
    k, n = f.k, f.n
    mask = _ess_mask(k, n, f.values)
    m = mask.bit_count()
    if m < 2:
        raise ValueError("arity gap needs at least two essential variables")
    best = 0
    for i, j in essential_pairs(f):
        child = apply_map(f.values, maps.identify_map(k, n, i - 1, j - 1))
        best = max(best, ess_mask(child, k, n).bit_count())
    return m - best


def minors_closure(f: FunctionTable) -> MinorSet:
    """All proper iterated minors, merged up to equivalence.

    The search walks canonical representatives: minors of equivalent
    tables are equivalent, so expanding one representative per class is
    enough.
    """
    k = f.k
    classes: set[tuple[int, bytes]] = set()
    frontier: list[tuple[int, bytes]] = []

    def expand(n_frame: int, vals: bytes) -> None:
        mask = ess_mask(vals, k, n_frame)
        live = [t for t in range(n_frame) if mask >> t & 1]
        for j0, i0 in combinations(live, 2):
            child = apply_map(vals, maps.identify_map(k, n_frame, i0, j0))
            key = _canonical_key(k, n_frame, child)
            if key not in classes:
                classes.add(key)
                frontier.append(key)

    expand(f.n, f.values)
    while frontier:
        m, cvals = frontier.pop()
        if m >= 2:
            expand(m, cvals)

    by_ess = [0] * f.ess
    forms = set()
    for m, cvals in classes:
        by_ess[m] += 1
        forms.add(CanonicalForm(m, CatalogueCode(k, m, _code_of(k, cvals))))
    return MinorSet(f, frozenset(forms), tuple(by_ess))


def eq1_family(k: int, n: int, a0: int, dis_coeffs) -> FunctionTable:
    """Function equal to a0 on points with a repeated coordinate and to a
    prescribed coefficient on each all-distinct point.

    ``dis_coeffs`` is either one constant for every all-distinct point or
    a mapping from those points to constants.  At least two distinct
    values must occur overall, so the result is never constant.
    """
    if n < 2:
        raise ValueError("need at least two variables")
    if n > k:
        raise ValueError(f"no all-distinct points in Z_{k}^{n}")
    if not 0 <= a0 < k:
        raise ValueError(f"constant {a0} outside Z_{k}")
    dis = [p for p in maps.iter_points(k, n) if len(set(p)) == n]
    if isinstance(dis_coeffs, int):
        coeffs = {p: dis_coeffs for p in dis}
    else:
        coeffs = {tuple(p): v for p, v in dis_coeffs.items()}
        missing = [p for p in dis if p not in coeffs]
        if missing:
            raise ValueError(f"coefficient missing for {len(missing)} points")
    if any(not 0 <= v < k for v in coeffs.values()):
        raise ValueError(f"coefficients must lie in Z_{k}")
    if len(set(coeffs.values()) | {a0}) < 2:
        raise ValueError("all coefficients equal; the table would be constant")
    vals = bytes(
        coeffs[p] if len(set(p)) == n else a0 for p in maps.iter_points(k, n)
    )
    return FunctionTable._wrap(k, n, vals)
