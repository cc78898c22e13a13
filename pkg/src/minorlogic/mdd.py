"""Minor decomposition trees, minor decision diagrams, and the cmr count.

The decomposition tree expands every essential pair (j < i) of a node into
the simple minor obtained by identifying the pair; it is exponential and
exists for inspection and rendering only.  The decision diagram is its
fixpoint under two reductions: nodes with equivalent labels merge, and so
do the edges between merged nodes, each surviving edge carrying the count
of merged tree edges.  The diagram therefore has one root, the classes of
all proper minors as inner nodes, and a unique terminal (the class of the
unary diagonal).

cmr is the number of identification chains: 1 for at most one essential
variable, 2 for exactly two, otherwise the sum of the children's values
over all essential pairs.  It never touches the tree and is memoized by
canonical form, which is sound because the count is invariant under
variable permutation and fictive variables.
"""

from dataclasses import dataclass, field

from . import caches, maps
from .fncore import (
    CanonicalForm,
    CatalogueCode,
    FunctionTable,
    _canonical_key,
    _code_of,
)
from .kernels import apply_map, ess_mask
from .reductions import essential_pairs, minor


@dataclass
class MdtNode:
    table: FunctionTable
    pair: tuple[int, int] | None  # (i, j) collapsed in the parent, root: None
    order: int  # essential-arity drop relative to the root
    children: list["MdtNode"] = field(default_factory=list)

    @property
    def ess(self) -> int:
        return self.table.ess


@dataclass
class Mdt:
    root: MdtNode
    node_count: int

    def layers(self) -> dict[int, list[MdtNode]]:
        """Nodes grouped by order; layer i holds the order-i minors."""
        out: dict[int, list[MdtNode]] = {}
        stack = [self.root]
        while stack:
            node = stack.pop()
            out.setdefault(node.order, []).append(node)
            stack.extend(node.children)
        return out


@dataclass(frozen=True)
class MddNode:
    form: CanonicalForm
    is_root: bool
    is_terminal: bool

    @property
    def ess(self) -> int:
        return self.form.ess


@dataclass(frozen=True)
class Mdd:
    k: int
    nodes: tuple[MddNode, ...]
    edges: tuple[tuple[int, int, int], ...]  # (source, target, multiplicity)

    @property
    def root(self) -> MddNode:
        return self.nodes[0]


class MdtSizeError(ValueError):
    pass


def build_mdt(f: FunctionTable, node_limit: int = 10**6) -> Mdt:
    """Full decomposition tree; raises MdtSizeError beyond ``node_limit``."""
    root_ess = f.ess
    count = 0

    def grow(table: FunctionTable, pair) -> MdtNode:
        nonlocal count
        count += 1
        if count > node_limit:
            raise MdtSizeError(f"decomposition tree exceeds {node_limit} nodes")
        node = MdtNode(table, pair, root_ess - table.ess)
        for i, j in essential_pairs(table):
            node.children.append(grow(minor(table, i, j), (i, j)))
        return node

    root = grow(f, None)
    return Mdt(root, count)


def build_mdd(f: FunctionTable) -> Mdd:
    """Reduced diagram: root plus one node per minor class.

    Edge multiplicities count, per source class, the essential pairs that
    lead to the target class; the counts agree for every representative
    of the source class.
    """
    k = f.k
    root_key = _canonical_key(k, f.n, f.values)
    adjacency: dict[tuple[int, bytes], dict[tuple[int, bytes], int]] = {}
    stack = [root_key]
    while stack:
        key = stack.pop()
        if key in adjacency:
            continue
        m, cvals = key
        counts: dict[tuple[int, bytes], int] = {}
        if m >= 2:
            for i0 in range(m):
                for j0 in range(i0):
                    child = apply_map(cvals, maps.identify_map(k, m, i0, j0))
                    child_key = _canonical_key(k, m, child)
                    counts[child_key] = counts.get(child_key, 0) + 1
            stack.extend(counts)
        adjacency[key] = counts

    def form_of(key: tuple[int, bytes]) -> CanonicalForm:
        m, cvals = key
        return CanonicalForm(m, CatalogueCode(k, m, _code_of(k, cvals)))

    ordered = [root_key] + sorted(
        (key for key in adjacency if key != root_key),
        key=lambda key: (-key[0], _code_of(k, key[1])),
    )
    index = {key: pos for pos, key in enumerate(ordered)}
    nodes = tuple(
        MddNode(
            form_of(key),
            is_root=key == root_key,
            is_terminal=key[0] <= 1 and key != root_key,
        )
        for key in ordered
    )
    edges = tuple(
        sorted(
            (index[src], index[dst], mult)
            for src, counts in adjacency.items()
            for dst, mult in counts.items()
        )
    )
    return Mdd(k, nodes, edges)


class CmrCache:
    """Insert-or-get memo from canonical forms to cmr values.

    All writers compute equal values for equal keys, so concurrent
    last-writer-wins updates are benign (CPython dict operations are
    atomic under the GIL).
    """

    def __init__(self):
        self._data: dict[tuple[int, int, bytes], int] = {}

    def get(self, key):
        return self._data.get(key)

    def put(self, key, value: int) -> int:
        return self._data.setdefault(key, value)

    def __len__(self) -> int:
        return len(self._data)

    def items(self):
        """(CanonicalForm, value) pairs, for inspection."""
        for (k, m, cvals), value in self._data.items():
            yield CanonicalForm(m, CatalogueCode(k, m, _code_of(k, cvals))), value

    def clear(self) -> None:
        self._data.clear()


_default_cache = CmrCache()
caches.register(_default_cache.clear)


def cmr(f: FunctionTable, cache: CmrCache | None = None) -> int:
    """Number of identification chains of f, memoized across calls."""
    if cache is None:
        cache = _default_cache
    return _cmr_key(f.k, _canonical_key(f.k, f.n, f.values), cache)


def _cmr_key(k: int, key: tuple[int, bytes], cache: CmrCache) -> int:
    m, cvals = key
    if m <= 1:
        return 1
    if m == 2:
        return 2
    full_key = (k, m, cvals)
    hit = cache.get(full_key)
    if hit is not None:
        return hit
    total = 0
    for i0 in range(m):
        for j0 in range(i0):
            child = apply_map(cvals, maps.identify_map(k, m, i0, j0))
            total += _cmr_key(k, _canonical_key(k, m, child), cache)
    return cache.put(full_key, total)


def cmr_direct(f: FunctionTable) -> int:
    """Unmemoized recursion straight from the definition; test oracle."""
    mask = ess_mask(f.values, f.k, f.n)
    m = mask.bit_count()
    if m <= 1:
        return 1
    if m == 2:
        return 2
    live = [t for t in range(f.n) if mask >> t & 1]
    total = 0
    for a, i0 in enumerate(live):
        for j0 in live[:a]:
            child = apply_map(f.values, maps.identify_map(f.k, f.n, i0, j0))
            total += cmr_direct(FunctionTable._wrap(f.k, f.n, child))
    return total


def to_dot(mdd: Mdd) -> str:
    """Deterministic DOT rendering; nodes are ordered by the diagram's
    canonical node order, edge labels show multiplicities above 1."""
    lines = ["digraph mdd {", "  rankdir=LR;"]
    for pos, node in enumerate(mdd.nodes):
        shape = "box" if node.is_terminal else "ellipse"
        peripheries = ", peripheries=2" if node.is_root else ""
        lines.append(
            f'  n{pos} [label="{node.form.code.code} (ess={node.ess})", '
            f"shape={shape}{peripheries}];"
        )
    for src, dst, mult in mdd.edges:
        label = f' [label="{mult}"]' if mult > 1 else ""
        lines.append(f"  n{src} -> n{dst}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"
