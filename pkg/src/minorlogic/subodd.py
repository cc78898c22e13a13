"""Ordered decision diagrams of subfunctions and the implementation count.

An ordered diagram queries variables in a fixed order, skipping any that
the current subfunction no longer depends on, and shares nodes between
equal subfunctions.  Each root-to-terminal walk is an implementation: the
sequence of (variable, constant) assignments made on the way plus the
constant the walk ends at.  imp(f) counts the distinct assignment
sequences collected over the diagrams of all orderings of the essential
variables; two walks with the same assignments in a different order count
separately.  That sequence convention is the one both shipped reference
values (48 and 28) pin down.
"""

from typing import NamedTuple

from itertools import permutations

from . import maps
from .fncore import FunctionTable, essential_vars
from .kernels import apply_map, ess_mask


class Implementation(NamedTuple):
    steps: tuple[tuple[int, int], ...]  # (variable index, assigned constant)
    value: int


class OrderedDiagram:
    """Reduced subfunction diagram of f under one variable ordering."""

    def __init__(self, f: FunctionTable, ordering: tuple[int, ...]):
        self.function = f
        self.ordering = ordering
        k, n = f.k, f.n
        rank = {var: pos for pos, var in enumerate(ordering)}
        # nodes: table -> (queried variable, children per constant)
        self.nodes: dict[bytes, tuple[int, tuple[bytes, ...]]] = {}
        self.terminals: dict[bytes, int] = {}
        stack = [f.values]
        while stack:
            vals = stack.pop()
            if vals in self.nodes or vals in self.terminals:
                continue
            mask = ess_mask(vals, k, n)
            if mask == 0:
                self.terminals[vals] = vals[0]
                continue
            var = min(
                (i + 1 for i in range(n) if mask >> i & 1), key=rank.__getitem__
            )
            children = tuple(
                apply_map(vals, maps.fix_map(k, n, var - 1, c)) for c in range(k)
            )
            self.nodes[vals] = (var, children)
            stack.extend(children)

    @property
    def node_count(self) -> int:
        return len(self.nodes) + len(self.terminals)

    def paths(self) -> list[Implementation]:
        """Every root-to-terminal assignment sequence."""
        out: list[Implementation] = []

        def walk(vals: bytes, steps: tuple[tuple[int, int], ...]) -> None:
            if vals in self.terminals:
                out.append(Implementation(steps, self.terminals[vals]))
                return
            var, children = self.nodes[vals]
            for c, child in enumerate(children):
                walk(child, steps + ((var, c),))

        walk(self.function.values, ())
        return out

    def path_count(self) -> int:
        counts: dict[bytes, int] = {}

        def count(vals: bytes) -> int:
            if vals in self.terminals:
                return 1
            if vals not in counts:
                counts[vals] = sum(count(c) for c in self.nodes[vals][1])
            return counts[vals]

        return count(self.function.values)


def build_odd(f: FunctionTable, ordering) -> OrderedDiagram:
    ordering = tuple(ordering)
    if sorted(ordering) != sorted(essential_vars(f)):
        raise ValueError(
            f"ordering {ordering} is not a permutation of the essential "
            f"variables {sorted(essential_vars(f))}"
        )
    return OrderedDiagram(f, ordering)


def implementations(f: FunctionTable) -> frozenset[Implementation]:
    """Distinct implementations over all orderings; empty for constants."""
    ess = sorted(essential_vars(f))
    out: set[Implementation] = set()
    for ordering in permutations(ess):
        out.update(OrderedDiagram(f, ordering).paths())
    return frozenset(out)


def imp_count(f: FunctionTable) -> int:
    return len(implementations(f))
