"""Ring-sum expression parser and miniterm printer.

Grammar (whitespace insignificant, '+' and the circled plus are synonyms):

    expr   := term (('+' | '⊕') term)*
    term   := factor+                      juxtaposition is product mod k
    factor := const | var | var '^' const | '(' expr ')'
    var    := 'x' digits                   1-based variable index
    const  := digits                       value below k

A bare variable evaluates to its value; var^a is the indicator that the
variable equals a (1 if so, else 0).  Sums and products are taken mod k.
Numbers use maximal munch, so multi-digit constants only make sense for
large k; all shipped workloads use single digits.
"""

from .fncore import FunctionTable
from .maps import iter_points

PLUS_CHARS = ("+", "⊕")


class RseError(ValueError):
    """Parse failure; ``position`` is the 0-based offset in the input."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Parser:
    def __init__(self, text: str, k: int, n: int):
        self.text = text
        self.k = k
        self.n = n
        self.pos = 0

    def fail(self, message: str, position: int | None = None):
        raise RseError(message, self.pos if position is None else position)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_digits(self) -> tuple[int, int]:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("expected a number")
        return int(self.text[start : self.pos]), start

    def constant(self) -> int:
        value, start = self.take_digits()
        if value >= self.k:
            self.fail(f"literal {value} is not below k = {self.k}", start)
        return value

    def expr(self):
        terms = [self.term()]
        while self.peek() in PLUS_CHARS:
            self.pos += 1
            terms.append(self.term())
        return ("sum", tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.peek() and (self.peek().isdigit() or self.peek() in "x("):
            factors.append(self.factor())
        return ("prod", tuple(factors))

    def factor(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
            return inner
        if ch == "x":
            self.pos += 1
            index, start = self.take_digits()
            if not 1 <= index <= self.n:
                self.fail(f"variable x{index} outside x1..x{self.n}", start)
            if self.peek() == "^":
                self.pos += 1
                return ("ind", index, self.constant())
            return ("var", index)
        if ch.isdigit():
            return ("const", self.constant())
        self.fail("expected a constant, variable, or '('")

    def parse(self):
        tree = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail("unexpected trailing input")
        return tree


def _eval(node, point, k: int) -> int:
    kind = node[0]
    if kind == "sum":
        return sum(_eval(t, point, k) for t in node[1]) % k
    if kind == "prod":
        out = 1
        for factor in node[1]:
            out = out * _eval(factor, point, k) % k
        return out
    if kind == "const":
        return node[1]
    if kind == "var":
        return point[node[1] - 1]
    # indicator
    return 1 if point[node[1] - 1] == node[2] else 0


def parse(text: str, k: int, n: int) -> FunctionTable:
    """Table of a ring-sum expression, evaluated pointwise mod k."""
    if k < 2 or n < 0:
        raise ValueError("need k >= 2 and n >= 0")
    tree = _Parser(text, k, n).parse()
    vals = bytes(_eval(tree, point, k) for point in iter_points(k, n))
    return FunctionTable._wrap(k, n, vals)


def format_miniterms(f: FunctionTable) -> str:
    """Indicator-product expansion: one term per point with nonzero value.

    Round-trips through parse(); coefficients of 1 are left implicit and
    every exponent is written out.
    """
    if f.n == 0:
        return str(f.values[0])
    terms = []
    for point, value in zip(iter_points(f.k, f.n), f.values):
        if value == 0:
            continue
        coeff = "" if value == 1 else str(value)
        terms.append(coeff + "".join(f"x{i + 1}^{a}" for i, a in enumerate(point)))
    return " ⊕ ".join(terms) if terms else "0"
