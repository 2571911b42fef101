"""Algebraic decision diagrams over Boolean variables with real terminals.

Nodes live in a :class:`Store` (an arena plus a unique table), so two
structurally identical reduced diagrams built in the same store share one
node id.  :class:`Add` is a thin handle pairing a root id with its store.
"""

import math
import sys

from .exceptions import StoreMismatch, UnknownVariable

_TERMINAL_LEVEL = sys.maxsize


class Store:
    """Node arena for ADDs over variables ``1..num_vars``.

    ``order`` maps each variable to its rank in the diagram order; lower ranks
    sit closer to the root.  It may be a :class:`~addcount.ordering.VarOrder`,
    a mapping, or ``None`` for the identity order.
    """

    def __init__(self, num_vars, order=None):
        self.num_vars = num_vars
        # apply recursion descends one frame per variable level
        if sys.getrecursionlimit() < 3 * num_vars + 1000:
            sys.setrecursionlimit(3 * num_vars + 1000)
        if order is None:
            ranks = {x: x for x in range(1, num_vars + 1)}
        else:
            ranks = {x: order[x] for x in range(1, num_vars + 1)}
        if len(set(ranks.values())) != len(ranks):
            raise ValueError("diagram order is not injective")
        self._rank = ranks

        # Parallel arrays indexed by node id.
        self._var = []
        self._level = []
        self._lo = []
        self._hi = []
        self._value = []

        self._unique = {}
        self._terminals = {}
        self._product_cache = {}
        self._sum_cache = {}
        self._project_cache = {}
        self._restrict_cache = {}

        self.zero = self._terminal(0.0)
        self.one = self._terminal(1.0)

    def __len__(self):
        return len(self._var)

    def rank(self, var):
        try:
            return self._rank[var]
        except KeyError:
            raise UnknownVariable(var) from None

    def clear_caches(self):
        self._product_cache.clear()
        self._sum_cache.clear()
        self._project_cache.clear()
        self._restrict_cache.clear()

    # -- node construction -------------------------------------------------

    def _terminal(self, value):
        value = float(value)
        if math.isnan(value):
            raise ValueError("NaN terminal")
        if value == 0.0:
            value = 0.0  # fold -0.0
        node = self._terminals.get(value)
        if node is None:
            node = len(self._var)
            self._var.append(0)
            self._level.append(_TERMINAL_LEVEL)
            self._lo.append(-1)
            self._hi.append(-1)
            self._value.append(value)
            self._terminals[value] = node
        return node

    def _mk(self, var, lo, hi):
        if lo == hi:
            return lo
        key = (var, lo, hi)
        node = self._unique.get(key)
        if node is None:
            node = len(self._var)
            self._var.append(var)
            self._level.append(self._rank[var])
            self._lo.append(lo)
            self._hi.append(hi)
            self._value.append(None)
            self._unique[key] = node
        return node

    def is_terminal(self, node):
        return self._level[node] == _TERMINAL_LEVEL

    def node_var(self, node):
        return self._var[node] if self._level[node] != _TERMINAL_LEVEL else None

    def node_children(self, node):
        return self._lo[node], self._hi[node]

    def node_value(self, node):
        return self._value[node]

    # -- public constructors ----------------------------------------------

    def constant(self, value):
        return Add(self, self._terminal(value))

    def literal(self, var, positive=True):
        self.rank(var)
        if positive:
            return Add(self, self._mk(var, self.zero, self.one))
        return Add(self, self._mk(var, self.one, self.zero))

    def decision(self, var, lo, hi):
        """ADD for ``if var then hi else lo``; ``lo`` and ``hi`` may be reals or ADDs."""
        lo = lo if isinstance(lo, Add) else self.constant(lo)
        hi = hi if isinstance(hi, Add) else self.constant(hi)
        self._check(lo)
        self._check(hi)
        return (self.literal(var, False) * lo) + (self.literal(var, True) * hi)

    def _check(self, a):
        if a.store is not self:
            raise StoreMismatch("ADD belongs to a different store")

    # -- apply ---------------------------------------------------------------

    def _product(self, f, g):
        zero, one = self.zero, self.one
        if f == zero or g == zero:
            return zero
        if f == one:
            return g
        if g == one:
            return f
        if f > g:
            f, g = g, f
        key = (f, g)
        cached = self._product_cache.get(key)
        if cached is not None:
            return cached
        level = self._level
        lf, lg = level[f], level[g]
        if lf == _TERMINAL_LEVEL and lg == _TERMINAL_LEVEL:
            result = self._terminal(self._value[f] * self._value[g])
        elif lf == lg:
            result = self._mk(self._var[f],
                              self._product(self._lo[f], self._lo[g]),
                              self._product(self._hi[f], self._hi[g]))
        elif lf < lg:
            result = self._mk(self._var[f],
                              self._product(self._lo[f], g),
                              self._product(self._hi[f], g))
        else:
            result = self._mk(self._var[g],
                              self._product(f, self._lo[g]),
                              self._product(f, self._hi[g]))
        self._product_cache[key] = result
        return result

    def _sum(self, f, g):
        zero = self.zero
        if f == zero:
            return g
        if g == zero:
            return f
        if f > g:
            f, g = g, f
        key = (f, g)
        cached = self._sum_cache.get(key)
        if cached is not None:
            return cached
        level = self._level
        lf, lg = level[f], level[g]
        if lf == _TERMINAL_LEVEL and lg == _TERMINAL_LEVEL:
            result = self._terminal(self._value[f] + self._value[g])
        elif lf == lg:
            result = self._mk(self._var[f],
                              self._sum(self._lo[f], self._lo[g]),
                              self._sum(self._hi[f], self._hi[g]))
        elif lf < lg:
            result = self._mk(self._var[f],
                              self._sum(self._lo[f], g),
                              self._sum(self._hi[f], g))
        else:
            result = self._mk(self._var[g],
                              self._sum(f, self._lo[g]),
                              self._sum(f, self._hi[g]))
        self._sum_cache[key] = result
        return result

    def _restrict(self, f, var, level, value):
        if self._level[f] > level:
            return f
        key = (f, var, value)
        cached = self._restrict_cache.get(key)
        if cached is not None:
            return cached
        if self._var[f] == var:
            result = self._hi[f] if value else self._lo[f]
        else:
            result = self._mk(self._var[f],
                              self._restrict(self._lo[f], var, level, value),
                              self._restrict(self._hi[f], var, level, value))
        self._restrict_cache[key] = result
        return result

    def _project(self, f, var, level):
        if self._level[f] > level:
            # f does not depend on var: both branches contribute f
            return self._sum(f, f)
        key = (f, var)
        cached = self._project_cache.get(key)
        if cached is not None:
            return cached
        if self._var[f] == var:
            result = self._sum(self._lo[f], self._hi[f])
        else:
            result = self._mk(self._var[f],
                              self._project(self._lo[f], var, level),
                              self._project(self._hi[f], var, level))
        self._project_cache[key] = result
        return result

    # -- traversal -----------------------------------------------------------

    def reachable(self, root):
        """Node ids reachable from ``root`` (including terminals), in DFS preorder."""
        seen = {root}
        stack = [root]
        out = []
        lo, hi, level = self._lo, self._hi, self._level
        while stack:
            n = stack.pop()
            out.append(n)
            if level[n] != _TERMINAL_LEVEL:
                for c in (hi[n], lo[n]):
                    if c not in seen:
                        seen.add(c)
                        stack.append(c)
        return out


class Add:
    """Handle to a reduced, ordered ADD rooted at ``root`` in ``store``."""

    __slots__ = ("store", "root")

    def __init__(self, store, root):
        self.store = store
        self.root = root

    def __eq__(self, other):
        if not isinstance(other, Add):
            return NotImplemented
        return self.store is other.store and self.root == other.root

    def __hash__(self):
        return hash((id(self.store), self.root))

    def __repr__(self):
        if self.is_constant:
            return f"Add(const={self.value})"
        return f"Add(root={self.root}, vars={sorted(self.vars())})"

    def __mul__(self, other):
        return product(self, other)

    def __add__(self, other):
        return sum_(self, other)

    @property
    def is_constant(self):
        return self.store.is_terminal(self.root)

    @property
    def value(self):
        """Terminal value of a constant ADD."""
        if not self.is_constant:
            raise ValueError("ADD is not constant")
        return self.store.node_value(self.root)

    def vars(self):
        return vars_(self)

    def node_count(self):
        return node_count(self)

    def terminal_values(self):
        s = self.store
        return [s.node_value(n) for n in s.reachable(self.root) if s.is_terminal(n)]

    def to_dot(self, name="add"):
        return to_dot(self, name)


def _same_store(a, b):
    if a.store is not b.store:
        raise StoreMismatch("operands belong to different stores")
    return a.store


def constant(store, value):
    return store.constant(value)


def literal(store, var, positive=True):
    return store.literal(var, positive)


def product(a, b):
    """Pointwise product; the result ranges over the union of both domains."""
    s = _same_store(a, b)
    return Add(s, s._product(a.root, b.root))


def sum_(a, b):
    s = _same_store(a, b)
    return Add(s, s._sum(a.root, b.root))


def restrict(a, var, value):
    s = a.store
    level = s.rank(var)
    return Add(s, s._restrict(a.root, var, level, 1 if value else 0))


def project(a, var):
    """Sum out ``var``: ``a|var=0 + a|var=1``.

    ``var`` is always treated as part of ``a``'s domain, so projecting a
    variable that ``a`` does not depend on doubles it.
    """
    s = a.store
    level = s.rank(var)
    return Add(s, s._project(a.root, var, level))


def evaluate(a, assignment):
    """Value of ``a`` under the assignment that sets exactly ``assignment`` true."""
    s = a.store
    n = a.root
    while not s.is_terminal(n):
        lo, hi = s.node_children(n)
        n = hi if s.node_var(n) in assignment else lo
    return s.node_value(n)


def vars_(a):
    s = a.store
    return {s.node_var(n) for n in s.reachable(a.root) if not s.is_terminal(n)}


def node_count(a):
    return len(a.store.reachable(a.root))


def to_dot(a, name="add"):
    s = a.store
    lines = [f"digraph {name} {{"]
    for n in s.reachable(a.root):
        if s.is_terminal(n):
            lines.append(f'  n{n} [shape=box, label="{s.node_value(n):g}"];')
        else:
            lo, hi = s.node_children(n)
            lines.append(f'  n{n} [label="x{s.node_var(n)}"];')
            lines.append(f"  n{n} -> n{lo} [style=dashed];")
            lines.append(f"  n{n} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"
