"""CNF formulas with literal weights: data model, DIMACS I/O, clause ADDs."""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations

from .dd import Add
from .exceptions import CnfParseError, UnknownVariable

log = logging.getLogger(__name__)


class WeightFormat(str, Enum):
    UNWEIGHTED = "unweighted"
    CACHET = "cachet"
    LITPAIRS = "litpairs"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        aliases = {"literalpairs": "litpairs", "literal-pairs": "litpairs"}
        name = aliases.get(str(name).lower(), str(name).lower())
        return cls(name)


@dataclass(frozen=True)
class Clause:
    """A disjunction of DIMACS literals (nonzero ints, sign is polarity)."""

    literals: tuple

    def __post_init__(self):
        lits = tuple(dict.fromkeys(int(l) for l in self.literals))
        if any(l == 0 for l in lits):
            raise ValueError("literal 0 is not allowed")
        object.__setattr__(self, "literals", lits)

    def __len__(self):
        return len(self.literals)

    def __iter__(self):
        return iter(self.literals)

    @property
    def variables(self):
        return frozenset(abs(l) for l in self.literals)

    @property
    def is_tautology(self):
        lits = set(self.literals)
        return any(-l in lits for l in lits)


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple = ()

    def __post_init__(self):
        clauses = tuple(c if isinstance(c, Clause) else Clause(tuple(c)) for c in self.clauses)
        for c in clauses:
            for l in c.literals:
                if abs(l) > self.num_vars:
                    raise ValueError(f"literal {l} exceeds variable count {self.num_vars}")
        object.__setattr__(self, "clauses", clauses)

    @property
    def variables(self):
        """Variables occurring in at least one clause."""
        out = set()
        for c in self.clauses:
            out.update(c.variables)
        return out

    @property
    def has_empty_clause(self):
        return any(len(c) == 0 for c in self.clauses)


@dataclass(frozen=True)
class WeightFunction:
    """Literal weights: ``pos[x]`` is W+(x), ``neg[x]`` is W-(x)."""

    pos: dict = field(default_factory=dict)
    neg: dict = field(default_factory=dict)

    def __post_init__(self):
        if set(self.pos) != set(self.neg):
            raise ValueError("positive and negative weights cover different variables")
        for w in (*self.pos.values(), *self.neg.values()):
            if not math.isfinite(w):
                raise ValueError(f"non-finite weight {w}")

    @classmethod
    def unit(cls, num_vars):
        return cls({x: 1.0 for x in range(1, num_vars + 1)},
                   {x: 1.0 for x in range(1, num_vars + 1)})

    def __len__(self):
        return len(self.pos)

    def total(self, var):
        return self.pos[var] + self.neg[var]


def parse_cnf(text, weight_format=WeightFormat.UNWEIGHTED):
    """Parse DIMACS CNF text into ``(CnfFormula, WeightFunction)``.

    ``text`` may be a string or an iterable of lines.  Weight lines start with
    ``w``; how they are read depends on ``weight_format``:

    * ``unweighted``: weight lines are ignored, every literal weighs 1.
    * ``cachet``: ``w <var> <p>`` sets W+=p, W-=1-p; ``p = -1`` sets both to 1.
    * ``litpairs``: ``w <lit> <weight>``; the sign of ``lit`` picks W+ or W-.
      Polarities without a weight line default to 1.
    """
    fmt = WeightFormat.parse(weight_format)
    lines = text.splitlines() if isinstance(text, str) else text

    num_vars = declared_clauses = None
    clauses = []
    current = []
    pos, neg = {}, {}
    ignored_weights = 0

    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise CnfParseError("duplicate header", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfParseError(f"malformed header {line!r}", lineno)
            try:
                num_vars, declared_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise CnfParseError(f"malformed header {line!r}", lineno) from None
            if num_vars < 0 or declared_clauses < 0:
                raise CnfParseError(f"malformed header {line!r}", lineno)
            continue
        if num_vars is None:
            raise CnfParseError("content before 'p cnf' header", lineno)
        if line.startswith("w"):
            if fmt is WeightFormat.UNWEIGHTED:
                ignored_weights += 1
                continue
            _parse_weight_line(line, lineno, fmt, num_vars, pos, neg)
            continue
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise CnfParseError(f"bad literal {tok!r}", lineno) from None
            if lit == 0:
                clauses.append(Clause(tuple(current)))
                current = []
            elif abs(lit) > num_vars:
                raise CnfParseError(f"literal {lit} out of range 1..{num_vars}", lineno)
            else:
                current.append(lit)

    if num_vars is None:
        raise CnfParseError("missing 'p cnf' header")
    if current:
        raise CnfParseError("last clause is missing its terminating 0")
    if len(clauses) != declared_clauses:
        log.warning("header declares %d clauses, found %d", declared_clauses, len(clauses))
    if ignored_weights:
        log.warning("ignored %d weight lines in unweighted mode", ignored_weights)

    weights = WeightFunction(
        {x: pos.get(x, 1.0) for x in range(1, num_vars + 1)},
        {x: neg.get(x, 1.0) for x in range(1, num_vars + 1)},
    )
    return CnfFormula(num_vars, tuple(clauses)), weights


def _parse_weight_line(line, lineno, fmt, num_vars, pos, neg):
    parts = line.split()
    if len(parts) == 4 and parts[3] == "0":
        parts = parts[:3]
    if len(parts) != 3:
        raise CnfParseError(f"malformed weight line {line!r}", lineno)
    try:
        lit, w = int(parts[1]), float(parts[2])
    except ValueError:
        raise CnfParseError(f"malformed weight line {line!r}", lineno) from None
    if lit == 0 or abs(lit) > num_vars:
        raise CnfParseError(f"weight for unknown variable {lit}", lineno)
    if not math.isfinite(w):
        raise CnfParseError(f"non-finite weight {parts[2]}", lineno)
    if fmt is WeightFormat.CACHET:
        if lit < 0:
            raise CnfParseError("cachet weights take a variable, not a literal", lineno)
        if w == -1:
            pos[lit], neg[lit] = 1.0, 1.0
        else:
            pos[lit], neg[lit] = w, 1.0 - w
    elif lit > 0:
        pos[lit] = w
    else:
        neg[-lit] = w


def read_cnf(path, weight_format=WeightFormat.UNWEIGHTED):
    with open(path) as fh:
        return parse_cnf(fh, weight_format)


def to_dimacs(formula, weights=None):
    """Serialize to DIMACS; weights, if given, are written as literal-pair lines."""
    out = [f"p cnf {formula.num_vars} {len(formula.clauses)}"]
    for c in formula.clauses:
        out.append(" ".join(map(str, (*c.literals, 0))))
    if weights is not None:
        for x in sorted(weights.pos):
            out.append(f"w {x} {weights.pos[x]!r}")
            out.append(f"w {-x} {weights.neg[x]!r}")
    return "\n".join(out) + "\n"


def clause_add(clause, store):
    """Indicator ADD of a clause; tautologies collapse to the constant 1."""
    if clause.is_tautology:
        return store.constant(1)
    # Build bottom-up in reverse diagram order: the falsifying branch of each
    # literal continues with the rest of the clause.
    lits = sorted(clause.literals, key=lambda l: store.rank(abs(l)), reverse=True)
    node = store.zero
    for l in lits:
        var = abs(l)
        store.rank(var)
        if l > 0:
            node = store._mk(var, node, store.one)
        else:
            node = store._mk(var, store.one, node)
    return Add(store, node)


def weight_add(var, weights, store):
    """Two-leaf ADD mapping {} to W-(var) and {var} to W+(var)."""
    if var not in weights.pos:
        raise UnknownVariable(var)
    lo = store.constant(weights.neg[var]).root
    hi = store.constant(weights.pos[var]).root
    store.rank(var)
    return Add(store, store._mk(var, lo, hi))


def gaifman_graph(formula):
    """Primal graph as an adjacency dict over ``1..num_vars``."""
    adj = {x: set() for x in range(1, formula.num_vars + 1)}
    for c in formula.clauses:
        for x, y in combinations(sorted(c.variables), 2):
            adj[x].add(y)
            adj[y].add(x)
    return adj
