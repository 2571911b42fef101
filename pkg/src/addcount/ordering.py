"""Variable-order heuristics over the Gaifman graph.

Every heuristic returns a :class:`VarOrder`, a bijection from variables
``1..n`` onto ranks ``1..n``.  Ties are always broken towards the lowest
variable index so results are reproducible.
"""

import heapq
import random
from enum import Enum


class VarOrder:
    """Bijection ``var -> rank`` over ``1..n``, with the inverse kept alongside."""

    __slots__ = ("_rank", "_sequence")

    def __init__(self, sequence):
        sequence = tuple(sequence)
        n = len(sequence)
        if sorted(sequence) != list(range(1, n + 1)):
            raise ValueError("order must be a permutation of 1..n")
        self._sequence = sequence
        self._rank = {x: i for i, x in enumerate(sequence, 1)}

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_ranks(cls, ranks):
        """Build from a mapping ``var -> rank``."""
        return cls(sorted(ranks, key=ranks.__getitem__))

    def __len__(self):
        return len(self._sequence)

    def __getitem__(self, var):
        return self._rank[var]

    def rank(self, var):
        return self._rank[var]

    def var_at(self, rank):
        return self._sequence[rank - 1]

    @property
    def sequence(self):
        """Variables listed by increasing rank."""
        return self._sequence

    def ranks(self):
        return tuple(self._rank[x] for x in range(1, len(self) + 1))

    def __eq__(self, other):
        return isinstance(other, VarOrder) and self._sequence == other._sequence

    def __hash__(self):
        return hash(self._sequence)

    def __repr__(self):
        return f"VarOrder({list(self._sequence)})"


class Heuristic(str, Enum):
    RANDOM = "random"
    MCS = "mcs"
    INV_MCS = "invmcs"
    LEXP = "lexp"
    INV_LEXP = "invlexp"
    LEXM = "lexm"
    INV_LEXM = "invlexm"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        return cls(str(name).lower().replace("-", "").replace("_", ""))


def invert(order):
    n = len(order)
    return VarOrder.from_ranks({x: n + 1 - order[x] for x in order.sequence})


def random_order(n, seed=0):
    seq = list(range(1, n + 1))
    random.Random(seed).shuffle(seq)
    return VarOrder(seq)


def mcs_order(graph):
    """Maximum-cardinality search: repeatedly pick the unchosen vertex with the
    most already-chosen neighbours."""
    n = len(graph)
    count = {v: 0 for v in graph}
    # heap of (-count, vertex); stale entries are skipped
    heap = [(0, v) for v in graph]
    heapq.heapify(heap)
    chosen = set()
    seq = []
    while len(seq) < n:
        neg, v = heapq.heappop(heap)
        if v in chosen or -neg != count[v]:
            continue
        chosen.add(v)
        seq.append(v)
        for w in graph[v]:
            if w not in chosen:
                count[w] += 1
                heapq.heappush(heap, (-count[w], w))
    return VarOrder(seq)


def _pick(candidates, label):
    # Lexicographically largest label, lowest index on ties.
    best = None
    for v in candidates:
        if best is None or label[v] > label[best] or (label[v] == label[best] and v < best):
            best = v
    return best


def lexp_order(graph):
    """Lexicographic search for perfect orders (LexBFS).

    A vertex chosen at step ``k`` appends the stamp ``n - k`` to the label of
    each unchosen neighbour, so labels stay sorted in descending order and
    earlier picks dominate the comparison.
    """
    n = len(graph)
    label = {v: () for v in graph}
    unchosen = set(graph)
    seq = []
    for k in range(n):
        v = _pick(unchosen, label)
        unchosen.discard(v)
        seq.append(v)
        stamp = n - k
        for w in graph[v]:
            if w in unchosen:
                label[w] = label[w] + (stamp,)
    return VarOrder(seq)


def lexm_order(graph):
    """Lexicographic search for minimal orders (LEX M).

    The chosen vertex ``v`` stamps every unchosen ``w`` reachable through a
    path whose inner vertices are unchosen and carry labels strictly smaller
    than ``w``'s.  That is decided per ``w`` via a bottleneck search: the
    smallest achievable maximum inner label over all paths from ``v``.
    """
    n = len(graph)
    label = {v: () for v in graph}
    unchosen = set(graph)
    seq = []
    # Path keys: (0,) means no inner vertex; (1, label) otherwise.
    direct = (0,)
    for k in range(n):
        v = _pick(unchosen, label)
        unchosen.discard(v)
        seq.append(v)
        best = {}
        heap = []
        for w in graph[v]:
            if w in unchosen:
                best[w] = direct
                heap.append((direct, w))
        heapq.heapify(heap)
        while heap:
            key, u = heapq.heappop(heap)
            if best.get(u) != key:
                continue
            through = max(key, (1, label[u]))
            for w in graph[u]:
                if w in unchosen and (w not in best or through < best[w]):
                    best[w] = through
                    heapq.heappush(heap, (through, w))
        stamp = n - k
        for w, key in best.items():
            if key == direct or key[1] < label[w]:
                label[w] = label[w] + (stamp,)
    return VarOrder(seq)


def compute_order(heuristic, graph, seed=0):
    """Dispatch a :class:`Heuristic` (or its CLI name) on a Gaifman graph."""
    h = Heuristic.parse(heuristic)
    if h is Heuristic.RANDOM:
        return random_order(len(graph), seed)
    base = {
        Heuristic.MCS: mcs_order, Heuristic.INV_MCS: mcs_order,
        Heuristic.LEXP: lexp_order, Heuristic.INV_LEXP: lexp_order,
        Heuristic.LEXM: lexm_order, Heuristic.INV_LEXM: lexm_order,
    }[h](graph)
    if h in (Heuristic.INV_MCS, Heuristic.INV_LEXP, Heuristic.INV_LEXM):
        return invert(base)
    return base
