"""Nondeterministic finite automata with exact run counting, ambiguity
checking, and subset determinization in both directions.

States are plain integers ``0..state_count-1``; words are tuples of symbol
labels.  Everything here is pure: automata are frozen dataclasses and every
operation returns new values.
"""

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property

Word = tuple[str, ...]

FORWARD = "forward"
BACKWARD = "backward"
_DIRECTIONS = (FORWARD, BACKWARD)

# Default limit on subsets a single determinization may discover.
DEFAULT_CAP = 1 << 20


def word_text(word) -> str:
    """Render a word as space-separated symbols, the empty word as ``(empty)``."""
    return " ".join(word) if word else "(empty)"


class CapExceededError(RuntimeError):
    """A subset construction discovered more subsets than its cap allows."""

    def __init__(self, direction: str, cap: int, partial_count: int):
        if direction == "both":
            message = f"state limit exceeded: both determinizations hit the cap ({cap})"
        else:
            message = (
                f"state limit exceeded: {direction} determinization stopped after "
                f"discovering {partial_count} subsets (cap {cap})"
            )
        super().__init__(message)
        self.direction = direction
        self.cap = cap
        self.partial_count = partial_count


class AmbiguousAutomatonError(ValueError):
    """An operation that needs an unambiguous automaton got an ambiguous one."""

    def __init__(self, witness: Word):
        super().__init__(f"automaton is ambiguous; witness word: {word_text(witness)}")
        self.witness = witness


@dataclass(frozen=True)
class Nfa:
    """A nondeterministic finite automaton over an ordered alphabet.

    ``transitions`` holds (source, symbol, target) triples; ``initial`` and
    ``final`` are state sets.  The alphabet order is significant: it fixes
    the column order of determinizations and the canonical serialization.
    Field values are coerced to immutable containers, so instances hash and
    compare by structure.
    """

    state_count: int
    alphabet: tuple[str, ...]
    transitions: frozenset[tuple[int, str, int]]
    initial: frozenset[int]
    final: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "initial", frozenset(self.initial))
        object.__setattr__(self, "final", frozenset(self.final))
        if self.state_count < 0:
            raise ValueError("state_count must be nonnegative")
        seen = set()
        for label in self.alphabet:
            if not label or any(ch.isspace() for ch in label):
                raise ValueError(
                    f"symbol labels must be nonempty and whitespace-free: {label!r}"
                )
            if label in seen:
                raise ValueError(f"duplicate symbol in alphabet: {label!r}")
            seen.add(label)
        for role, states in (("initial", self.initial), ("final", self.final)):
            for q in states:
                self._check_state(q, role)
        for src, sym, dst in self.transitions:
            self._check_state(src, "transition source")
            self._check_state(dst, "transition target")
            if sym not in seen:
                raise ValueError(f"transition symbol not in alphabet: {sym!r}")

    def _check_state(self, q, role: str):
        if not isinstance(q, int) or q < 0 or q >= self.state_count:
            raise ValueError(
                f"{role} state {q!r} out of range for {self.state_count} states"
            )

    @cached_property
    def _symbols(self) -> frozenset:
        return frozenset(self.alphabet)

    @cached_property
    def _succ(self):
        """Per symbol, per source state, the sorted tuple of successors."""
        rows = {a: [[] for _ in range(self.state_count)] for a in self.alphabet}
        for src, sym, dst in self.transitions:
            rows[sym][src].append(dst)
        return {a: tuple(tuple(sorted(t)) for t in per_state) for a, per_state in rows.items()}

    @cached_property
    def _pred(self):
        """Per symbol, per target state, the sorted tuple of predecessors."""
        rows = {a: [[] for _ in range(self.state_count)] for a in self.alphabet}
        for src, sym, dst in self.transitions:
            rows[sym][dst].append(src)
        return {a: tuple(tuple(sorted(t)) for t in per_state) for a, per_state in rows.items()}


def _require_symbol(nfa: Nfa, a: str):
    if a not in nfa._symbols:
        raise ValueError(f"symbol not in alphabet: {a!r}")


def step_forward(nfa: Nfa, s, a: str) -> frozenset:
    """States reachable from some state of ``s`` by a single ``a`` transition."""
    _require_symbol(nfa, a)
    rows = nfa._succ[a]
    out = set()
    for q in s:
        nfa._check_state(q, "queried")
        out.update(rows[q])
    return frozenset(out)


def step_backward(nfa: Nfa, a: str, s) -> frozenset:
    """States from which a single ``a`` transition lands in ``s``."""
    _require_symbol(nfa, a)
    rows = nfa._pred[a]
    out = set()
    for q in s:
        nfa._check_state(q, "queried")
        out.update(rows[q])
    return frozenset(out)


def reach_forward(nfa: Nfa, s, word) -> frozenset:
    """States reachable from ``s`` along ``word``; the empty word returns ``s``."""
    current = frozenset(s)
    for q in current:
        nfa._check_state(q, "queried")
    for a in word:
        current = step_forward(nfa, current, a)
    return current


def count_accepting_runs(nfa: Nfa, word) -> int:
    """Exact number of accepting runs of ``word``.

    A run is a path through the transition relation that starts in an
    initial state and consumes the whole word; it is accepting when it ends
    in a final state.  Counted by dynamic programming over word positions,
    so the cost is len(word) * transitions, not the number of runs.  The
    word is accepted iff the result is positive.
    """
    counts = [0] * nfa.state_count
    for q in nfa.initial:
        counts[q] = 1
    for a in word:
        _require_symbol(nfa, a)
        rows = nfa._succ[a]
        nxt = [0] * nfa.state_count
        for q, c in enumerate(counts):
            if c:
                for r in rows[q]:
                    nxt[r] += c
        counts = nxt
    return sum(counts[q] for q in nfa.final)


def _pair_search(seed_pairs, alphabet, rows_by_symbol):
    """Breadth-first search over pairs of states stepped in lockstep.

    Returns the discovery order and a parent map ``pair -> (parent, symbol)``
    (seeds map to None).  Deterministic: seeds, alphabet, and successor
    tuples are all explicitly ordered.
    """
    parent = {}
    order = []
    queue = deque()
    for pair in seed_pairs:
        if pair not in parent:
            parent[pair] = None
            order.append(pair)
            queue.append(pair)
    while queue:
        pair = queue.popleft()
        p, q = pair
        for a in alphabet:
            rows = rows_by_symbol[a]
            for p2 in rows[p]:
                for q2 in rows[q]:
                    child = (p2, q2)
                    if child not in parent:
                        parent[child] = (pair, a)
                        order.append(child)
                        queue.append(child)
    return order, parent


def _trace_word(parent, pair, reverse: bool) -> Word:
    """Word along the parent chain from ``pair`` back to a seed."""
    symbols = []
    link = parent[pair]
    while link is not None:
        pair, a = link
        symbols.append(a)
        link = parent[pair]
    if reverse:
        symbols.reverse()
    return tuple(symbols)


def reachable_state_pairs(nfa: Nfa) -> list:
    """Ordered state pairs simultaneously reachable from the initial states.

    A pair (p, q) is included iff some single word reaches both p and q
    from initial states.  Breadth-first discovery order.
    """
    seeds = [(p, q) for p in sorted(nfa.initial) for q in sorted(nfa.initial)]
    order, _ = _pair_search(seeds, nfa.alphabet, nfa._succ)
    return order


def is_unambiguous(nfa: Nfa):
    """Whether no word has two accepting runs.

    Ambiguity holds iff some pair of distinct states is both reachable from
    the initial states and co-reachable to the final states along common
    words; both sides are searched over state pairs, so no words are
    enumerated.  Returns (True, None) or (False, witness) where the witness
    word has at least two accepting runs.
    """
    fwd_seeds = [(p, q) for p in sorted(nfa.initial) for q in sorted(nfa.initial)]
    fwd_order, fwd_parent = _pair_search(fwd_seeds, nfa.alphabet, nfa._succ)
    bwd_seeds = [(p, q) for p in sorted(nfa.final) for q in sorted(nfa.final)]
    _, bwd_parent = _pair_search(bwd_seeds, nfa.alphabet, nfa._pred)
    for pair in fwd_order:
        if pair[0] != pair[1] and pair in bwd_parent:
            witness = _trace_word(fwd_parent, pair, reverse=True) + _trace_word(
                bwd_parent, pair, reverse=False
            )
            return False, witness
    return True, None


@dataclass(frozen=True)
class SubsetAutomaton:
    """Result of a forward or backward subset construction.

    ``states`` lists the discovered subsets of base states in breadth-first
    order; only subsets actually reached appear (the empty subset included
    exactly when it is reached).  ``entry`` indexes the seed subset: the
    initial set forward, the final set backward.  ``transition_table[i][j]``
    is the image of state ``i`` under ``base.alphabet[j]``; in the backward
    direction the image is the one-letter preimage, so viewed as an
    automaton the edge runs from the image back to ``i``.  ``marked`` holds
    the states whose subset meets base.final (forward) or base.initial
    (backward).
    """

    base: Nfa
    direction: str
    states: tuple
    transition_table: tuple
    entry: int
    marked: frozenset

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(frozenset(s) for s in self.states))
        object.__setattr__(
            self, "transition_table", tuple(tuple(row) for row in self.transition_table)
        )
        object.__setattr__(self, "marked", frozenset(self.marked))
        if self.direction not in _DIRECTIONS:
            raise ValueError(f"direction must be one of {_DIRECTIONS}")
        if len(self.transition_table) != len(self.states):
            raise ValueError("transition table must cover every state")
        width = len(self.base.alphabet)
        if any(len(row) != width for row in self.transition_table):
            raise ValueError("each transition table row must cover the alphabet")
        if not 0 <= self.entry < len(self.states):
            raise ValueError("entry state out of range")

    @property
    def state_count(self) -> int:
        return len(self.states)

    def _to_nfa(self, marked) -> Nfa:
        triples = set()
        if self.direction == FORWARD:
            for i, row in enumerate(self.transition_table):
                for a, j in zip(self.base.alphabet, row):
                    triples.add((i, a, j))
            return Nfa(
                len(self.states),
                self.base.alphabet,
                triples,
                frozenset({self.entry}),
                marked,
            )
        for i, row in enumerate(self.transition_table):
            for a, j in zip(self.base.alphabet, row):
                triples.add((j, a, i))
        return Nfa(
            len(self.states),
            self.base.alphabet,
            triples,
            marked,
            frozenset({self.entry}),
        )

    def as_nfa(self) -> Nfa:
        """The construction as a plain automaton for the base language.

        Forward: a complete deterministic automaton.  Backward: a complete
        backward-deterministic automaton, i.e. one final state and exactly
        one incoming edge per (state, symbol); such an automaton has at
        most one accepting run per word, so it is unambiguous.
        """
        return self._to_nfa(self.marked)

    def as_complement_nfa(self) -> Nfa:
        """Same structure with marked and unmarked states swapped.

        Swapping the accepting side of a complete forward- or
        backward-deterministic automaton complements its language, so the
        result recognizes exactly the words the base automaton rejects.
        """
        inverted = frozenset(range(len(self.states))) - self.marked
        return self._to_nfa(inverted)


def _determinize(nfa: Nfa, direction: str, cap: int) -> SubsetAutomaton:
    if cap < 1:
        raise ValueError("cap must be positive")
    if direction == FORWARD:
        rows_by_symbol, seed, mark_against = nfa._succ, nfa.initial, nfa.final
    else:
        rows_by_symbol, seed, mark_against = nfa._pred, nfa.final, nfa.initial
    states = [frozenset(seed)]
    index = {states[0]: 0}
    table = []
    pos = 0
    while pos < len(states):
        current = states[pos]
        row = []
        for a in nfa.alphabet:
            rows = rows_by_symbol[a]
            image = set()
            for q in current:
                image.update(rows[q])
            subset = frozenset(image)
            j = index.get(subset)
            if j is None:
                if len(states) >= cap:
                    raise CapExceededError(direction, cap, len(states))
                j = len(states)
                index[subset] = j
                states.append(subset)
            row.append(j)
        table.append(tuple(row))
        pos += 1
    marked = frozenset(i for i, subset in enumerate(states) if subset & mark_against)
    return SubsetAutomaton(nfa, direction, tuple(states), tuple(table), 0, marked)


def forward_determinize(nfa: Nfa, cap: int = DEFAULT_CAP) -> SubsetAutomaton:
    """Subset construction from the initial set.

    Discovers exactly the subsets reachable by one-letter images, breadth
    first, seed first.  Raises CapExceededError once more than ``cap``
    subsets would be recorded.
    """
    return _determinize(nfa, FORWARD, cap)


def backward_determinize(nfa: Nfa, cap: int = DEFAULT_CAP) -> SubsetAutomaton:
    """Subset construction from the final set along reversed transitions.

    Mirror image of forward_determinize; the resulting automaton is
    backward-deterministic and hence unambiguous.
    """
    return _determinize(nfa, BACKWARD, cap)


@dataclass(frozen=True)
class BoundReport:
    """Sizes from one complementation: ``n`` input states, forward and
    backward construction sizes ``k`` and ``l`` (None when that side hit the
    cap), and which side the complement kept."""

    n: int
    k: int
    l: int
    chosen: str

    def __post_init__(self):
        if self.chosen not in _DIRECTIONS:
            raise ValueError(f"chosen must be one of {_DIRECTIONS}")
        if self.k is None and self.l is None:
            raise ValueError("at least one construction size is required")
        if self.k is not None and self.l is not None:
            expected = FORWARD if self.k <= self.l else BACKWARD
            if self.chosen != expected:
                raise ValueError("chosen side must be the smaller construction (ties keep forward)")
        elif self.k is None and self.chosen != BACKWARD:
            raise ValueError("forward size unknown, so chosen must be backward")
        elif self.l is None and self.chosen != FORWARD:
            raise ValueError("backward size unknown, so chosen must be forward")

    @property
    def result_states(self) -> int:
        """States in the complement: the smaller known construction size."""
        return min(size for size in (self.k, self.l) if size is not None)

    @property
    def bound_sq(self) -> int:
        """Exact square of the state bound: (n + 1) * 2**n."""
        return (self.n + 1) * (1 << self.n)

    @property
    def bound(self) -> float:
        """The state bound sqrt(n + 1) * 2**(n / 2), as a float."""
        return math.sqrt(self.n + 1) * 2.0 ** (self.n / 2)

    @property
    def within_bound(self) -> bool:
        """result_states <= bound, compared exactly on squared integers."""
        return self.result_states**2 <= self.bound_sq


def complement_ufa(nfa: Nfa, cap: int = DEFAULT_CAP):
    """Complement an unambiguous automaton.

    Runs both subset constructions and keeps the smaller (ties keep
    forward), then swaps its marked set: the result recognizes exactly the
    rejected words, is itself unambiguous, and has min(k, l) states, which
    for unambiguous input never exceeds sqrt(n + 1) * 2**(n / 2).  Returns
    (complement, BoundReport).

    Raises AmbiguousAutomatonError (carrying a witness word) when the input
    is ambiguous.  A side that exceeds ``cap`` is dropped from the choice
    and reported as None; when both sides exceed it, CapExceededError with
    direction "both" is raised.
    """
    ok, witness = is_unambiguous(nfa)
    if not ok:
        raise AmbiguousAutomatonError(witness)
    forward = backward = None
    try:
        forward = forward_determinize(nfa, cap)
    except CapExceededError:
        pass
    try:
        backward = backward_determinize(nfa, cap)
    except CapExceededError:
        pass
    if forward is None and backward is None:
        raise CapExceededError("both", cap, cap)
    k = forward.state_count if forward is not None else None
    l = backward.state_count if backward is not None else None
    if backward is None or (forward is not None and k <= l):
        side, construction = FORWARD, forward
    else:
        side, construction = BACKWARD, backward
    report = BoundReport(nfa.state_count, k, l, side)
    return construction.as_complement_nfa(), report


def equivalent(a: Nfa, b: Nfa, cap: int = DEFAULT_CAP):
    """Whether two automata over the same alphabet accept the same language.

    Both are forward-determinized, then the product is searched breadth
    first for a state pair where exactly one side accepts.  Returns
    (True, None) or (False, word) with a shortest distinguishing word.
    The alphabets must be equal as sets; columns are matched by symbol.
    """
    if frozenset(a.alphabet) != frozenset(b.alphabet):
        raise ValueError("automata must share one alphabet")
    da = forward_determinize(a, cap)
    db = forward_determinize(b, cap)
    columns = [b.alphabet.index(sym) for sym in a.alphabet]
    start = (da.entry, db.entry)
    parent = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        i, j = pair
        if (i in da.marked) != (j in db.marked):
            return False, _trace_word(parent, pair, reverse=True)
        for col, sym in enumerate(a.alphabet):
            child = (da.transition_table[i][col], db.transition_table[j][columns[col]])
            if child not in parent:
                parent[child] = (pair, sym)
                queue.append(child)
    return True, None
