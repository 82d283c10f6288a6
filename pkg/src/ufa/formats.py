"""Plain-text files for automata and graphs.

Automaton files:

    nfa <state_count>
    alphabet <symbol> ...
    initial <state> ...
    final <state> ...
    trans <src> <symbol> <dst>

Graph files:

    graph <vertex_count>
    edge <u> <v>

Tokens are whitespace-separated; blank lines and lines starting with ``#``
are skipped.  The ``nfa``/``graph`` header must come first; the other
header lines may appear in any order but only once.  Serialization is
canonical (sorted state sets, transitions by source then alphabet position
then target, edges lexicographic with u < v), so parse and serialize are
mutually inverse and repeated runs are byte-identical.
"""

from .automata import Nfa
from .graphs import Graph


class ParseError(ValueError):
    """A malformed input file; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def _int_token(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line) from None


def _body_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield line_no, stripped.split()


def _state_token(token: str, state_count: int, line: int) -> int:
    value = _int_token(token, "state", line)
    if not 0 <= value < state_count:
        raise ParseError(f"state {value} out of range for {state_count} states", line)
    return value


def parse_automaton(text: str) -> Nfa:
    """Parse an automaton file; raise ParseError with a line number on any
    malformed, duplicated, missing, or out-of-range content."""
    state_count = None
    alphabet = None
    state_sets = {"initial": None, "final": None}
    pending = []
    for line_no, tokens in _body_lines(text):
        keyword = tokens[0]
        if keyword == "nfa":
            if state_count is not None:
                raise ParseError("duplicate 'nfa' header", line_no)
            if len(tokens) != 2:
                raise ParseError("expected 'nfa <state_count>'", line_no)
            state_count = _int_token(tokens[1], "state count", line_no)
            if state_count < 0:
                raise ParseError("state count must be nonnegative", line_no)
            continue
        if state_count is None:
            raise ParseError("file must start with 'nfa <state_count>'", line_no)
        if keyword == "alphabet":
            if alphabet is not None:
                raise ParseError("duplicate 'alphabet' line", line_no)
            alphabet = tokens[1:]
            if len(set(alphabet)) != len(alphabet):
                raise ParseError("duplicate symbol in alphabet", line_no)
        elif keyword in state_sets:
            if state_sets[keyword] is not None:
                raise ParseError(f"duplicate '{keyword}' line", line_no)
            state_sets[keyword] = frozenset(
                _state_token(token, state_count, line_no) for token in tokens[1:]
            )
        elif keyword == "trans":
            if len(tokens) != 4:
                raise ParseError("expected 'trans <src> <symbol> <dst>'", line_no)
            src = _state_token(tokens[1], state_count, line_no)
            dst = _state_token(tokens[3], state_count, line_no)
            pending.append((line_no, src, tokens[2], dst))
        else:
            raise ParseError(f"unknown directive {keyword!r}", line_no)
    if state_count is None:
        raise ParseError("missing 'nfa <state_count>' header")
    if alphabet is None:
        raise ParseError("missing 'alphabet' line")
    for name, value in state_sets.items():
        if value is None:
            raise ParseError(f"missing '{name}' line")
    known = set(alphabet)
    transitions = set()
    for line_no, src, symbol, dst in pending:
        if symbol not in known:
            raise ParseError(f"unknown symbol {symbol!r}", line_no)
        transitions.add((src, symbol, dst))
    return Nfa(
        state_count,
        tuple(alphabet),
        transitions,
        state_sets["initial"],
        state_sets["final"],
    )


def serialize_automaton(nfa: Nfa) -> str:
    """Canonical text for an automaton; parse_automaton inverts it exactly."""
    position = {symbol: i for i, symbol in enumerate(nfa.alphabet)}
    lines = [
        f"nfa {nfa.state_count}",
        " ".join(("alphabet",) + nfa.alphabet),
        " ".join(["initial"] + [str(q) for q in sorted(nfa.initial)]),
        " ".join(["final"] + [str(q) for q in sorted(nfa.final)]),
    ]
    ordered = sorted(nfa.transitions, key=lambda t: (t[0], position[t[1]], t[2]))
    lines += [f"trans {src} {symbol} {dst}" for src, symbol, dst in ordered]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse a graph file; raise ParseError with a line number on any
    malformed, duplicated, missing, or out-of-range content."""
    vertex_count = None
    edges = []
    for line_no, tokens in _body_lines(text):
        keyword = tokens[0]
        if keyword == "graph":
            if vertex_count is not None:
                raise ParseError("duplicate 'graph' header", line_no)
            if len(tokens) != 2:
                raise ParseError("expected 'graph <vertex_count>'", line_no)
            vertex_count = _int_token(tokens[1], "vertex count", line_no)
            if vertex_count < 0:
                raise ParseError("vertex count must be nonnegative", line_no)
            continue
        if vertex_count is None:
            raise ParseError("file must start with 'graph <vertex_count>'", line_no)
        if keyword != "edge":
            raise ParseError(f"unknown directive {keyword!r}", line_no)
        if len(tokens) != 3:
            raise ParseError("expected 'edge <u> <v>'", line_no)
        u = _int_token(tokens[1], "vertex", line_no)
        v = _int_token(tokens[2], "vertex", line_no)
        if not 0 <= u < vertex_count or not 0 <= v < vertex_count:
            raise ParseError(
                f"edge {u}-{v} out of range for {vertex_count} vertices", line_no
            )
        if u >= v:
            raise ParseError(f"edge endpoints must satisfy u < v, got {u} {v}", line_no)
        edges.append((u, v))
    if vertex_count is None:
        raise ParseError("missing 'graph <vertex_count>' header")
    return Graph.from_edges(vertex_count, edges)


def serialize_graph(g: Graph) -> str:
    """Canonical text for a graph; parse_graph inverts it exactly."""
    lines = [f"graph {g.vertex_count}"]
    lines += [f"edge {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
