"""Shared fixtures-by-hand, random generators, and brute-force oracles.

The oracles deliberately avoid the library's own transition maps and
recursions: runs are enumerated by explicit depth-first search over the
raw transition triples, and cliques by testing every vertex subset, so
agreement with the fast implementations is meaningful.
"""

from itertools import combinations

from ufa import Graph, Nfa


def a_plus() -> Nfa:
    """Accepts one or more a's; both constructions have two states."""
    return Nfa(2, ("a",), {(0, "a", 1), (1, "a", 1)}, {0}, {1})


def a_star() -> Nfa:
    """Single-state loop accepting every word over {a}."""
    return Nfa(1, ("a",), {(0, "a", 0)}, {0}, {0})


def two_loop() -> Nfa:
    """Two disjoint loops, everything initial and final: ambiguous at once."""
    return Nfa(2, ("a",), {(0, "a", 0), (1, "a", 1)}, {0, 1}, {0, 1})


def path3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


def random_nfa(rng, max_states=6, max_symbols=3, density=0.3) -> Nfa:
    """A random automaton in the small regime the end-to-end checks use."""
    n = rng.randint(1, max_states)
    alphabet = tuple("abc"[: rng.randint(1, max_symbols)])
    transitions = {
        (q, a, r)
        for q in range(n)
        for a in alphabet
        for r in range(n)
        if rng.random() < density
    }
    initial = {rng.randrange(n) for _ in range(rng.randint(1, 2))}
    final = {q for q in range(n) if rng.random() < 0.4}
    return Nfa(n, alphabet, transitions, initial, final)


def random_nfa_any(rng) -> Nfa:
    """A random automaton with odd but legal symbol labels, for format tests."""
    n = rng.randint(0, 5)
    pool = ["a", "b", "ab", "#", "x_1", "c{0}", "!?", "0"]
    alphabet = tuple(rng.sample(pool, rng.randint(0, 4)))
    transitions = {
        (rng.randrange(n), rng.choice(alphabet), rng.randrange(n))
        for _ in range(rng.randint(0, 12))
        if n and alphabet
    }
    initial = {q for q in range(n) if rng.random() < 0.5}
    final = {q for q in range(n) if rng.random() < 0.5}
    return Nfa(n, alphabet, transitions, initial, final)


def random_graph(rng, vertex_count: int, p: float = 0.5) -> Graph:
    return Graph.from_edges(
        vertex_count,
        [
            (u, v)
            for u, v in combinations(range(vertex_count), 2)
            if rng.random() < p
        ],
    )


def brute_force_cliques(g: Graph) -> list:
    """Every vertex subset all of whose pairs are adjacent, found naively."""
    cliques = []
    for size in range(g.vertex_count + 1):
        for members in combinations(range(g.vertex_count), size):
            if all(v in g.adjacency[u] for u, v in combinations(members, 2)):
                cliques.append(frozenset(members))
    return cliques


def enumerate_accepting_runs(nfa: Nfa, word) -> list:
    """All accepting runs as state sequences, by explicit search."""
    successors = {}
    for src, sym, dst in nfa.transitions:
        successors.setdefault((src, sym), []).append(dst)
    runs = []

    def extend(state, position, path):
        if position == len(word):
            if state in nfa.final:
                runs.append(path)
            return
        for nxt in sorted(successors.get((state, word[position]), [])):
            extend(nxt, position + 1, path + (nxt,))

    for start in sorted(nfa.initial):
        extend(start, 0, (start,))
    return runs


def word_run_counts(nfa: Nfa, max_len: int) -> dict:
    """Accepting-run count for every word up to max_len, sharing prefixes.

    Walks the word trie once, pushing a per-state run-count vector, so the
    cost is the number of words times the transition count rather than a
    fresh pass per word.
    """
    successors = {}
    for src, sym, dst in nfa.transitions:
        successors.setdefault(sym, {}).setdefault(src, []).append(dst)
    counts = {}

    def walk(word, vector):
        counts[word] = sum(vector[q] for q in nfa.final)
        if len(word) == max_len:
            return
        for a in nfa.alphabet:
            by_source = successors.get(a, {})
            nxt = [0] * nfa.state_count
            for q, c in enumerate(vector):
                if c:
                    for r in by_source.get(q, ()):
                        nxt[r] += c
            walk(word + (a,), nxt)

    start = [1 if q in nfa.initial else 0 for q in range(nfa.state_count)]
    walk((), start)
    return counts


def language(nfa: Nfa, max_len: int) -> set:
    """All accepted words up to max_len, per the run-count oracle."""
    return {word for word, count in word_run_counts(nfa, max_len).items() if count}


def run_cli(argv, capsys):
    """Run the command line in-process; returns (exit code, stdout, stderr)."""
    from ufa.cli import main

    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err
