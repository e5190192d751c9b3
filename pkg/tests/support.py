"""Generators and independent oracles shared by the test modules.

The boolean oracle below works on plain Python sets and lists on purpose:
it must not share code with the library paths it checks.
"""

import itertools
from fractions import Fraction

from fuzzdet import FuzzyAutomaton, FuzzyMatrix, FuzzyVector, identity_matrix


def value_pool(lattice):
    if lattice.kind == "chain":
        return list(range(lattice.top_index + 1))
    if lattice.kind == "boolean":
        return [Fraction(0), Fraction(1)]
    return [Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2),
            Fraction(2, 3), Fraction(3, 4), Fraction(1)]


def random_value(rng, lattice, zero_bias=0.45):
    if rng.random() < zero_bias:
        return lattice.bottom
    return rng.choice(value_pool(lattice))


def random_vector(rng, lattice, n, zero_bias=0.45):
    return FuzzyVector(lattice, tuple(random_value(rng, lattice, zero_bias)
                                      for _ in range(n)))


def random_matrix(rng, lattice, n, zero_bias=0.45):
    return FuzzyMatrix(lattice, tuple(
        tuple(random_value(rng, lattice, zero_bias) for _ in range(n))
        for _ in range(n)))


def random_automaton(rng, lattice, n, alphabet=("x", "y"), zero_bias=0.45):
    return FuzzyAutomaton(
        lattice, tuple(alphabet),
        random_vector(rng, lattice, n, zero_bias),
        {x: random_matrix(rng, lattice, n, zero_bias) for x in alphabet},
        random_vector(rng, lattice, n, zero_bias))


def all_words(alphabet, max_len):
    for length in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=length)


# -- boolean oracle: subset construction plus Moore minimization -----------


def subset_dfa(a):
    """Accessible subset automaton of a boolean fuzzy automaton.

    Returns (transitions, accepting): transitions[s][i] is the successor of
    subset-state s under alphabet symbol i, accepting[s] is a bool.
    """
    n = a.n
    succ = {}
    for x in a.alphabet:
        rows = a.delta[x].entries
        succ[x] = [frozenset(j for j in range(n) if rows[i][j] == 1)
                   for i in range(n)]
    init = frozenset(i for i in range(n) if a.sigma[i] == 1)
    finals = {i for i in range(n) if a.tau[i] == 1}
    index = {init: 0}
    order = [init]
    transitions = []
    queue = [init]
    while queue:
        s = queue.pop(0)
        row = []
        for x in a.alphabet:
            t = frozenset(j for i in s for j in succ[x][i])
            if t not in index:
                index[t] = len(order)
                order.append(t)
                queue.append(t)
            row.append(index[t])
        transitions.append(row)
    accepting = [bool(s & finals) for s in order]
    return transitions, accepting


def moore_classes(transitions, accepting):
    """Number of Nerode classes of a complete accessible DFA."""
    cls = [1 if acc else 0 for acc in accepting]
    while True:
        signatures = {}
        refined = []
        for s in range(len(transitions)):
            key = (cls[s], tuple(cls[t] for t in transitions[s]))
            if key not in signatures:
                signatures[key] = len(signatures)
            refined.append(signatures[key])
        if refined == cls:
            return len(set(cls))
        cls = refined


def minimal_dfa_size(a):
    transitions, accepting = subset_dfa(a)
    return moore_classes(transitions, accepting)


def subset_accepts(a, word):
    """Boolean word acceptance straight off the subset automaton."""
    transitions, accepting = subset_dfa(a)
    sym_index = {x: i for i, x in enumerate(a.alphabet)}
    s = 0
    for x in word:
        s = transitions[s][sym_index[x]]
    return accepting[s]


def boolean_accepts_from(a, start, word):
    """Set-walk acceptance of a boolean automaton from an explicit state set."""
    n = a.n
    succ = {x: [set(j for j in range(n) if a.delta[x].entries[i][j] == 1)
                for i in range(n)] for x in a.alphabet}
    finals = {i for i in range(n) if a.tau[i] == 1}
    s = set(start)
    for x in word:
        s = {j for i in s for j in succ[x][i]}
    return bool(s & finals)


# -- psi construction helper ------------------------------------------------


def clone_extend(a):
    """Append a fully interchangeable copy of the last state.

    The copy shares its row, its column, sigma and tau with the original,
    so the relation gluing the two is reflexive and left invariant. Returns
    (extended automaton, gluing psi).
    """
    n = a.n
    lat = a.lattice
    delta = {}
    for x, m in a.delta.items():
        rows = [tuple(r) + (r[n - 1],) for r in m.entries]
        rows.append(rows[n - 1])
        delta[x] = FuzzyMatrix(lat, tuple(rows))
    sigma = FuzzyVector(lat, a.sigma.entries + (a.sigma[n - 1],))
    tau = FuzzyVector(lat, a.tau.entries + (a.tau[n - 1],))
    extended = FuzzyAutomaton(lat, a.alphabet, sigma, delta, tau)
    base = [list(row) for row in identity_matrix(lat, n + 1).entries]
    base[n - 1][n] = lat.top
    base[n][n - 1] = lat.top
    psi = FuzzyMatrix(lat, tuple(tuple(row) for row in base))
    return extended, psi
