"""Fuzzy finite automata and their crisp-deterministic counterparts.

A fuzzy automaton is (sigma, delta, tau): a fuzzy set of initial states, one
transition matrix per symbol, a fuzzy set of terminal states. The degree of
a word u is sigma ∘ delta_u ∘ tau. A cdfa keeps fuzziness only in its
terminal map: transitions are an ordinary deterministic table and each state
carries the vector plus a canonical word that produced it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .algebra import FuzzyMatrix, FuzzyVector, dot, mat_vec, vec_mat
from .errors import (
    AlphabetMismatch,
    DimensionMismatch,
    LatticeMismatch,
    UnknownSymbol,
)
from .lattice import Lattice, Value

Word = tuple[str, ...]


def check_alphabet(symbols: Iterable[str]) -> tuple[str, ...]:
    """Validate an alphabet: nonempty distinct tokens without whitespace."""
    alphabet = tuple(symbols)
    if not alphabet:
        raise ValueError("alphabet must not be empty")
    seen = set()
    for s in alphabet:
        if not isinstance(s, str) or not s or any(c.isspace() for c in s):
            raise ValueError(f"bad alphabet symbol {s!r}")
        if s in seen:
            raise ValueError(f"duplicate alphabet symbol {s!r}")
        seen.add(s)
    return alphabet


@dataclass(frozen=True)
class FuzzyAutomaton:
    """Fuzzy finite automaton over one lattice.

    delta maps each alphabet symbol to its n x n transition matrix. The
    constructor normalizes delta to alphabet order so equal automata
    serialize identically.
    """

    lattice: Lattice
    alphabet: tuple[str, ...]
    sigma: FuzzyVector
    delta: dict[str, FuzzyMatrix]
    tau: FuzzyVector

    def __post_init__(self):
        alphabet = check_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        n = len(self.sigma)
        if self.sigma.lattice != self.lattice or self.tau.lattice != self.lattice:
            raise LatticeMismatch("sigma/tau lattice differs from the automaton's")
        if len(self.tau) != n:
            raise DimensionMismatch(f"tau has length {len(self.tau)}, expected {n}")
        if set(self.delta) != set(alphabet):
            raise ValueError("delta keys must match the alphabet exactly")
        ordered = {}
        for x in alphabet:
            m = self.delta[x]
            if m.lattice != self.lattice:
                raise LatticeMismatch(f"transition matrix for {x!r} is in another lattice")
            if m.n_rows != n or m.n_cols != n:
                raise DimensionMismatch(
                    f"transition matrix for {x!r} is {m.n_rows}x{m.n_cols}, expected {n}x{n}")
            ordered[x] = m
        object.__setattr__(self, "delta", ordered)

    @property
    def n(self) -> int:
        return len(self.sigma)

    @classmethod
    def build(cls, lattice: Lattice, alphabet: Sequence[str], initial: Iterable,
              transitions: Mapping[str, Iterable[Iterable]], terminal: Iterable
              ) -> "FuzzyAutomaton":
        """Construct from raw values, coercing every entry through the lattice."""
        sigma = FuzzyVector.from_values(lattice, initial)
        tau = FuzzyVector.from_values(lattice, terminal)
        delta = {x: FuzzyMatrix.from_rows(lattice, rows) for x, rows in transitions.items()}
        return cls(lattice, tuple(alphabet), sigma, delta, tau)

    def matrix(self, symbol: str) -> FuzzyMatrix:
        try:
            return self.delta[symbol]
        except KeyError:
            raise UnknownSymbol(f"symbol {symbol!r} is not in the alphabet") from None


def evaluate(a: FuzzyAutomaton, word: Sequence[str]) -> Value:
    """Membership degree of word: thread sigma through delta, then hit tau."""
    state = a.sigma
    for x in word:
        state = vec_mat(state, a.matrix(x))
    return dot(state, a.tau)


def reverse(a: FuzzyAutomaton) -> FuzzyAutomaton:
    """Mirror image: swap sigma with tau and transpose every matrix.

    The reverse accepts each reversed word with the original degree.
    """
    delta = {x: m.transpose() for x, m in a.delta.items()}
    return FuzzyAutomaton(a.lattice, a.alphabet, a.tau, delta, a.sigma)


def right_language_step(a: FuzzyAutomaton, symbol: str, t: FuzzyVector) -> FuzzyVector:
    """One backward step: from tau_u to tau_{symbol u} = delta_symbol ∘ tau_u."""
    return mat_vec(a.matrix(symbol), t)


@dataclass(frozen=True)
class StateLabel:
    """Canonical word and defining vector of one cdfa state."""

    word: Word
    vector: FuzzyVector


@dataclass(frozen=True)
class Cdfa:
    """Crisp-deterministic fuzzy automaton.

    transitions[state][symbol_index] is the successor state; terminal[state]
    is the degree returned after reading a word that lands there. Every
    state must be reachable from initial.
    """

    lattice: Lattice
    alphabet: tuple[str, ...]
    transitions: tuple[tuple[int, ...], ...]
    initial: int
    terminal: tuple[Value, ...]
    labels: tuple[StateLabel, ...]
    _sym_index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        alphabet = check_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        n = len(self.transitions)
        if n < 1:
            raise ValueError("a cdfa needs at least one state")
        m = len(alphabet)
        for row in self.transitions:
            if len(row) != m:
                raise DimensionMismatch(f"transition row of width {len(row)}, expected {m}")
            for t in row:
                if not 0 <= t < n:
                    raise ValueError(f"transition target {t} out of range")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")
        if len(self.terminal) != n:
            raise DimensionMismatch(f"{len(self.terminal)} terminal degrees for {n} states")
        for v in self.terminal:
            self.lattice.check(v)
        if len(self.labels) != n:
            raise DimensionMismatch(f"{len(self.labels)} labels for {n} states")
        reached = {self.initial}
        frontier = deque([self.initial])
        while frontier:
            s = frontier.popleft()
            for t in self.transitions[s]:
                if t not in reached:
                    reached.add(t)
                    frontier.append(t)
        if len(reached) != n:
            missing = sorted(set(range(n)) - reached)
            raise ValueError(f"unreachable states: {missing}")
        object.__setattr__(self, "_sym_index", {x: i for i, x in enumerate(alphabet)})

    @property
    def n(self) -> int:
        return len(self.transitions)

    def step(self, state: int, symbol: str) -> int:
        i = self._sym_index.get(symbol)
        if i is None:
            raise UnknownSymbol(f"symbol {symbol!r} is not in the alphabet")
        return self.transitions[state][i]


def cdfa_evaluate(c: Cdfa, word: Sequence[str]) -> Value:
    """Run the deterministic table and read off the terminal degree."""
    state = c.initial
    for x in word:
        state = c.step(state, x)
    return c.terminal[state]


def find_witness(c1: Cdfa, c2: Cdfa) -> Word | None:
    """Shortest word on which the two cdfa disagree, None when equivalent.

    Breadth-first product search; ties inside one length break toward the
    earlier alphabet symbol, so the witness is shortlex-least. Callers must
    compare against None, the empty word is a valid witness.
    """
    if c1.lattice != c2.lattice:
        raise LatticeMismatch("cannot compare cdfa over different lattices")
    if c1.alphabet != c2.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {c1.alphabet} vs {c2.alphabet}")
    start = (c1.initial, c2.initial)
    if c1.terminal[c1.initial] != c2.terminal[c2.initial]:
        return ()
    seen = {start}
    queue: deque[tuple[tuple[int, int], Word]] = deque([(start, ())])
    while queue:
        (s1, s2), word = queue.popleft()
        for i, x in enumerate(c1.alphabet):
            pair = (c1.transitions[s1][i], c2.transitions[s2][i])
            if pair in seen:
                continue
            extended = word + (x,)
            if c1.terminal[pair[0]] != c2.terminal[pair[1]]:
                return extended
            seen.add(pair)
            queue.append((pair, extended))
    return None


def cdfa_equivalent(c1: Cdfa, c2: Cdfa) -> bool:
    """True when the two cdfa assign every word the same degree."""
    return find_witness(c1, c2) is None


def cdfa_as_fuzzy_automaton(c: Cdfa) -> FuzzyAutomaton:
    """Embed a cdfa as a fuzzy automaton with crisp initial set and transitions.

    State labels are dropped; only the language matters to callers.
    """
    lat = c.lattice
    top, bottom = lat.top, lat.bottom
    n = c.n
    sigma = FuzzyVector(lat, tuple(top if i == c.initial else bottom for i in range(n)))
    delta = {}
    for xi, x in enumerate(c.alphabet):
        rows = []
        for s in range(n):
            target = c.transitions[s][xi]
            rows.append(tuple(top if j == target else bottom for j in range(n)))
        delta[x] = FuzzyMatrix(lat, tuple(rows))
    tau = FuzzyVector(lat, c.terminal)
    return FuzzyAutomaton(lat, c.alphabet, sigma, delta, tau)
