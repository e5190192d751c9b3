"""Line-oriented automaton documents and DOT export.

Document grammar (one directive per line, '#' starts a comment, blank lines
ignored, tokens separated by whitespace):

    lattice NAME            boolean | godel | goguen | lukasiewicz | chain K
    alphabet SYM...         one or more distinct symbols
    states N
    initial V...            N values
    terminal V...           N values
    transitions SYM         followed by N rows of N values
    ...                     one transitions block per alphabet symbol

Values are decimal literals, p/q rationals, or chain indices, and must lie
in the declared lattice. serialize_automaton writes the canonical form:
blocks in the order above, symbols in alphabet order, reduced values,
terminating decimals preferred over p/q. Parsing a serialized document
yields an equal automaton.

Words elsewhere in the package render as '_' for the empty word and
dot-separated symbols otherwise, e.g. 'x.y.x'.
"""

from __future__ import annotations

from .automata import Cdfa, FuzzyAutomaton, Word
from .algebra import FuzzyMatrix, FuzzyVector
from .errors import FormatError, LatticeMismatch, UnknownSymbol
from .lattice import NAMED, Lattice, Value, chain


def format_word(word: Word) -> str:
    """'_' for the empty word, dot-joined symbols otherwise."""
    return ".".join(word) if word else "_"


def parse_word(text: str, alphabet: tuple[str, ...]) -> Word:
    """Inverse of format_word; every symbol must be in the alphabet."""
    if text == "_":
        return ()
    parts = text.split(".")
    for p in parts:
        if not p:
            raise UnknownSymbol(f"malformed word {text!r}")
        if p not in alphabet:
            raise UnknownSymbol(f"symbol {p!r} is not in the alphabet")
    return tuple(parts)


# -- parsing ---------------------------------------------------------------


class _Token:
    __slots__ = ("text", "line", "column")

    def __init__(self, text: str, line: int, column: int):
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text: str) -> list[list[_Token]]:
    """Split into logical lines of tokens, dropping comments and blanks."""
    lines = []
    for number, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        tokens = []
        k = 0
        while k < len(body):
            if body[k].isspace():
                k += 1
                continue
            start = k
            while k < len(body) and not body[k].isspace():
                k += 1
            tokens.append(_Token(body[start:k], number, start + 1))
        if tokens:
            lines.append(tokens)
    return lines


def _parse_value(lattice: Lattice, tok: _Token) -> Value:
    try:
        return lattice.parse_value(tok.text)
    except (ValueError, LatticeMismatch) as e:
        raise FormatError(str(e), tok.line, tok.column) from None


def _parse_values(lattice: Lattice, tokens: list[_Token], count: int,
                  what: str) -> list[Value]:
    if len(tokens) != count:
        line = tokens[0].line if tokens else None
        raise FormatError(f"{what} needs {count} values, got {len(tokens)}", line)
    return [_parse_value(lattice, t) for t in tokens]


def parse_automaton(text: str) -> FuzzyAutomaton:
    """Parse a document into a fuzzy automaton.

    Raises FormatError with a 1-based line (and column where it makes
    sense) on any syntax or validation problem.
    """
    lines = _tokenize(text)
    lattice: Lattice | None = None
    alphabet: tuple[str, ...] | None = None
    n: int | None = None
    sigma = None
    tau = None
    delta: dict[str, FuzzyMatrix] = {}

    i = 0
    while i < len(lines):
        tokens = lines[i]
        head = tokens[0]
        kw = head.text
        rest = tokens[1:]
        if kw == "lattice":
            if lattice is not None:
                raise FormatError("duplicate lattice block", head.line)
            lattice = _parse_lattice(rest, head)
            i += 1
        elif kw == "alphabet":
            if alphabet is not None:
                raise FormatError("duplicate alphabet block", head.line)
            if not rest:
                raise FormatError("alphabet needs at least one symbol", head.line)
            seen = set()
            for t in rest:
                if t.text in seen:
                    raise FormatError(f"duplicate symbol {t.text!r}", t.line, t.column)
                seen.add(t.text)
            alphabet = tuple(t.text for t in rest)
            i += 1
        elif kw == "states":
            if n is not None:
                raise FormatError("duplicate states block", head.line)
            if len(rest) != 1 or not rest[0].text.isdigit() or int(rest[0].text) < 1:
                raise FormatError("states needs one positive integer", head.line)
            n = int(rest[0].text)
            i += 1
        elif kw in ("initial", "terminal"):
            if lattice is None or n is None:
                raise FormatError(f"{kw} block before lattice and states", head.line)
            values = _parse_values(lattice, rest, n, kw)
            if kw == "initial":
                if sigma is not None:
                    raise FormatError("duplicate initial block", head.line)
                sigma = FuzzyVector(lattice, tuple(values))
            else:
                if tau is not None:
                    raise FormatError("duplicate terminal block", head.line)
                tau = FuzzyVector(lattice, tuple(values))
            i += 1
        elif kw == "transitions":
            if lattice is None or alphabet is None or n is None:
                raise FormatError(
                    "transitions block before lattice, alphabet and states", head.line)
            if len(rest) != 1:
                raise FormatError("transitions needs exactly one symbol", head.line)
            symbol = rest[0].text
            if symbol not in alphabet:
                raise FormatError(f"symbol {symbol!r} is not in the alphabet",
                                  rest[0].line, rest[0].column)
            if symbol in delta:
                raise FormatError(f"duplicate transitions block for {symbol!r}",
                                  head.line)
            if len(lines) - (i + 1) < n:
                raise FormatError(
                    f"transitions {symbol} needs {n} rows, document ends after "
                    f"{len(lines) - (i + 1)}", head.line)
            rows = []
            for r in range(n):
                row_tokens = lines[i + 1 + r]
                rows.append(tuple(_parse_values(
                    lattice, row_tokens, n, f"transition row {r + 1}")))
            delta[symbol] = FuzzyMatrix(lattice, tuple(rows))
            i += 1 + n
        else:
            raise FormatError(f"unknown directive {kw!r}", head.line, head.column)

    missing = [name for name, part in (
        ("lattice", lattice), ("alphabet", alphabet), ("states", n),
        ("initial", sigma), ("terminal", tau)) if part is None]
    if missing:
        raise FormatError("missing blocks: " + ", ".join(missing))
    assert alphabet is not None
    for x in alphabet:
        if x not in delta:
            raise FormatError(f"missing transitions block for {x!r}")
    return FuzzyAutomaton(lattice, alphabet, sigma, delta, tau)


def _parse_lattice(rest: list[_Token], head: _Token) -> Lattice:
    if not rest:
        raise FormatError("lattice needs a name", head.line)
    name = rest[0].text
    if name == "chain":
        if len(rest) != 2 or not rest[1].text.isdigit() or int(rest[1].text) < 1:
            raise FormatError("chain needs a positive top index", head.line)
        return chain(int(rest[1].text))
    if len(rest) != 1:
        raise FormatError(f"unexpected token after lattice {name!r}", rest[1].line,
                          rest[1].column)
    if name not in NAMED:
        raise FormatError(f"unknown lattice {name!r}", rest[0].line, rest[0].column)
    return NAMED[name]


def parse_matrix(text: str, lattice: Lattice, n: int) -> FuzzyMatrix:
    """Parse a bare n x n matrix document (used for psi relations)."""
    lines = _tokenize(text)
    if len(lines) != n:
        raise FormatError(f"expected {n} rows, got {len(lines)}")
    rows = []
    for r, tokens in enumerate(lines):
        rows.append(tuple(_parse_values(lattice, tokens, n, f"row {r + 1}")))
    return FuzzyMatrix(lattice, tuple(rows))


# -- serialization ----------------------------------------------------------


def serialize_automaton(a: FuzzyAutomaton) -> str:
    """Canonical document for an automaton; parse(serialize(a)) == a."""
    fmt = a.lattice.format_value
    lines = [
        f"lattice {a.lattice.describe()}",
        "alphabet " + " ".join(a.alphabet),
        f"states {a.n}",
        "initial " + " ".join(fmt(v) for v in a.sigma),
        "terminal " + " ".join(fmt(v) for v in a.tau),
    ]
    for x in a.alphabet:
        lines.append(f"transitions {x}")
        for row in a.delta[x].entries:
            lines.append(" ".join(fmt(v) for v in row))
    return "\n".join(lines) + "\n"


# -- DOT export --------------------------------------------------------------


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _merged_label(pairs: list[tuple[str, Value]], lattice: Lattice) -> str:
    """Edge label merging parallel edges: 'x/0.5, y/1', or 'x,y' when boolean."""
    if lattice.kind == "boolean":
        return ",".join(x for x, _ in pairs)
    return ", ".join(f"{x}/{lattice.format_value(v)}" for x, v in pairs)


def export_dot(obj) -> str:
    """Render an automaton or a cdfa as a DOT digraph.

    Fuzzy automata: one node per state, transition edges labelled
    'symbol/degree' with zero edges omitted and parallel edges merged;
    initial and terminal degrees hang off point-shaped marker nodes. The
    boolean lattice drops the degrees: plain symbol labels, unlabelled
    initial arrows, doublecircle terminal states.

    Cdfa: one node per state labelled 'word/terminal degree', a hidden
    start marker pointing at the initial state, merged symbol-only edges.
    """
    if isinstance(obj, Cdfa):
        return _cdfa_dot(obj)
    if isinstance(obj, FuzzyAutomaton):
        return _automaton_dot(obj)
    raise TypeError(f"cannot export {type(obj).__name__} as DOT")


def _cdfa_dot(c: Cdfa) -> str:
    fmt = c.lattice.format_value
    out = ["digraph cdfa {", "  rankdir=LR;"]
    out.append('  __start [shape=point, label=""];')
    for s in range(c.n):
        label = f"{format_word(c.labels[s].word)}/{fmt(c.terminal[s])}"
        out.append(f"  s{s + 1} [shape=circle, label={_quote(label)}];")
    out.append(f"  __start -> s{c.initial + 1};")
    for s in range(c.n):
        grouped: dict[int, list[str]] = {}
        order: list[int] = []
        for i, x in enumerate(c.alphabet):
            t = c.transitions[s][i]
            if t not in grouped:
                grouped[t] = []
                order.append(t)
            grouped[t].append(x)
        for t in order:
            label = ",".join(grouped[t])
            out.append(f"  s{s + 1} -> s{t + 1} [label={_quote(label)}];")
    out.append("}")
    return "\n".join(out) + "\n"


def _automaton_dot(a: FuzzyAutomaton) -> str:
    lat = a.lattice
    boolean = lat.kind == "boolean"
    fmt = lat.format_value
    bottom = lat.bottom
    out = ["digraph fuzzy_automaton {", "  rankdir=LR;"]
    for i in range(a.n):
        shape = "doublecircle" if boolean and a.tau[i] != bottom else "circle"
        out.append(f"  q{i + 1} [shape={shape}, label={_quote(f'q{i + 1}')}];")
    for i in range(a.n):
        if a.sigma[i] == bottom:
            continue
        out.append(f'  __init{i + 1} [shape=point, label=""];')
        if boolean:
            out.append(f"  __init{i + 1} -> q{i + 1};")
        else:
            out.append(f"  __init{i + 1} -> q{i + 1} [label={_quote(fmt(a.sigma[i]))}];")
    for i in range(a.n):
        grouped: dict[int, list[tuple[str, Value]]] = {}
        order: list[int] = []
        for x in a.alphabet:
            row = a.delta[x].entries[i]
            for j, v in enumerate(row):
                if v == bottom:
                    continue
                if j not in grouped:
                    grouped[j] = []
                    order.append(j)
                grouped[j].append((x, v))
        for j in order:
            label = _merged_label(grouped[j], lat)
            out.append(f"  q{i + 1} -> q{j + 1} [label={_quote(label)}];")
    if not boolean:
        for i in range(a.n):
            if a.tau[i] == bottom:
                continue
            out.append(f'  __fin{i + 1} [shape=point, label=""];')
            out.append(f"  q{i + 1} -> __fin{i + 1} [label={_quote(fmt(a.tau[i]))}];")
    out.append("}")
    return "\n".join(out) + "\n"
