"""Complete deterministic finite automata.

States are named 1..n.  The text format is line oriented, UTF-8, with
``#`` starting a comment line and blank lines ignored::

    states 5
    alphabet a b
    start 1
    finals 1
    trans a 2 1 4 5 3
    trans b 2 3 4 1 2

There is exactly one ``trans`` line per alphabet letter; the i-th integer
on a ``trans x`` line is the successor of state i on letter x.  ``finals``
lists zero or more states.  Only complete transition tables are accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .transform import MAX_DEGREE, Transformation, _make


class DfaParseError(ValueError):
    """Malformed DFA text; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Dfa:
    """Complete DFA: delta[i][q-1] is the successor of state q on alphabet[i]."""

    n: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    start: int
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.n < 1:
            raise ValueError("a DFA needs at least one state")
        if not self.alphabet:
            raise ValueError("alphabet must not be empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet letters must be distinct")
        for a in self.alphabet:
            if not a or a.split() != [a]:
                raise ValueError(f"letter {a!r} is not a single token")
        if len(self.delta) != len(self.alphabet):
            raise ValueError("need exactly one transition row per letter")
        for a, row in zip(self.alphabet, self.delta):
            if len(row) != self.n:
                raise ValueError(f"transition row for {a!r} has {len(row)} entries, expected {self.n}")
            for q in row:
                if not isinstance(q, int) or not 1 <= q <= self.n:
                    raise ValueError(f"state {q} out of range 1..{self.n}")
        if not 1 <= self.start <= self.n:
            raise ValueError(f"start state {self.start} out of range 1..{self.n}")
        for q in self.finals:
            if not isinstance(q, int) or not 1 <= q <= self.n:
                raise ValueError(f"state {q} out of range 1..{self.n}")

    @cached_property
    def _letter_pos(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    def letter_index(self, a: str) -> int:
        try:
            return self._letter_pos[a]
        except KeyError:
            raise ValueError(f"unknown letter {a!r}") from None

    def transition(self, q: int, a: str) -> int:
        return self.delta[self.letter_index(a)][q - 1]

    def letter_transformation(self, a: str) -> Transformation:
        return Transformation(self.delta[self.letter_index(a)])


def parse(text) -> Dfa:
    """Parse the text format above into a Dfa."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    n = None
    alphabet: tuple[str, ...] | None = None
    start = None
    finals: list[int] | None = None
    trans: dict[str, tuple[tuple[int, ...], int]] = {}

    def want_int(token: str, lineno: int) -> int:
        try:
            return int(token)
        except ValueError:
            raise DfaParseError(f"expected an integer, got {token!r}", lineno) from None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        key = fields[0]
        if key == "states":
            if n is not None:
                raise DfaParseError("duplicate 'states' line", lineno)
            if len(fields) != 2:
                raise DfaParseError("'states' expects one integer", lineno)
            n = want_int(fields[1], lineno)
            if n < 1:
                raise DfaParseError(f"state count {n} must be positive", lineno)
        elif key == "alphabet":
            if alphabet is not None:
                raise DfaParseError("duplicate 'alphabet' line", lineno)
            letters = fields[1:]
            if not letters:
                raise DfaParseError("'alphabet' expects at least one letter", lineno)
            if len(set(letters)) != len(letters):
                raise DfaParseError("duplicate letter in alphabet", lineno)
            alphabet = tuple(letters)
        elif key == "start":
            if start is not None:
                raise DfaParseError("duplicate 'start' line", lineno)
            if len(fields) != 2:
                raise DfaParseError("'start' expects one integer", lineno)
            start = want_int(fields[1], lineno)
        elif key == "finals":
            if finals is not None:
                raise DfaParseError("duplicate 'finals' line", lineno)
            finals = [want_int(tok, lineno) for tok in fields[1:]]
        elif key == "trans":
            if len(fields) < 2:
                raise DfaParseError("'trans' expects a letter and successor states", lineno)
            letter = fields[1]
            if letter in trans:
                raise DfaParseError(f"duplicate 'trans' line for letter {letter!r}", lineno)
            row = tuple(want_int(tok, lineno) for tok in fields[2:])
            trans[letter] = (row, lineno)
        else:
            raise DfaParseError(f"unknown keyword {key!r}", lineno)

    if n is None:
        raise DfaParseError("missing 'states' line")
    if alphabet is None:
        raise DfaParseError("missing 'alphabet' line")
    if start is None:
        raise DfaParseError("missing 'start' line")
    if finals is None:
        raise DfaParseError("missing 'finals' line")
    for letter, (row, lineno) in trans.items():
        if letter not in alphabet:
            raise DfaParseError(f"letter {letter!r} not in alphabet", lineno)
        if len(row) != n:
            raise DfaParseError(f"expected {n} successors, got {len(row)}", lineno)
        for q in row:
            if not 1 <= q <= n:
                raise DfaParseError(f"state {q} out of range 1..{n}", lineno)
    for letter in alphabet:
        if letter not in trans:
            raise DfaParseError(f"missing 'trans' line for letter {letter!r}")
    if not 1 <= start <= n:
        raise DfaParseError(f"state {start} out of range 1..{n}")
    for q in finals:
        if not 1 <= q <= n:
            raise DfaParseError(f"state {q} out of range 1..{n}")

    return Dfa(n, alphabet, tuple(trans[a][0] for a in alphabet), start, frozenset(finals))


def serialize(d: Dfa) -> str:
    """Render a Dfa in the text format; parse(serialize(d)) == d."""
    lines = [
        f"states {d.n}",
        "alphabet " + " ".join(d.alphabet),
        f"start {d.start}",
        ("finals " + " ".join(str(q) for q in sorted(d.finals))).rstrip(),
    ]
    for a, row in zip(d.alphabet, d.delta):
        lines.append(f"trans {a} " + " ".join(str(q) for q in row))
    return "\n".join(lines) + "\n"


def word_transformation(d: Dfa, w) -> Transformation:
    """The state map induced by reading w; the empty word gives the identity."""
    if d.n > MAX_DEGREE:
        raise ValueError(f"state maps of degree {d.n} exceed the supported maximum {MAX_DEGREE}")
    cur = tuple(range(1, d.n + 1))
    for a in w:
        row = d.delta[d.letter_index(a)]
        cur = tuple(row[x - 1] for x in cur)
    return _make(cur)


def accepts(d: Dfa, w) -> bool:
    q = d.start
    for a in w:
        q = d.delta[d.letter_index(a)][q - 1]
    return q in d.finals


def _reachable(d: Dfa) -> list[int]:
    # Breadth first from the start, letters in alphabet order; the visit
    # order is therefore the order of first reach by lexicographically
    # smallest words.
    order = [d.start]
    seen = {d.start}
    i = 0
    while i < len(order):
        q = order[i]
        i += 1
        for row in d.delta:
            r = row[q - 1]
            if r not in seen:
                seen.add(r)
                order.append(r)
    return order


def _refine(succ: np.ndarray, fin: np.ndarray) -> tuple[np.ndarray, int]:
    # Moore partition refinement; succ is (letters, m) of 0-based successors.
    m = succ.shape[1]
    cls = fin.astype(np.int64)
    ncls = len(np.unique(cls))
    keys = np.empty((m, succ.shape[0] + 1), dtype=np.int64)
    while True:
        keys[:, 0] = cls
        for j in range(succ.shape[0]):
            keys[:, j + 1] = cls[succ[j]]
        _, new_cls = np.unique(keys, axis=0, return_inverse=True)
        new_cls = new_cls.reshape(-1)
        new_n = int(new_cls.max()) + 1
        if new_n == ncls:
            return new_cls, new_n
        cls, ncls = new_cls, new_n


def _reachable_refined(d: Dfa) -> tuple[list[int], np.ndarray, np.ndarray, int]:
    order = _reachable(d)
    pos = {q: i for i, q in enumerate(order)}
    m = len(order)
    k = len(d.alphabet)
    succ = np.empty((k, m), dtype=np.int64)
    for a in range(k):
        row = d.delta[a]
        succ[a] = [pos[row[q - 1]] for q in order]
    fin = np.fromiter((q in d.finals for q in order), dtype=bool, count=m)
    cls, ncls = _refine(succ, fin)
    return order, succ, cls, ncls


def minimize(d: Dfa) -> Dfa:
    """Unique minimal complete DFA for the same language, in canonical form.

    Unreachable states are dropped, equivalent states merged, and the
    result is renumbered by order of first reach via lexicographically
    smallest words, so two equivalent inputs minimize to equal values.
    """
    order, succ, cls, ncls = _reachable_refined(d)
    _, first = np.unique(cls, return_index=True)
    cls_l = cls.tolist()
    first_l = first.tolist()
    succ_l = succ.tolist()
    k = len(d.alphabet)

    bfs = [cls_l[0]]
    new_id = {cls_l[0]: 1}
    i = 0
    while i < len(bfs):
        c = bfs[i]
        i += 1
        rep = first_l[c]
        for a in range(k):
            tc = cls_l[succ_l[a][rep]]
            if tc not in new_id:
                new_id[tc] = len(new_id) + 1
                bfs.append(tc)
    # every refined class contains a reachable state, so all are visited
    assert len(new_id) == ncls

    fin_by_class = {cls_l[idx]: (order[idx] in d.finals) for idx in first_l}
    delta = tuple(
        tuple(new_id[cls_l[succ_l[a][first_l[c]]]] for c in bfs)
        for a in range(k)
    )
    finals = frozenset(new_id[c] for c in bfs if fin_by_class[c])
    return Dfa(ncls, d.alphabet, delta, 1, finals)


def nerode_partition(d: Dfa) -> list[list[int]]:
    """Equivalence classes of the reachable states, as sorted state lists."""
    order, _, cls, ncls = _reachable_refined(d)
    blocks: list[list[int]] = [[] for _ in range(ncls)]
    for idx, c in enumerate(cls.tolist()):
        blocks[c].append(order[idx])
    for b in blocks:
        b.sort()
    blocks.sort(key=lambda b: b[0])
    return blocks


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """Language equality, via comparison of canonical minimal forms."""
    if set(d1.alphabet) != set(d2.alphabet):
        raise ValueError("alphabet mismatch")
    if d2.alphabet != d1.alphabet:
        perm = [d2.alphabet.index(a) for a in d1.alphabet]
        d2 = Dfa(d2.n, d1.alphabet, tuple(d2.delta[i] for i in perm), d2.start, d2.finals)
    return minimize(d1) == minimize(d2)


def unary_structure(d: Dfa) -> tuple[int, int, int]:
    """(tail length, loop length, loop entry state) of a one-letter DFA."""
    if len(d.alphabet) != 1:
        raise ValueError("unary_structure needs a one-letter alphabet")
    row = d.delta[0]
    seen: dict[int, int] = {}
    q = d.start
    i = 0
    while q not in seen:
        seen[q] = i
        i += 1
        q = row[q - 1]
    j = seen[q]
    return j, i - j, q
