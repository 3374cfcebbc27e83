"""Constructions for root(L) = { w : some positive power of w lies in L }.

The generic construction runs the subject DFA's transformation monoid as
a new state set: reading a word moves from the identity to the state map
the word induces, and a map is accepting when some positive iterate of it
takes the original start state into the original finals.  Only reachable
maps, i.e. the transformation monoid, are ever materialized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .dfa import Dfa, accepts, minimize, unary_structure
from .monoid import DEFAULT_MAX_ELEMENTS, TransMonoid, transformation_monoid
from .transform import Transformation


@dataclass(frozen=True)
class RootAutomaton:
    """Power automaton over the monoid of a source DFA, recognizing root(L).

    State s of `dfa` corresponds to monoid element s-1; state 1 is the
    identity and is the start state.
    """

    dfa: Dfa
    monoid: TransMonoid
    origin: Dfa

    def element_of(self, state: int) -> Transformation:
        """The transformation behind a state of the underlying Dfa."""
        return self.monoid.element(state - 1)


def accepting_transformation(f, q0: int, finals) -> bool:
    """True iff some positive iterate of f maps q0 into finals.

    Walks q0, f(q0), f(f(q0)), ...; after degree-many applications the
    trajectory has visited every state it ever will.
    """
    row = tuple(f)
    if not 1 <= q0 <= len(row):
        raise ValueError(f"state {q0} out of range 1..{len(row)}")
    finals = frozenset(finals)
    q = row[q0 - 1]
    for _ in range(len(row)):
        if q in finals:
            return True
        q = row[q - 1]
    return False


def root_automaton(d: Dfa, *, monoid: TransMonoid | None = None,
                   max_elements: int = DEFAULT_MAX_ELEMENTS) -> RootAutomaton:
    """Build the automaton recognizing root(L(d)).

    A precomputed transformation monoid of d may be passed to share work
    across calls that differ only in start or final states.
    """
    m = monoid if monoid is not None else transformation_monoid(d, max_elements=max_elements)
    if m.degree != d.n:
        raise ValueError(f"monoid degree {m.degree} does not match DFA size {d.n}")
    rows = m._rows
    index = m._index
    delta = tuple(
        tuple(index[tuple(g[x - 1] for x in f)] + 1 for f in rows)
        for g in d.delta
    )
    q0 = d.start
    fset = d.finals
    n = d.n
    finals = []
    for i, row in enumerate(rows):
        q = row[q0 - 1]
        for _ in range(n):
            if q in fset:
                finals.append(i + 1)
                break
            q = row[q - 1]
    dfa = Dfa(len(rows), d.alphabet, delta, 1, frozenset(finals))
    return RootAutomaton(dfa=dfa, monoid=m, origin=d)


def root_member_oracle(d: Dfa, w) -> bool:
    """Brute-force membership in root(L(d)): try w^1 .. w^n directly.

    The cutoff at n = d.n is sound because the states reached by the
    successive powers of w start repeating within n steps.
    """
    return any(accepts(d, w * m) for m in range(1, d.n + 1))


def _divisors(t: int) -> list[int]:
    return [s for s in range(1, t + 1) if t % s == 0]


def unary_root(d: Dfa) -> Dfa:
    """Root of a one-letter language, by marking divisor states final.

    Keeps the reachable tail-and-loop chain of d (renumbered 1.. in path
    order) and recomputes finals: a^s joins the root exactly when s >= 1
    divides some accepted length t >= 1.  Tail-accepted lengths contribute
    their divisors directly; a final loop state reached first at length b
    (with loop length l) accepts the lengths b, b+l, b+2l, ..., and s
    divides one of those iff gcd(l, s mod l) divides b.  The empty word
    carries over as is, since only the empty word powers to it.
    """
    if len(d.alphabet) != 1:
        raise ValueError("unary_root needs a one-letter alphabet")
    j, l, _ = unary_structure(d)
    m = j + l
    row = d.delta[0]
    chain = []
    q = d.start
    for _ in range(m):
        chain.append(q)
        q = row[q - 1]
    final_idx = {i for i, q in enumerate(chain) if q in d.finals}

    new_finals: set[int] = set()
    if 0 in final_idx:
        new_finals.add(1)
    for t in final_idx:
        if 1 <= t < j:
            for s in _divisors(t):
                pos = s if s < m else j + (s - j) % l
                new_finals.add(pos + 1)
    loop_offsets = [b for b in final_idx if b >= j]
    if loop_offsets:
        for pos in range(m):
            if pos == 0 and j > 0:
                continue  # the start of a nonempty tail is only reached by length 0
            g = math.gcd(l, pos % l)
            if any(b % g == 0 for b in loop_offsets):
                new_finals.add(pos + 1)

    delta_row = tuple(i + 2 for i in range(m - 1)) + (j + 1,)
    return Dfa(m, d.alphabet, (delta_row,), 1, frozenset(new_finals))


def root_state_complexity(d: Dfa) -> int:
    """Number of states of the minimal DFA for root(L(d))."""
    return minimize(root_automaton(d).dfa).n
