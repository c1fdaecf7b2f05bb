"""Right-linear grammar for the non-unique trails, realized as an NFA.

The grammar guesses the two occurrences of the leading anchor vertex, a
marked vertex seen up to the second occurrence that must recur afterwards,
and checks that the two anchor occurrences have distinct followers.  State
shapes:

* ``start``            before the first anchor guess,
* ``anchor(a)``        just read the first anchor occurrence,
* ``span(a, c, b)``    inside the stretch between the anchor occurrences;
                       ``c`` is the anchor's follower, ``b`` the currently
                       marked vertex (re-markable at every step),
* ``branch(c, b)``     just read the second anchor occurrence,
* ``await(b)``         past the second occurrence, waiting for the mark,
* ``accept``           the mark recurred; absorbing.

Two rule sets are built.  In ``strict`` mode the mark can only be a vertex
of the in-between stretch (or the anchor itself when the stretch is
empty), which is sound but misses inputs like 0 1 0 0 and 0 1 0 2 0.
``amended`` mode additionally lets the mark be the anchor while the
stretch is nonempty, closing the gap; the cross-validation harness
reports the delta between the two instead of hiding it.
"""

from dataclasses import dataclass

from .core import Trail, validate_trail

State = tuple
START: State = ("start",)
ACCEPT: State = ("accept",)


@dataclass(frozen=True)
class GrammarNFA:
    size: int
    mode: str
    states: frozenset
    transitions: dict
    start: State = START
    accepting: frozenset = frozenset({ACCEPT})


def build_grammar_nfa(size: int, mode: str = "strict") -> GrammarNFA:
    """Materialize the full state space and transition relation."""
    if size < 1:
        raise ValueError("alphabet size must be at least 1")
    if mode not in ("strict", "amended"):
        raise ValueError(f"mode must be 'strict' or 'amended', not {mode!r}")
    syms = range(size)
    states = {START, ACCEPT}
    trans: dict[State, dict[int, set]] = {}

    def arc(src: State, symbol: int, dst: State) -> None:
        trans.setdefault(src, {}).setdefault(symbol, set()).add(dst)

    for d in syms:
        arc(START, d, START)
        arc(START, d, ("anchor", d))
    for a in syms:
        states.add(("anchor", a))
        states.add(("await", a))
        for c in syms:
            states.add(("branch", a, c))
            for b in syms:
                states.add(("span", a, c, b))
    for a in syms:
        for c in syms:
            arc(("anchor", a), c, ("span", a, c, c))
            if mode == "amended":
                arc(("anchor", a), c, ("span", a, c, a))
        arc(("anchor", a), a, ("branch", a, a))
    for a in syms:
        for c in syms:
            for b in syms:
                src = ("span", a, c, b)
                for d in syms:
                    arc(src, d, src)
                    arc(src, d, ("span", a, c, d))
                arc(src, a, ("branch", c, b))
    for c in syms:
        for b in syms:
            src = ("branch", c, b)
            for d in syms:
                if d != c:
                    arc(src, d, ("await", b))
            if b != c:
                arc(src, b, ACCEPT)
    for b in syms:
        src = ("await", b)
        for d in syms:
            arc(src, d, src)
        arc(src, b, ACCEPT)
    for d in syms:
        arc(ACCEPT, d, ACCEPT)

    frozen = {src: {sym: frozenset(dsts) for sym, dsts in by_sym.items()} for src, by_sym in trans.items()}
    return GrammarNFA(size=size, mode=mode, states=frozenset(states), transitions=frozen)


def state_count(size: int) -> int:
    """2 + 2m + m^2 + m^3: start/accept, anchor+await, branch, span."""
    return 2 + 2 * size + size**2 + size**3


def iter_live_sets(nfa: GrammarNFA, trail: Trail):
    """Subset simulation; yields the live state set after every symbol."""
    validate_trail(trail, nfa.size)
    live = frozenset({nfa.start})
    yield live
    for symbol in trail:
        step: set = set()
        for state in live:
            step |= nfa.transitions.get(state, {}).get(symbol, frozenset())
        live = frozenset(step)
        yield live


def nfa_accepts(nfa: GrammarNFA, trail: Trail) -> bool:
    live = frozenset({nfa.start})
    for group in iter_live_sets(nfa, trail):
        live = group
    return bool(live & nfa.accepting)


def _state_label(state: State) -> str:
    kind, *rest = state
    if not rest:
        return kind
    return f"{kind}({','.join(str(r) for r in rest)})"


def export_transitions(nfa: GrammarNFA) -> str:
    """Plain-text relation, one ``from symbol to`` triple per line, sorted."""
    lines = []
    for src, by_sym in nfa.transitions.items():
        for symbol, dsts in by_sym.items():
            for dst in dsts:
                lines.append(f"{_state_label(src)} {symbol} {_state_label(dst)}")
    lines.sort()
    return "".join(line + "\n" for line in lines)
