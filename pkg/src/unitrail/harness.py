"""Exhaustive cross-validation of every classifier in the package.

For each string over a small alphabet the following must agree:

* the streaming automaton accepts,
* the enumeration oracle finds exactly one Eulerian trail,
* the direct proper-transposition scan finds nothing,
* the amended grammar NFA rejects.

The strict grammar variant is additionally audited one way: whatever it
accepts must really be non-unique.  Strings it misses are recorded as
completeness gaps rather than failures, so the delta stays visible.
"""

import itertools
import time
from dataclasses import dataclass, field

from .automaton import run
from .grammar import build_grammar_nfa, nfa_accepts
from .oracle import is_unique_trail
from .transposition import has_proper_transposition

CLASSIFIERS = ("automaton", "oracle", "transposition-scan", "grammar-amended", "grammar-strict")


@dataclass
class CrosscheckReport:
    alphabet_size: int
    max_len: int
    checked: int = 0
    disagreements: list = field(default_factory=list)
    strict_unsound: list = field(default_factory=list)
    strict_gaps: list = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def agreed(self) -> bool:
        return not self.disagreements and not self.strict_unsound


def cross_validate(size: int, max_len: int) -> CrosscheckReport:
    """Check all strings of length 1..max_len over ``size`` symbols."""
    if size < 1:
        raise ValueError("alphabet size must be at least 1")
    strict = build_grammar_nfa(size, "strict")
    amended = build_grammar_nfa(size, "amended")
    report = CrosscheckReport(size, max_len)
    spent = dict.fromkeys(CLASSIFIERS, 0.0)

    def automaton_accepts(word):
        return run(word, size).accepted

    def timed(name, fn, *args):
        begin = time.perf_counter()
        result = fn(*args)
        spent[name] += time.perf_counter() - begin
        return result

    for length in range(1, max_len + 1):
        for word in itertools.product(range(size), repeat=length):
            report.checked += 1
            accepted = timed("automaton", automaton_accepts, word)
            unique = timed("oracle", is_unique_trail, word)
            swappable = timed("transposition-scan", has_proper_transposition, word)
            by_amended = timed("grammar-amended", nfa_accepts, amended, word)
            by_strict = timed("grammar-strict", nfa_accepts, strict, word)
            if not (accepted == unique == (not swappable) == (not by_amended)):
                report.disagreements.append(
                    (word, {"automaton": accepted, "oracle": unique,
                            "transposition-scan": not swappable, "grammar-amended": not by_amended})
                )
            if by_strict and not swappable:
                report.strict_unsound.append(word)
            if swappable and not by_strict:
                report.strict_gaps.append(word)
    report.timings = spent
    return report
