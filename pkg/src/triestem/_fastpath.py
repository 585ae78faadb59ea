"""Hot path for :meth:`Pipeline.stem`.

The tries are flattened into nested ``(children, payload)`` tuples, and a
dispatch table keyed on a word's last two letters lists, in pass order, the
passes that can match it together with the node reached after those two
hops.  A pass whose trie has no path for the ending is never visited.

``Pipeline.stem_with_trace`` walks the :class:`RuleTrie` objects directly and
is the reference the compiled and pure-Python versions are tested against.
"""

from __future__ import annotations

from string import ascii_lowercase
from typing import Sequence

from .trie import RuleTrie, TrieNode

_EMPTY: dict = {}


def _flatten(node: TrieNode) -> tuple[dict, tuple[int, str] | None]:
    rule = node.rule
    payload = None if rule is None else (rule.remove_count, rule.replacement)
    return {ch: _flatten(child) for ch, child in node.children.items()}, payload


def compile_dispatch(tries: Sequence[RuleTrie]) -> list[dict[str, tuple]]:
    """``table[i][ending]`` -> ((pass, children, payload), ...) over passes >= i.

    ``ending`` is the last two letters of a word (or its only letter);
    ``payload`` is the deepest rule seen in the first two hops.
    """
    flat = [_flatten(trie.root)[0] for trie in tries]
    table = []
    for start in range(len(tries) + 1):
        by_ending: dict[str, list] = {}
        for index in range(start, len(tries)):
            for last, (kids1, pay1) in flat[index].items():
                if pay1 is not None:
                    by_ending.setdefault(last, []).append((index, _EMPTY, pay1))
                for before in ascii_lowercase:
                    if before in kids1:
                        kids2, pay2 = kids1[before]
                        entry = (index, kids2, pay2 if pay2 is not None else pay1)
                    elif pay1 is not None:
                        entry = (index, _EMPTY, pay1)
                    else:
                        continue
                    by_ending.setdefault(before + last, []).append(entry)
        table.append({ending: tuple(entries) for ending, entries in by_ending.items()})
    return table


def _stem_passes(word: str, shortcuts: dict, dispatch: list, min_len: int) -> str:
    form = word.lower()
    hit = shortcuts.get(form)
    if hit is not None:
        return hit
    if not (form.isascii() and form.isalpha()):
        return word

    key = form[-2:]
    candidates = dispatch[0].get(key)
    while candidates:
        for index, kids, payload in candidates:
            if kids:
                for ch in form[-3::-1]:
                    if ch not in kids:
                        break
                    kids, deeper = kids[ch]
                    if deeper is not None:
                        payload = deeper
            if payload is None:
                continue
            count, replacement = payload
            if not count and not replacement:
                continue  # protection rule
            retained = len(form) - count
            if retained < min_len:
                continue
            form = form[:retained] + replacement
            assert retained >= min_len
            if form[-2:] != key:
                # ending changed: restart with the passes after this one
                key = form[-2:]
                candidates = dispatch[index + 1].get(key)
                break
        else:
            break
    return form


python_stem_passes = _stem_passes

try:
    from ._speedups import stem_passes
    COMPILED = True
except ImportError:  # extension not built
    stem_passes = _stem_passes
    COMPILED = False
