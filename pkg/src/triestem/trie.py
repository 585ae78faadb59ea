"""Reverse character trie holding the rules of one suffix class."""

from __future__ import annotations

from typing import Iterable, Iterator

from .rules import SuffixRule, apply_rule

__all__ = ["TrieNode", "RuleTrie", "DuplicateSuffixError", "apply_rule"]


class DuplicateSuffixError(ValueError):
    def __init__(self, existing: SuffixRule, new: SuffixRule):
        self.existing = existing
        self.new = new
        super().__init__(f"duplicate-suffix: {new.suffix!r} already holds rule {existing}")


class TrieNode:
    __slots__ = ("children", "rule")

    def __init__(self):
        self.children: dict[str, TrieNode] = {}
        self.rule: SuffixRule | None = None


class RuleTrie:
    """Rules keyed by their suffix read right to left.

    The path for ``lves`` is root -> s -> e -> v -> l, and the rule sits on
    the last node.  :meth:`lookup_longest` walks a word from its last
    character and keeps the deepest rule it passes, so a longer suffix always
    beats a shorter one.

    >>> trie = RuleTrie([SuffixRule("s", 1), SuffixRule("lves", 3, "f")])
    >>> trie.lookup_longest("selves")
    SuffixRule(suffix='lves', remove_count=3, replacement='f')
    >>> trie.lookup_longest("cats").suffix
    's'
    >>> trie.lookup_longest("dog") is None
    True
    """

    def __init__(self, rules: Iterable[SuffixRule] = ()):
        self.root = TrieNode()
        self.rule_count = 0
        for rule in rules:
            self.insert(rule)

    def insert(self, rule: SuffixRule) -> None:
        node = self.root
        for ch in reversed(rule.suffix):
            child = node.children.get(ch)
            if child is None:
                child = node.children[ch] = TrieNode()
            node = child
        if node.rule is not None:
            raise DuplicateSuffixError(node.rule, rule)
        node.rule = rule
        self.rule_count += 1

    def lookup_longest(self, word: str) -> SuffixRule | None:
        node = self.root
        found = None
        for ch in reversed(word):
            node = node.children.get(ch)
            if node is None:
                break
            if node.rule is not None:
                found = node.rule
        return found

    def lookup_with_hops(self, word: str) -> tuple[SuffixRule | None, int]:
        """Like :meth:`lookup_longest`, also returning the number of node hops taken."""
        node = self.root
        found = None
        hops = 0
        for ch in reversed(word):
            node = node.children.get(ch)
            if node is None:
                break
            hops += 1
            if node.rule is not None:
                found = node.rule
        return found, hops

    def first_letters(self) -> frozenset[str]:
        """Final letters a word must end with for any rule here to match."""
        return frozenset(self.root.children)

    def rules(self) -> Iterator[SuffixRule]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            if node.rule is not None:
                yield node.rule
            stack.extend(node.children.values())

    def nodes(self) -> Iterator[TrieNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(node.children.values())

    def __len__(self) -> int:
        return self.rule_count

    def __contains__(self, suffix: str) -> bool:
        node = self.root
        for ch in reversed(suffix):
            node = node.children.get(ch)
            if node is None:
                return False
        return node.rule is not None
