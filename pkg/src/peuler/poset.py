"""Labeled posets on ``{1..n}``, linear extensions and the standard constructions."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path
from typing import Iterable, Sequence

from . import kernels
from .errors import CyclicRelation, InvalidLabel, InvalidSpec, SizeMismatch


def _closure(n: int, pairs: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    above = [set() for _ in range(n + 1)]
    for a, b in pairs:
        above[a].add(b)
    # Warshall over labels; n is small
    for k in range(1, n + 1):
        for i in range(1, n + 1):
            if k in above[i]:
                above[i] |= above[k]
    lt = set()
    for a in range(1, n + 1):
        if a in above[a]:
            raise CyclicRelation(f"relation contains a cycle through {a}")
        for b in above[a]:
            lt.add((a, b))
    return frozenset(lt)


@dataclass(frozen=True)
class LabeledPoset:
    """A strict order ``lt`` (transitively closed) on the labels ``1..n``."""

    n: int
    lt: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for a, b in self.lt:
            if a == b:
                raise CyclicRelation(f"reflexive pair ({a},{a})")
            if (b, a) in self.lt:
                raise CyclicRelation(f"pairs ({a},{b}) and ({b},{a})")

    def precedes(self, a: int, b: int) -> bool:
        return (a, b) in self.lt

    def covers(self) -> list[tuple[int, int]]:
        """Cover relations of the Hasse diagram, sorted."""
        out = []
        for a, b in self.lt:
            if not any((a, c) in self.lt and (c, b) in self.lt for c in range(1, self.n + 1)):
                out.append((a, b))
        return sorted(out)

    def pred_masks(self) -> list[int]:
        """``masks[c]`` has bit ``a-1`` set when ``a`` precedes ``c+1``."""
        masks = [0] * self.n
        for a, b in self.lt:
            masks[b - 1] |= 1 << (a - 1)
        return masks

    def is_linear_extension(self, perm: Sequence[int]) -> bool:
        if sorted(perm) != list(range(1, self.n + 1)):
            return False
        pos = {v: i for i, v in enumerate(perm)}
        return all(pos[a] < pos[b] for a, b in self.lt)

    def to_json(self) -> dict:
        return {"n": self.n, "covers": [list(c) for c in self.covers()]}

    def __str__(self) -> str:
        rel = ", ".join(f"{a}<{b}" for a, b in self.covers())
        return f"LabeledPoset(n={self.n}, covers=[{rel}])"


def poset_from_covers(n: int, covers: Iterable[Sequence[int]] = ()) -> LabeledPoset:
    pairs = []
    for c in covers:
        if len(c) != 2:
            raise InvalidLabel(f"relation must be a pair: {c!r}")
        a, b = int(c[0]), int(c[1])
        if not (1 <= a <= n and 1 <= b <= n):
            raise InvalidLabel(f"label out of range 1..{n}: ({a},{b})")
        pairs.append((a, b))
    return LabeledPoset(n, _closure(n, pairs))


def poset_from_json(obj) -> LabeledPoset:
    if isinstance(obj, (str, Path)):
        text = str(obj)
        if not text.lstrip().startswith("{"):
            text = Path(text).read_text()
        obj = json.loads(text)
    try:
        return poset_from_covers(int(obj["n"]), obj.get("covers", []))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (CyclicRelation, InvalidLabel)):
            raise
        raise InvalidSpec(f"malformed poset JSON: {exc}") from exc


def antichain(n: int) -> LabeledPoset:
    return LabeledPoset(n, frozenset())


def chain(n: int) -> LabeledPoset:
    return poset_from_covers(n, [(i, i + 1) for i in range(1, n)])


def chain_of(word: Sequence[int]) -> LabeledPoset:
    """The labeled chain ``word[0] < word[1] < ...``."""
    return poset_from_covers(len(word), list(zip(word, word[1:])))


# ---------------------------------------------------------------------------
# linear extensions


def linear_extensions(P: LabeledPoset) -> list[tuple[int, ...]]:
    """All linear extensions in lexicographic order."""
    return kernels.linear_extensions(P.n, P.pred_masks())


def count_linear_extensions(P: LabeledPoset) -> int:
    return kernels.count_extensions(P.n, P.pred_masks())


# ---------------------------------------------------------------------------
# constructions


def _embed(P: LabeledPoset, labels: Sequence[int]) -> set[tuple[int, int]]:
    return {(labels[a - 1], labels[b - 1]) for a, b in P.lt}


def disjoint_union(P: LabeledPoset, Q: LabeledPoset) -> LabeledPoset:
    labels_q = [P.n + j for j in range(1, Q.n + 1)]
    return LabeledPoset(P.n + Q.n, frozenset(set(P.lt) | _embed(Q, labels_q)))


def disjoint_union_s(P: LabeledPoset, Q: LabeledPoset, S: Iterable[int]) -> LabeledPoset:
    """``P`` placed on the sorted labels ``S``, ``Q`` on the sorted complement."""
    return union_blocks([P, Q], [S])


def union_blocks(posets: Sequence[LabeledPoset], blocks: Sequence[Iterable[int]]) -> LabeledPoset:
    """Iterated labeled union ``P_1 |_S1 P_2 |_S2 ... P_k``.

    ``blocks`` lists the label sets of the first ``k-1`` posets (the last
    block is whatever remains) or all ``k`` of them.
    """
    total = sum(p.n for p in posets)
    blocks = [sorted(set(int(x) for x in b)) for b in blocks]
    if len(blocks) == len(posets) - 1:
        used = set().union(*map(set, blocks)) if blocks else set()
        blocks.append(sorted(set(range(1, total + 1)) - used))
    if len(blocks) != len(posets):
        raise SizeMismatch("need one label block per poset")
    seen: set[int] = set()
    rel: set[tuple[int, int]] = set()
    for p, b in zip(posets, blocks):
        if len(b) != p.n:
            raise SizeMismatch(f"block {b} has size {len(b)}, poset has {p.n} elements")
        if any(not (1 <= x <= total) for x in b):
            raise InvalidLabel(f"block {b} not inside 1..{total}")
        if seen & set(b):
            raise SizeMismatch("label blocks overlap")
        seen |= set(b)
        rel |= _embed(p, b)
    return LabeledPoset(total, frozenset(rel))


def ordinal_sum(P: LabeledPoset, Q: LabeledPoset) -> LabeledPoset:
    """``Q`` (shifted by ``n``) stacked entirely above ``P``."""
    n = P.n
    rel = set(disjoint_union(P, Q).lt)
    rel |= {(i, n + j) for i in range(1, n + 1) for j in range(1, Q.n + 1)}
    return LabeledPoset(n + Q.n, frozenset(rel))


def dual(P: LabeledPoset) -> LabeledPoset:
    return LabeledPoset(P.n, frozenset((b, a) for a, b in P.lt))


def add_bottom(P: LabeledPoset) -> LabeledPoset:
    """New minimum labeled 1; old label ``i`` becomes ``i+1``."""
    return ordinal_sum(antichain(1), P)


# ---------------------------------------------------------------------------
# naturally labeled decreasing trees and forests

T0 = antichain(1)


def decreasing_tree(children: Sequence[LabeledPoset] = (), blocks: Sequence[Iterable[int]] | None = None) -> LabeledPoset:
    """``(T_1 |_S1 ... T_m) (+) T_0``; no children gives ``T_0`` itself."""
    if not children:
        return T0
    below = _forest_union(children, blocks)
    return ordinal_sum(below, T0)


def _forest_union(trees, blocks):
    if blocks is None:
        out = trees[0]
        for t in trees[1:]:
            out = disjoint_union(out, t)
        return out
    return union_blocks(list(trees), blocks)


def decreasing_forest(spec) -> LabeledPoset:
    """Build a forest from a nested spec.

    A tree is ``None``/``"T0"``/``[]`` for the one-element tree, or a mapping
    ``{"children": [tree, ...], "blocks": [[labels], ...]}``. A forest is
    ``{"trees": [tree, ...], "blocks": ...}`` or a bare tree. ``blocks`` is
    optional (consecutive labels) and may omit the last block.
    """
    if isinstance(spec, LabeledPoset):
        return spec
    if spec is None or spec == "T0" or spec == [] or spec == {}:
        return T0
    if not isinstance(spec, dict):
        raise InvalidSpec(f"cannot read tree spec {spec!r}")
    try:
        if "trees" in spec:
            trees = [decreasing_forest(t) for t in spec["trees"]]
            if not trees:
                raise InvalidSpec("a forest needs at least one tree")
            return _forest_union(trees, spec.get("blocks"))
        children = [decreasing_forest(t) for t in spec.get("children", [])]
        return decreasing_tree(children, spec.get("blocks"))
    except (SizeMismatch, InvalidLabel) as exc:
        raise InvalidSpec(str(exc)) from exc


def is_decreasing_forest(P: LabeledPoset) -> bool:
    """Natural labeling and every element covered by at most one element."""
    if any(a > b for a, b in P.lt):
        return False
    up = {}
    for a, b in P.covers():
        if a in up:
            return False
        up[a] = b
    return True


def _set_partitions(items: list[int]):
    # blocks in order of their smallest element
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k in range(len(rest) + 1):
        for others in combinations(rest, k):
            blk = [first, *others]
            remaining = [x for x in rest if x not in others]
            for tail in _set_partitions(remaining):
                yield [blk, *tail]


def all_decreasing_forests(n: int, _cache: dict | None = None) -> list[LabeledPoset]:
    """Every naturally labeled decreasing forest on ``n`` elements.

    Generated by the recursive constructor: a tree of size ``k`` is a forest
    of size ``k-1`` with a new top element, a forest is a labeled union of
    trees over a set partition of the labels. Each poset appears once.
    """
    cache = {} if _cache is None else _cache
    return list(_forests(n, cache))


def _trees(k, cache):
    key = ("t", k)
    if key not in cache:
        if k == 1:
            cache[key] = [T0]
        else:
            cache[key] = [ordinal_sum(f, T0) for f in _forests(k - 1, cache)]
    return cache[key]


def _forests(n, cache):
    key = ("f", n)
    if key not in cache:
        out = []
        for parts in _set_partitions(list(range(1, n + 1))):
            pools = [_trees(len(b), cache) for b in parts]
            for choice in product(*pools):
                out.append(union_blocks(list(choice), parts))
        cache[key] = out
    return cache[key]


def random_decreasing_forest(size: int, seed: int | random.Random) -> LabeledPoset:
    """Seeded random forest built by the recursive constructor.

    Procedure: split ``size`` into tree sizes by repeatedly drawing a uniform
    size in ``1..remaining``; every tree of size ``k > 1`` is a random forest
    of size ``k-1`` under a new top; label blocks are a uniform random
    assignment of labels to trees. Uniform over construction choices, not over
    isomorphism classes.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if size < 1:
        raise InvalidSpec("forest size must be positive")
    sizes = []
    left = size
    while left:
        k = rng.randint(1, left)
        sizes.append(k)
        left -= k
    trees = []
    for k in sizes:
        trees.append(T0 if k == 1 else ordinal_sum(random_decreasing_forest(k - 1, rng), T0))
    labels = list(range(1, size + 1))
    rng.shuffle(labels)
    blocks, at = [], 0
    for k in sizes:
        blocks.append(sorted(labels[at:at + k]))
        at += k
    return union_blocks(trees, blocks)


# ---------------------------------------------------------------------------
# relabeling of labeled unions


def union_relabel_permutation(P: LabeledPoset, Q: LabeledPoset, S: Iterable[int]) -> tuple[int, ...]:
    """Index permutation taking the variables of ``A_{P |_S Q}`` to those of ``A_{P | Q}``.

    Repeatedly swaps an ``s`` in ``S`` with ``t = s - 1`` outside ``S`` (the
    smallest such ``s``) until ``S = {1..n}``. Entry ``i-1`` of the result is
    the image of index ``i``.
    """
    n, total = P.n, P.n + Q.n
    S = set(int(s) for s in S)
    if len(S) != n:
        raise SizeMismatch(f"|S| = {len(S)} but P has {n} elements")
    if any(not (1 <= s <= total) for s in S):
        raise InvalidLabel(f"S not inside 1..{total}")
    sigma = list(range(1, total + 1))  # sigma[i-1] = current image of i
    target = set(range(1, n + 1))
    while S != target:
        s = min(x for x in S if any(t < x for t in range(1, total + 1) if t not in S))
        t = s - 1
        S.remove(s)
        S.add(t)
        sigma = [t if v == s else s if v == t else v for v in sigma]
    return tuple(sigma)


# ---------------------------------------------------------------------------
# random and exhaustive posets for oracle tests


def random_poset(n: int, rng: random.Random, density: float | None = None) -> LabeledPoset:
    """Random labeling of a random order built on a hidden linear order."""
    p = rng.uniform(0.1, 0.6) if density is None else density
    hidden = list(range(1, n + 1))
    rng.shuffle(hidden)
    pairs = [(hidden[i], hidden[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return LabeledPoset(n, _closure(n, pairs))


def all_posets(n: int) -> list[LabeledPoset]:
    """Every strict partial order on ``1..n`` (labeled; 219 for n = 4)."""
    pairs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
    out = []
    for mask in range(1 << len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if (mask >> i) & 1}
        if any((b, a) in rel for a, b in rel):
            continue
        if any((a, d) not in rel for a, b in rel for c, d in rel if b == c):
            continue
        out.append(LabeledPoset(n, frozenset(rel)))
    return out
