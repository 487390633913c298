"""
Brute-force oracles used as independent references in the tests.

They rely only on group multiplication and lengths of elements, never on the
Bruhat tables, coset tables or cover lists of the library.
"""

from __future__ import annotations

from itertools import product


def subword_set(W, w):
    """Every product of a subword of a reduced word of ``w``: the Bruhat ideal below ``w``."""
    word = w.word
    out = set()
    for mask in product((0, 1), repeat=len(word)):
        out.add(W.normal_form([s for s, m in zip(word, mask) if m]))
    return out


def bruhat_table(W):
    below = {w: subword_set(W, w) for w in W.elements}
    return lambda u, w: u in below[w]


def reflections(W):
    """All conjugates of simple generators."""
    simple = [W.s(i) for i in range(1, W.rank + 1)]
    return {x * s * x.inverse() for x in W.elements for s in simple}


def subgroup(W, J):
    """The subgroup generated by ``s_j``, ``j`` in ``J``, by closure."""
    seen = {W.identity}
    frontier = [W.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for j in J:
                y = x * W.s(j)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def coset_map(W, J):
    H = subgroup(W, J)
    return {w: frozenset(w * h for h in H) for w in W.elements}


def bruhat_covers(W):
    """``v -> {w : w = v t, l(w) = l(v) + 1}`` from the reflection set."""
    T = reflections(W)
    return {v: {v * t for t in T if (v * t).length == v.length + 1} for v in W.elements}


def p_leq_table(W, J):
    """Reachability along Bruhat covers that change the coset."""
    cov = bruhat_covers(W)
    cos = coset_map(W, J)
    reach = {}
    for v in sorted(W.elements, key=lambda e: -e.length):
        r = {v}
        for w in cov[v]:
            if cos[w] != cos[v]:
                r |= reach[w]
        reach[v] = r
    return lambda u, w: w in reach[u]


def all_chains(W, a, b, leq):
    cov = bruhat_covers(W)
    out = []

    def extend(c):
        if c[-1] == b:
            out.append(tuple(c))
            return
        for v in cov[c[-1]]:
            if leq(v, b):
                extend(c + [v])

    extend([a])
    return out


def gale_leq(I, J):
    return all(a <= b for a, b in zip(sorted(I), sorted(J)))
