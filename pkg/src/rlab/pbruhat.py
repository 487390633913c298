"""
P-Bruhat order, equivalence of P-Bruhat intervals, the poset Q(W, W_P) of
projected Richardson strata, and Richardson-model search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .coxeter import Element
from .errors import ModelSearchError, NotComparableError
from .parabolic import ParabolicQuotient, demazure

__all__ = [
    "p_cover",
    "p_leq",
    "p_pairs",
    "class_rep",
    "QClass",
    "QPoset",
    "q_poset",
    "count_classes_by_equivalence",
    "count_triples",
    "maximize_model",
    "find_model",
]


def p_cover(v: Element, w: Element, Q: ParabolicQuotient) -> bool:
    """``w`` covers ``v`` in Bruhat order and they lie in different cosets."""
    W = Q.system
    return (
        w.length == v.length + 1
        and W.bruhat_leq(v, w)
        and Q.coset_of(v) != Q.coset_of(w)
    )


def _p_up_covers(Q: ParabolicQuotient) -> list[list[Element]]:
    cached = getattr(Q, "_p_up_cover_lists", None)
    if cached is None:
        ups = Q.system._up_covers()
        cached = [[v for v in ups[w.index] if Q.coset_of(v) != Q.coset_of(w)] for w in Q.system.elements]
        Q._p_up_cover_lists = cached
    return cached


def _p_reach(Q: ParabolicQuotient) -> list[int]:
    # bitset of everything reachable upward by P-covers, memoized per quotient
    cached = getattr(Q, "_p_reach_bits", None)
    if cached is None:
        W = Q.system
        ups = _p_up_covers(Q)
        reach = [0] * W.order
        for w in sorted(W.elements, key=lambda e: -e.length):
            bits = 1 << w.index
            for v in ups[w.index]:
                bits |= reach[v.index]
            reach[w.index] = bits
        Q._p_reach_bits = cached = reach
    return cached


def p_leq(u: Element, w: Element, Q: ParabolicQuotient) -> bool:
    """P-Bruhat order: transitive closure of P-covers."""
    return bool((_p_reach(Q)[u.index] >> w.index) & 1)


def p_chains(u: Element, w: Element, Q: ParabolicQuotient) -> Iterator[tuple[Element, ...]]:
    """All saturated chains from ``u`` to ``w`` made of P-covers."""
    ups = _p_up_covers(Q)
    reach = _p_reach(Q)

    def extend(chain: list[Element]) -> Iterator[tuple[Element, ...]]:
        c = chain[-1]
        if c == w:
            yield tuple(chain)
            return
        for v in ups[c.index]:
            if (reach[v.index] >> w.index) & 1:
                chain.append(v)
                yield from extend(chain)
                chain.pop()

    if p_leq(u, w, Q):
        yield from extend([u])


def p_pairs(Q: ParabolicQuotient) -> list[tuple[Element, Element]]:
    """Every pair ``(u, w)`` with ``u <=_P w``."""
    els = Q.system.elements
    return [(u, w) for u in els for w in els if p_leq(u, w, Q)]


def class_rep(u: Element, w: Element, Q: ParabolicQuotient) -> tuple[Element, Element]:
    """Canonical representative ``(u (w_P)^{-1}, w^P)`` of the class of ``(u, w)``."""
    if not p_leq(u, w, Q):
        raise NotComparableError(f"{u!r} is not <=_P {w!r}")
    wP, w_par = Q.factorize(w)
    return u * w_par.inverse(), wP


@dataclass(frozen=True)
class QClass:
    """An equivalence class of P-Bruhat intervals, stored by its rep with ``w`` in ``W^P``."""

    u: Element
    w: Element
    u_max: Element  # u' in W^P_max with u = u' x
    x: Element  # x in W_P

    @property
    def dim(self) -> int:
        return self.w.length - self.u.length

    @property
    def triple(self) -> tuple[Element, Element, Element]:
        return self.u_max, self.w, self.x

    def to_json(self) -> dict:
        return {
            "u-word": list(self.u.word),
            "w-word": list(self.w.word),
            "dim": self.dim,
            "triple": [list(self.u_max.word), list(self.w.word), list(self.x.word)],
        }


@dataclass
class QPoset:
    """
    The closure order on Q(W, W_P).

    ``below[j]`` is the set of class indices ``i`` with ``classes[i] <= classes[j]``.
    """

    quotient: ParabolicQuotient
    classes: list[QClass]
    below: list[frozenset[int]]
    index: dict[tuple[int, int], int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.classes)

    def leq(self, i: int, j: int) -> bool:
        return i in self.below[j]

    def class_of(self, u: Element, w: Element) -> int:
        """Index of the class containing the P-Bruhat pair ``(u, w)``."""
        a, b = class_rep(u, w, self.quotient)
        return self.index[(a.index, b.index)]

    def cover_pairs(self) -> list[tuple[int, int]]:
        out = []
        for j in range(len(self)):
            strict = self.below[j] - {j}
            for i in strict:
                if not any(i in self.below[k] for k in strict if k != i):
                    out.append((i, j))
        return sorted(out)

    def is_graded(self) -> bool:
        """Every cover drops the dimension by exactly one."""
        return all(self.classes[j].dim - self.classes[i].dim == 1 for i, j in self.cover_pairs())

    def to_json(self) -> dict:
        return {
            "classes": [c.to_json() for c in self.classes],
            "order": [[i, j] for j in range(len(self)) for i in sorted(self.below[j]) if i != j],
        }


def _make_class(u: Element, w: Element, Q: ParabolicQuotient) -> QClass:
    u_max = Q.max_reps[Q.coset_of(u)]
    return QClass(u=u, w=w, u_max=u_max, x=u_max.inverse() * u)


def q_poset(Q: ParabolicQuotient) -> QPoset:
    """
    All classes of Q(W, W_P) with the closure order
    ``<u',w'> <= <u,w>`` iff some representative satisfies ``u <= u' <=_P w' <= w``.
    """
    W = Q.system
    classes = [
        _make_class(u, w, Q)
        for w in Q.min_reps
        for u in W.elements
        if W.bruhat_leq(u, w)
    ]
    classes.sort(key=lambda c: (c.dim, Q.coset_of(c.w), c.u.index))
    index = {(c.u.index, c.w.index): i for i, c in enumerate(classes)}

    pair_class = []
    for a, b in p_pairs(Q):
        ra, rb = class_rep(a, b, Q)
        pair_class.append((a, b, index[(ra.index, rb.index)]))

    below = []
    for c in classes:
        members = {
            k for a, b, k in pair_class if W.bruhat_leq(c.u, a) and W.bruhat_leq(b, c.w)
        }
        below.append(frozenset(members))
    return QPoset(quotient=Q, classes=classes, below=below, index=index)


def count_classes_by_equivalence(Q: ParabolicQuotient) -> int:
    """
    Number of classes of P-Bruhat intervals under the equivalence generated by
    ``(u, w) ~ (u s, w s)`` for ``s`` in ``J`` with both products length-additive.
    Independent of :func:`class_rep`: plain union-find over all P-Bruhat pairs.
    """
    W = Q.system
    pairs = p_pairs(Q)
    parent = {(u.index, w.index): (u.index, w.index) for u, w in pairs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, w in pairs:
        for j in Q.J:
            us, ws = W.rmul_s(u, j), W.rmul_s(w, j)
            if us.length == u.length + 1 and ws.length == w.length + 1:
                key = (us.index, ws.index)
                if key not in parent:
                    raise AssertionError("length-additive shift of a P-Bruhat pair is not P-Bruhat")
                ra, rb = find((u.index, w.index)), find(key)
                if ra != rb:
                    parent[ra] = rb
    return len({find(x) for x in parent})


def count_triples(Q: ParabolicQuotient) -> int:
    """Number of triples ``(u', w, x)``: ``u'`` maximal rep, ``w`` minimal rep, ``x`` in W_P, ``u'x <= w``."""
    W = Q.system
    return sum(
        1
        for up in Q.max_reps
        for w in Q.min_reps
        for x in Q.subgroup
        if W.bruhat_leq(up * x, w)
    )


def maximize_model(u: Element, w: Element, Q: ParabolicQuotient) -> tuple[Element, Element]:
    """``(u x, w o x)`` where ``x`` in W_P makes ``u x`` maximal in its coset."""
    W = Q.system
    if not W.bruhat_leq(u, w):
        raise NotComparableError(f"{u!r} is not <= {w!r}")
    x = u.inverse() * Q.max_reps[Q.coset_of(u)]
    u2, w2 = u * x, demazure(w, x, "up")
    if not W.bruhat_leq(u2, w2):
        raise AssertionError("maximize_model produced an empty Richardson pair")
    return u2, w2


def find_model(u: Element, w: Element, Q: ParabolicQuotient) -> tuple[Element, Element]:
    """
    A Richardson model for the projection of ``X_u^w``: iterate
    :func:`maximize_model` until the pair is P-Bruhat.

    The iteration count is bounded by the initial length gap plus one; running
    out raises :class:`ModelSearchError`.
    """
    W = Q.system
    if not W.bruhat_leq(u, w):
        raise NotComparableError(f"{u!r} is not <= {w!r}")
    bound = w.length - u.length + 1
    for _ in range(bound + 1):
        if p_leq(u, w, Q):
            return u, w
        u2, w2 = maximize_model(u, w, Q)
        if (u2, w2) == (u, w):
            break
        u, w = u2, w2
    raise ModelSearchError(f"no P-Bruhat model reached from ({u!r}, {w!r}) within {bound} steps")
