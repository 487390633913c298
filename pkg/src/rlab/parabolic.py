"""
Parabolic quotients ``W/W_P``: factorizations, coset representatives,
Demazure products and the unique-lift operator.

Coset ids are positions of the minimal representatives in a fixed linear
extension of Bruhat order on ``W^P``.  For a type A Grassmannian quotient the
extension is "sum, then lexicographic" on the k-subsets ``pi_k(w)``; otherwise
it is "length, then reduced word".  Ids double as Pluecker variable ranks.
"""

from __future__ import annotations

from typing import Iterable

from .coxeter import CoxeterSystem, Element

__all__ = ["ParabolicQuotient", "demazure", "unique_lift", "factorize", "coset_reps", "left_weak_leq"]


class ParabolicQuotient:
    """The quotient of ``system`` by the parabolic subgroup generated by ``J``."""

    def __init__(self, system: CoxeterSystem, J: Iterable[int]):
        Js = frozenset(int(j) for j in J)
        bad = [j for j in Js if not 1 <= j <= system.rank]
        if bad:
            raise ValueError(f"parabolic generators {sorted(bad)} out of range 1..{system.rank}")
        self.system = system
        self.J = Js
        self.subgroup = system.parabolic_subgroup(Js)
        self.w0P = max(self.subgroup, key=lambda e: e.length)

        n = system.order
        self._min_of = [0] * n
        for w in system.elements:
            m = w
            while True:
                d = system.descents(m, "right") & Js
                if not d:
                    break
                m = system.rmul_s(m, min(d))
            self._min_of[w.index] = m.index

        mins = sorted({system.elements[i] for i in self._min_of}, key=lambda e: e.index)
        self.grassmannian_k: int | None = None
        if system.type_tag == "A" and len(Js) == system.rank - 1:
            (k,) = set(range(1, system.rank + 1)) - Js
            self.grassmannian_k = k
            mins.sort(key=lambda m: (sum(self._subset(m)), self._subset(m)))
        else:
            mins.sort(key=lambda m: (m.length, m.word))
        self.min_reps: tuple[Element, ...] = tuple(mins)
        self.max_reps: tuple[Element, ...] = tuple(m * self.w0P for m in mins)
        cid = {m.index: i for i, m in enumerate(mins)}
        self._coset_of = [cid[self._min_of[w.index]] for w in system.elements]
        self.cosets: tuple[tuple[Element, ...], ...] = tuple(
            tuple(w for w in system.elements if self._coset_of[w.index] == i) for i in range(len(mins))
        )
        if len(self.subgroup) * len(mins) != system.order:
            raise AssertionError("|W| != |W_P| * |W/W_P|")

    def _subset(self, w: Element) -> tuple[int, ...]:
        return tuple(sorted(w.one_line()[: self.grassmannian_k]))

    @property
    def n_cosets(self) -> int:
        return len(self.min_reps)

    def coset_of(self, w: Element) -> int:
        return self._coset_of[w.index]

    def min_rep(self, w: Element) -> Element:
        """``w^P``, the minimal representative of ``w W_P``."""
        return self.system.elements[self._min_of[w.index]]

    def is_min_rep(self, w: Element) -> bool:
        return self._min_of[w.index] == w.index

    def is_max_rep(self, w: Element) -> bool:
        return self.max_reps[self.coset_of(w)] == w

    def in_subgroup(self, w: Element) -> bool:
        return self._min_of[w.index] == 0

    def factorize(self, w: Element) -> tuple[Element, Element]:
        """Parabolic factorization ``w = w^P * w_P``."""
        wp = self.min_rep(w)
        return wp, wp.inverse() * w

    def coset_reps(self, cid: int) -> tuple[Element, Element]:
        return self.min_reps[cid], self.max_reps[cid]

    def subset(self, cid: int) -> tuple[int, ...]:
        """The k-subset labelling a coset of a type A Grassmannian quotient."""
        if self.grassmannian_k is None:
            raise ValueError("coset subsets exist only for type A Grassmannian quotients")
        return self._subset(self.min_reps[cid])

    def label(self, cid: int) -> str:
        if self.grassmannian_k is not None:
            return "".join(str(i) for i in self.subset(cid))
        return repr(self.min_reps[cid])

    def cid_from_label(self, label: str) -> int:
        for cid in range(self.n_cosets):
            if self.label(cid) == label:
                return cid
        raise KeyError(label)

    def coset_leq(self, a: int, b: int) -> bool:
        """Bruhat order on ``W/W_P`` via minimal representatives."""
        return self.system.bruhat_leq(self.min_reps[a], self.min_reps[b])

    def to_json(self) -> dict:
        return {
            "system": self.system.to_json(),
            "J": sorted(self.J),
            "cosets": [
                {"id": i, "label": self.label(i), "min-word": list(mn.word), "max-word": list(mx.word)}
                for i, (mn, mx) in enumerate(zip(self.min_reps, self.max_reps))
            ],
        }

    def __repr__(self) -> str:
        return f"ParabolicQuotient({self.system!r}, J={sorted(self.J)})"


def factorize(w: Element, Q: ParabolicQuotient) -> tuple[Element, Element]:
    return Q.factorize(w)


def coset_reps(cid: int, Q: ParabolicQuotient) -> tuple[Element, Element]:
    return Q.coset_reps(cid)


def demazure(w: Element, v: Element, direction: str = "up") -> Element:
    """
    Demazure product folded over the stored reduced word of ``v``.

    ``up``: ``w o s = ws`` if ``ws > w`` else ``w``.  ``down``: ``ws`` if
    ``ws < w`` else ``w``.
    """
    if direction not in ("up", "down"):
        raise ValueError(f"direction must be 'up' or 'down', not {direction!r}")
    return demazure_word(w, v.word, direction)


def demazure_word(w: Element, word: Iterable[int], direction: str = "up") -> Element:
    W = w.system
    for i in word:
        ws = W.rmul_s(w, i)
        if (ws.length > w.length) == (direction == "up"):
            w = ws
    return w


def unique_lift(x: Element, cid: int, Q: ParabolicQuotient) -> Element | None:
    """
    Minimum of ``{z in coset cid : z >= x}``, or ``None`` when that set is empty.

    Raises ``AssertionError`` if the set is nonempty without a unique minimum.
    """
    W = Q.system
    above = [z for z in Q.cosets[cid] if W.bruhat_leq(x, z)]
    if not above:
        return None
    z = min(above, key=lambda e: e.length)
    if not all(W.bruhat_leq(z, y) for y in above):
        raise AssertionError(f"no unique minimum above {x!r} in coset {cid}")
    return z


def left_weak_leq(u: Element, v: Element) -> bool:
    """Left weak order: ``u <= v`` iff ``v = a u`` with ``l(a) + l(u) = l(v)``."""
    a = v * u.inverse()
    return a.length + u.length == v.length
