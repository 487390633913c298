"""
Finite crystallographic Coxeter systems with exact root-system arithmetic.

A group element is stored as the permutation it induces on the full root
list (positive roots first, then their negatives).  Every element of a system
is materialised once at construction, so equality is identity of the stored
permutation and all structural data (length, reduced word, descents) is cached.

Generators are numbered from 1, as in ``s1, s2, ...``; words are tuples of
those 1-based indices.

>>> W = make_system("A2")
>>> W.order
6
>>> W.normal_form((1, 2, 1)) == W.normal_form((2, 1, 2))
True
>>> W.bruhat_leq(W.s(1), W.normal_form((2, 1)))
True
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import SystemSpecError

__all__ = [
    "CoxeterSystem",
    "Element",
    "make_system",
    "cartan_matrix",
    "coxeter_matrix_to_cartan",
]

# product a_ij * a_ji of Cartan entries -> Coxeter exponent m_ij
_M_FROM_PRODUCT = {0: 2, 1: 3, 2: 4, 3: 6}

_ROOT_CAP = 20000


def cartan_matrix(type_tag: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """
    Cartan matrix ``A[i][j] = <alpha_i^vee, alpha_j>`` in Bourbaki numbering.

    >>> cartan_matrix("B", 2)
    ((2, -1), (-2, 2))
    """
    t = type_tag.upper()
    n = rank
    if n < 1:
        raise SystemSpecError(f"rank must be positive, got {rank}")
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = 2
    if t == "A":
        for i in range(n - 1):
            A[i][i + 1] = A[i + 1][i] = -1
    elif t in ("B", "C"):
        if n < 2:
            raise SystemSpecError(f"type {t} needs rank >= 2")
        for i in range(n - 1):
            A[i][i + 1] = A[i + 1][i] = -1
        if t == "B":  # alpha_n short
            A[n - 1][n - 2] = -2
        else:  # alpha_n long
            A[n - 2][n - 1] = -2
    elif t == "D":
        if n < 3:
            raise SystemSpecError("type D needs rank >= 3")
        for i in range(n - 2):
            A[i][i + 1] = A[i + 1][i] = -1
        A[n - 3][n - 1] = A[n - 1][n - 3] = -1
    elif t == "G":
        if n != 2:
            raise SystemSpecError("type G exists only in rank 2")
        A[0][1] = -1
        A[1][0] = -3
    elif t == "F":
        if n != 4:
            raise SystemSpecError("type F exists only in rank 4")
        A[0][1] = A[1][0] = -1
        A[1][2] = -1
        A[2][1] = -2
        A[2][3] = A[3][2] = -1
    elif t in ("H", "I"):
        raise SystemSpecError(f"type {t} is not crystallographic")
    else:
        raise SystemSpecError(f"unsupported type tag {type_tag!r}")
    return tuple(tuple(row) for row in A)


def coxeter_matrix_to_cartan(M: Sequence[Sequence[int | None]]) -> tuple[tuple[int, ...], ...]:
    """
    Choose a crystallographic Cartan matrix realising the Coxeter matrix ``M``.

    ``m = 4`` and ``m = 6`` edges make the lower-indexed node the long one.
    ``None`` or ``0`` entries mean an infinite bond.
    """
    n = len(M)
    A = [[0] * n for _ in range(n)]
    for i in range(n):
        if len(M[i]) != n:
            raise SystemSpecError("Coxeter matrix must be square")
        if M[i][i] != 1:
            raise SystemSpecError("Coxeter matrix must have 1 on the diagonal")
        A[i][i] = 2
    for i, j in combinations(range(n), 2):
        m, mt = M[i][j], M[j][i]
        if m != mt:
            raise SystemSpecError(f"Coxeter matrix not symmetric at ({i + 1},{j + 1})")
        if m in (None, 0) or (isinstance(m, float) and m == float("inf")):
            raise SystemSpecError(f"infinite bond between s{i + 1} and s{j + 1}: group is not finite")
        if m == 2:
            continue
        if m == 3:
            A[i][j] = A[j][i] = -1
        elif m == 4:
            A[i][j], A[j][i] = -1, -2
        elif m == 6:
            A[i][j], A[j][i] = -1, -3
        else:
            raise SystemSpecError(
                f"m(s{i + 1},s{j + 1}) = {m} is not crystallographic (allowed: 2, 3, 4, 6)"
            )
    return tuple(tuple(row) for row in A)


def _symmetrizer(A: Sequence[Sequence[int]]) -> list[Fraction]:
    """Squared root lengths ``n_i`` with ``A_ij n_i = A_ji n_j``; one node per component gets 2."""
    n = len(A)
    norms: list[Fraction | None] = [None] * n
    for start in range(n):
        if norms[start] is not None:
            continue
        norms[start] = Fraction(2)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if i == j or A[i][j] == 0:
                    continue
                if A[j][i] == 0:
                    raise SystemSpecError("Cartan matrix has a one-sided zero")
                nj = Fraction(A[i][j]) * norms[i] / A[j][i]
                if norms[j] is None:
                    norms[j] = nj
                    queue.append(j)
                elif norms[j] != nj:
                    raise SystemSpecError("Cartan matrix is not symmetrizable")
    return norms  # type: ignore[return-value]


def _is_positive_definite(G: Sequence[Sequence[Fraction]]) -> bool:
    # Sylvester: all leading principal minors positive, by exact elimination
    n = len(G)
    M = [list(row) for row in G]
    for k in range(n):
        if M[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = M[i][k] / M[k][k]
            for j in range(k, n):
                M[i][j] -= f * M[k][j]
    return True


class Element:
    """
    A group element of a :class:`CoxeterSystem`.

    Instances are canonical: each system creates exactly one object per group
    element, so ``==`` agrees with group equality.
    """

    __slots__ = ("system", "index", "perm", "length", "word")

    def __init__(self, system: "CoxeterSystem", index: int, perm: tuple[int, ...], word: tuple[int, ...]):
        self.system = system
        self.index = index
        self.perm = perm
        self.word = word
        self.length = len(word)

    def __eq__(self, other: object) -> bool:
        return self is other or (
            isinstance(other, Element) and other.system is self.system and other.index == self.index
        )

    def __hash__(self) -> int:
        return hash((id(self.system), self.index))

    def __mul__(self, other: "Element") -> "Element":
        return self.system.multiply(self, other)

    def __repr__(self) -> str:
        if not self.word:
            return "e"
        return "".join(f"s{i}" for i in self.word)

    def inverse(self) -> "Element":
        return self.system.inverse(self)

    def descents(self, side: str = "right") -> frozenset[int]:
        return self.system.descents(self, side)

    def one_line(self) -> tuple[int, ...]:
        return self.system.one_line(self)

    def to_json(self) -> list[int]:
        return list(self.word)


class CoxeterSystem:
    """
    A finite crystallographic Coxeter system realised on its root system.

    Construct with :func:`make_system`.  Roots are integer vectors in the basis
    of simple roots; reflections are paired with their positive roots.
    """

    def __init__(self, cartan: Sequence[Sequence[int]], type_tag: str | None = None, rank_label: int | None = None):
        A = tuple(tuple(int(a) for a in row) for row in cartan)
        n = len(A)
        for i in range(n):
            for j in range(n):
                if i != j and (A[i][j] > 0 or (A[i][j] == 0) != (A[j][i] == 0)):
                    raise SystemSpecError("invalid Cartan matrix entries")
                if i < j and A[i][j] * A[j][i] not in _M_FROM_PRODUCT:
                    raise SystemSpecError(
                        f"Cartan product a_ij*a_ji = {A[i][j] * A[j][i]} gives an infinite or "
                        "non-crystallographic bond"
                    )
        self.cartan = A
        self.rank = n
        self.type_tag = type_tag
        self.rank_label = rank_label if rank_label is not None else n
        self.coxeter_matrix = tuple(
            tuple(1 if i == j else _M_FROM_PRODUCT[A[i][j] * A[j][i]] for j in range(n)) for i in range(n)
        )
        norms = _symmetrizer(A)
        self.root_norms_simple = tuple(norms)
        self._gram = [[Fraction(A[i][j]) * norms[i] / 2 for j in range(n)] for i in range(n)]
        if not _is_positive_definite(self._gram):
            raise SystemSpecError("Coxeter system is not finite (form is not positive definite)")

        self._build_roots()
        self._build_group()
        self._below: list[int] | None = None

    # ------------------------------------------------------------------ roots
    def _simple_reflect(self, i: int, beta: tuple[int, ...]) -> tuple[int, ...]:
        pairing = sum(self.cartan[i][j] * beta[j] for j in range(self.rank))
        out = list(beta)
        out[i] -= pairing
        return tuple(out)

    def _build_roots(self) -> None:
        n = self.rank
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        # parent[beta] = (i, gamma) with beta = s_i(gamma); None for simple roots
        parent: dict[tuple[int, ...], tuple[int, tuple[int, ...]] | None] = {a: None for a in simple}
        queue = deque(simple)
        while queue:
            beta = queue.popleft()
            for i in range(n):
                gamma = self._simple_reflect(i, beta)
                if all(c >= 0 for c in gamma) and gamma not in parent:
                    parent[gamma] = (i, beta)
                    queue.append(gamma)
                    if len(parent) > _ROOT_CAP:
                        raise SystemSpecError("root system too large or infinite")
        pos = sorted(parent, key=lambda b: (sum(b), tuple(-c for c in b)))
        self.positive_roots: tuple[tuple[int, ...], ...] = tuple(pos)
        self.n_positive = len(pos)
        self.roots = tuple(pos) + tuple(tuple(-c for c in b) for b in pos)
        self.root_index = {b: k for k, b in enumerate(self.roots)}
        self._root_parent = parent

    def root_norm(self, beta: Sequence[int]) -> Fraction:
        """Squared length of a root under the invariant form."""
        n = self.rank
        return sum(beta[i] * self._gram[i][j] * beta[j] for i in range(n) for j in range(n))

    def is_positive_root_index(self, k: int) -> bool:
        return k < self.n_positive

    # ------------------------------------------------------------------ group
    def _build_group(self) -> None:
        N2 = len(self.roots)
        self._gen_perms = []
        for i in range(self.rank):
            self._gen_perms.append(tuple(self.root_index[self._simple_reflect(i, b)] for b in self.roots))
        ident = tuple(range(N2))
        self.elements: list[Element] = []
        self._by_perm: dict[tuple[int, ...], Element] = {}
        level = [(ident, ())]
        seen = {ident}
        while level:
            level.sort(key=lambda pw: pw[1])
            nxt = []
            for perm, word in level:
                el = Element(self, len(self.elements), perm, word)
                self.elements.append(el)
                self._by_perm[perm] = el
                for i in range(self.rank):
                    # right multiplication: (w s_i)(beta) = w(s_i(beta))
                    g = self._gen_perms[i]
                    p2 = tuple(perm[g[k]] for k in range(N2))
                    if p2 not in seen:
                        seen.add(p2)
                        nxt.append((p2, word + (i + 1,)))
            level = nxt
        self.identity = self.elements[0]
        self.order = len(self.elements)
        self.longest = max(self.elements, key=lambda e: e.length)
        if self.longest.length != self.n_positive:
            raise AssertionError("length of w0 must equal the number of positive roots")
        self._rmul = [[self._by_perm[tuple(e.perm[g[k]] for k in range(N2))].index for e in self.elements]
                      for g in self._gen_perms]
        self._lmul = [[self._by_perm[tuple(g[e.perm[k]] for k in range(N2))].index for e in self.elements]
                      for g in self._gen_perms]
        self._inverse = [0] * self.order
        for e in self.elements:
            inv = [0] * N2
            for k, v in enumerate(e.perm):
                inv[v] = k
            self._inverse[e.index] = self._by_perm[tuple(inv)].index
        self._build_reflections()

    def _build_reflections(self) -> None:
        cache: dict[tuple[int, ...], Element] = {}

        def refl(beta: tuple[int, ...]) -> Element:
            if beta in cache:
                return cache[beta]
            par = self._root_parent[beta]
            if par is None:
                t = self.s(beta.index(1) + 1)
            else:
                i, gamma = par
                si = self.s(i + 1)
                t = si * refl(gamma) * si
            cache[beta] = t
            return t

        self.reflections: tuple[Element, ...] = tuple(refl(b) for b in self.positive_roots)
        self._root_of_reflection = {t.index: b for t, b in zip(self.reflections, self.positive_roots)}
        if len(self._root_of_reflection) != self.n_positive:
            raise AssertionError("reflection <-> positive root pairing is not a bijection")

    # -------------------------------------------------------------- accessors
    def s(self, i: int) -> Element:
        """The simple generator ``s_i`` (1-based)."""
        if not 1 <= i <= self.rank:
            raise IndexError(f"generator index {i} out of range 1..{self.rank}")
        return self.elements[self._rmul[i - 1][0]]

    def multiply(self, u: Element, v: Element) -> Element:
        N2 = len(self.roots)
        up, vp = u.perm, v.perm
        return self._by_perm[tuple(up[vp[k]] for k in range(N2))]

    def inverse(self, w: Element) -> Element:
        return self.elements[self._inverse[w.index]]

    def rmul_s(self, w: Element, i: int) -> Element:
        return self.elements[self._rmul[i - 1][w.index]]

    def lmul_s(self, w: Element, i: int) -> Element:
        return self.elements[self._lmul[i - 1][w.index]]

    def normal_form(self, word: Iterable[int]) -> Element:
        """The element represented by a word of 1-based generator indices."""
        w = self.identity
        for i in word:
            if not 1 <= int(i) <= self.rank:
                raise IndexError(f"generator index {i} out of range 1..{self.rank}")
            w = self.rmul_s(w, int(i))
        return w

    def element_from_perm(self, perm: tuple[int, ...]) -> Element:
        return self._by_perm[perm]

    def act(self, w: Element, beta: Sequence[int]) -> tuple[int, ...]:
        """Image of a root under ``w``."""
        return self.roots[w.perm[self.root_index[tuple(beta)]]]

    def root_of(self, t: Element) -> tuple[int, ...]:
        """The positive root ``beta_t`` of a reflection ``t``."""
        return self._root_of_reflection[t.index]

    def is_reflection(self, t: Element) -> bool:
        return t.index in self._root_of_reflection

    def reflections_with_roots(self) -> list[tuple[Element, tuple[int, ...]]]:
        return list(zip(self.reflections, self.positive_roots))

    # -------------------------------------------------------- combinatorics
    def descents(self, w: Element, side: str = "right") -> frozenset[int]:
        """Right descents ``{i : w s_i < w}`` or left descents ``{i : s_i w < w}``."""
        if side == "right":
            return frozenset(i + 1 for i in range(self.rank) if w.perm[i] >= self.n_positive)
        if side == "left":
            winv = self.inverse(w)
            return frozenset(i + 1 for i in range(self.rank) if winv.perm[i] >= self.n_positive)
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")

    def inversion_count(self, w: Element) -> int:
        """Number of positive roots sent to negative roots."""
        return sum(1 for k in range(self.n_positive) if w.perm[k] >= self.n_positive)

    def _bruhat_table(self) -> list[int]:
        # Property Z descent recursion: if ws < w then [e,w] = [e,ws] u [e,ws]s
        if self._below is None:
            below = [0] * self.order
            below[0] = 1
            for w in self.elements[1:]:
                i = min(self.descents(w, "right"))
                ws = self._rmul[i - 1][w.index]
                b = below[ws]
                img = b
                row = self._rmul[i - 1]
                x = b
                while x:
                    low = x & -x
                    img |= 1 << row[low.bit_length() - 1]
                    x ^= low
                below[w.index] = img
            self._below = below
        return self._below

    def bruhat_leq(self, u: Element, w: Element) -> bool:
        """Bruhat order ``u <= w``."""
        return bool((self._bruhat_table()[w.index] >> u.index) & 1)

    def interval(self, u: Element, w: Element) -> list[Element]:
        """Elements of the Bruhat interval ``[u, w]``, sorted by index."""
        table = self._bruhat_table()
        mask = table[w.index]
        return [x for x in self.elements if (mask >> x.index) & 1 and (table[x.index] >> u.index) & 1]

    def covers(self, w: Element, direction: str = "up") -> set[Element]:
        """Bruhat covers of ``w``; all are of the form ``w t`` for a reflection ``t``."""
        if direction not in ("up", "down"):
            raise ValueError(f"direction must be 'up' or 'down', not {direction!r}")
        step = 1 if direction == "up" else -1
        return {v for v in (w * t for t in self.reflections) if v.length == w.length + step}

    def maximal_chains(self, u: Element, w: Element) -> Iterator[tuple[Element, ...]]:
        """All saturated chains ``u = c0 < c1 < ... < cl = w`` (empty if ``u`` is not below ``w``)."""
        if not self.bruhat_leq(u, w):
            return
        table = self._bruhat_table()
        wmask = table[w.index]
        ups = self._up_covers()

        def extend(chain: list[Element]) -> Iterator[tuple[Element, ...]]:
            c = chain[-1]
            if c == w:
                yield tuple(chain)
                return
            for v in ups[c.index]:
                if (wmask >> v.index) & 1:
                    chain.append(v)
                    yield from extend(chain)
                    chain.pop()

        yield from extend([u])

    def _up_covers(self) -> list[list[Element]]:
        cached = getattr(self, "_up_cover_lists", None)
        if cached is None:
            cached = [sorted(self.covers(w, "up"), key=lambda e: e.index) for w in self.elements]
            self._up_cover_lists = cached
        return cached

    def parabolic_subgroup(self, J: Iterable[int]) -> list[Element]:
        """Elements of ``W_J``: those with a reduced word in the letters ``J``."""
        Js = frozenset(J)
        return [w for w in self.elements if set(w.word) <= Js]

    def one_line(self, w: Element) -> tuple[int, ...]:
        """
        One-line notation for type A: ``s_i`` swaps positions ``i, i+1`` under
        right multiplication.

        >>> W = make_system("A2")
        >>> W.normal_form((1, 2)).one_line()
        (2, 3, 1)
        """
        if self.type_tag != "A":
            raise ValueError("one-line notation is only defined for type A")
        line = list(range(1, self.rank + 2))
        for i in w.word:
            line[i - 1], line[i] = line[i], line[i - 1]
        return tuple(line)

    def from_one_line(self, line: Sequence[int]) -> Element:
        """Inverse of :meth:`one_line` (bubble-sort to a word)."""
        if self.type_tag != "A":
            raise ValueError("one-line notation is only defined for type A")
        cur = list(line)
        if sorted(cur) != list(range(1, self.rank + 2)):
            raise ValueError(f"{line!r} is not a permutation of 1..{self.rank + 1}")
        word: list[int] = []
        # sort by adjacent swaps; the swaps read backwards give a word for w
        changed = True
        while changed:
            changed = False
            for i in range(len(cur) - 1):
                if cur[i] > cur[i + 1]:
                    cur[i], cur[i + 1] = cur[i + 1], cur[i]
                    word.append(i + 1)
                    changed = True
        return self.normal_form(reversed(word))

    # ---------------------------------------------------------- serialization
    def to_json(self) -> dict:
        if self.type_tag is not None:
            return {"type": self.type_tag, "rank": self.rank_label}
        return {"coxeter_matrix": [list(r) for r in self.coxeter_matrix]}

    def __repr__(self) -> str:
        if self.type_tag is not None:
            return f"CoxeterSystem({self.type_tag}{self.rank_label})"
        return f"CoxeterSystem(rank={self.rank})"


_SYSTEM_CACHE: dict[object, CoxeterSystem] = {}


def _parse_tag(spec: str) -> tuple[str, int]:
    s = spec.strip().upper()
    if len(s) < 2 or not s[1:].isdigit():
        raise SystemSpecError(f"cannot parse type spec {spec!r}; expected e.g. 'A3'")
    return s[0], int(s[1:])


def make_system(spec, rank: int | None = None) -> CoxeterSystem:
    """
    Build (or fetch from cache) a finite crystallographic Coxeter system.

    ``spec`` may be a tag such as ``"A3"``, a type letter with ``rank``, a
    ``{"type":..., "rank":...}`` mapping, or an explicit Coxeter matrix.

    >>> make_system("B", 2).order
    8
    >>> make_system([[1, 5], [5, 1]])
    Traceback (most recent call last):
    ...
    rlab.errors.SystemSpecError: m(s1,s2) = 5 is not crystallographic (allowed: 2, 3, 4, 6)
    """
    if isinstance(spec, dict):
        if "coxeter_matrix" in spec:
            return make_system(spec["coxeter_matrix"])
        return make_system(spec["type"], int(spec["rank"]))
    if isinstance(spec, str):
        if rank is None:
            tag, r = _parse_tag(spec)
        else:
            tag, r = spec.strip().upper(), int(rank)
        key: object = (tag, r)
        if key not in _SYSTEM_CACHE:
            _SYSTEM_CACHE[key] = CoxeterSystem(cartan_matrix(tag, r), type_tag=tag, rank_label=r)
        return _SYSTEM_CACHE[key]
    M = tuple(tuple(row) for row in spec)
    key = ("matrix", M)
    if key not in _SYSTEM_CACHE:
        _SYSTEM_CACHE[key] = CoxeterSystem(coxeter_matrix_to_cartan(M))
    return _SYSTEM_CACHE[key]
