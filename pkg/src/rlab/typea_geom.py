"""
Type A flag and Grassmannian geometry over exact fields and F_q.

Pluecker coordinate ``p_I`` of a flag given by the rows of an ``n x n``
matrix ``M`` is the minor on the first ``|I|`` rows and columns ``I``.  With
``s_i`` swapping positions ``i, i+1`` under right multiplication, the flag of
the permutation ``w`` has nonzero coordinates exactly at ``pi_k(w) = {w(1..k)}``.

``X^w`` (dimension ``l(w)``) is cut out by ``p_I`` with ``I`` not Gale-below
``pi_k(w)``; ``X_u`` by ``p_I`` with ``I`` not Gale-above ``pi_k(u)``.  The
point oracle decides the same conditions from ranks of column blocks only.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import gcd, prod
from typing import Iterable, Sequence

from .coxeter import CoxeterSystem, Element, make_system
from .errors import NotComparableError
from .fq import FiniteField, rank as fq_rank
from .parabolic import ParabolicQuotient
from .pbruhat import class_rep, find_model, p_cover, p_leq, p_pairs, q_poset
from .polyalg import (
    DEFAULT_PRIME,
    GF,
    QQ,
    Field,
    Ideal,
    MonomialOrder,
    PolyRing,
    Polynomial,
    bruhat_revlex,
    buchberger,
    default_degree_bound,
    eliminate,
    hilbert_function,
    initial_ideal,
    revlex_slice_cone_check,
    saturate_by_var,
    slice_ideal,
    sr_ideal,
)
from .simpcomplex import SimplicialComplex, projected_complex, sr_hilbert

__all__ = [
    "FlagRing",
    "grassmannian_quotient",
    "gale_leq",
    "q_factorial",
    "gaussian_binomial",
    "flag_ideal",
    "grassmannian_ideal",
    "richardson_ideal",
    "projected_richardson_ideal",
    "PointOracle",
    "flag_ideal_random_check",
    "flag_ideal_point_count",
    "richardson_point_check",
    "groebner_degeneration_check",
    "hilbert_comparison",
    "slice_cone_recursion_check",
    "hyperplane_section_check",
    "stratification_check",
    "model_image_check",
]

SCHEME_NOTE = (
    "Richardson ideals are defined by coordinate vanishing plus the flag ideal; "
    "set-theoretic agreement is checked over F_q, scheme-theoretic agreement is "
    "corroborated by Hilbert functions only."
)
COVER_NOTE = "hyperplane sections use P-covers for the Grassmannian parabolic"


def _subset_key(I: Sequence[int]) -> tuple:
    return (sum(I), tuple(I))


def gale_leq(I: Sequence[int], J: Sequence[int]) -> bool:
    """Componentwise order on sorted subsets of equal size."""
    return len(I) == len(J) and all(a <= b for a, b in zip(sorted(I), sorted(J)))


def q_factorial(n: int, q: int) -> int:
    """``[n]_q! = prod_{i<=n} (1 + q + ... + q^{i-1})``."""
    return prod(sum(q**j for j in range(i)) for i in range(1, n + 1))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    return q_factorial(n, q) // (q_factorial(k, q) * q_factorial(n - k, q))


def grassmannian_quotient(n: int, k: int) -> ParabolicQuotient:
    """``S_n / W_J`` with ``J`` every generator except ``s_k``."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    return ParabolicQuotient(make_system("A", n - 1), set(range(1, n)) - {k})


class FlagRing:
    """
    Polynomial ring on Pluecker variables ``p_I`` for nonempty proper subsets
    of ``{1..n}``, grouped by step ``|I|`` and ordered by (sum, lex) in a step.

    >>> FlagRing(3).ring.names
    ('p1', 'p2', 'p3', 'p12', 'p13', 'p23')
    """

    def __init__(self, n: int, field: Field = QQ):
        if not 2 <= n <= 9:
            raise ValueError(f"n must be between 2 and 9, got {n}")
        self.n = n
        self.field = field
        self.subsets: tuple[tuple[int, ...], ...] = tuple(
            I for k in range(1, n) for I in sorted(combinations(range(1, n + 1), k), key=_subset_key)
        )
        self.ring = PolyRing([self.name(I) for I in self.subsets], field)
        self._index = {I: i for i, I in enumerate(self.subsets)}

    @staticmethod
    def name(I: Iterable[int]) -> str:
        return "p" + "".join(str(i) for i in sorted(I))

    def index(self, I: Sequence[int]) -> int:
        return self._index[tuple(sorted(I))]

    def step_subsets(self, k: int) -> list[tuple[int, ...]]:
        return [I for I in self.subsets if len(I) == k]

    def step_names(self, k: int) -> list[str]:
        return [self.name(I) for I in self.step_subsets(k)]

    def with_field(self, field: Field) -> "FlagRing":
        return FlagRing(self.n, field)


# -- ideals -------------------------------------------------------------------


def _minor_polys(n: int) -> dict[tuple[int, ...], Polynomial]:
    """Minors of a generic matrix on the first ``|I|`` rows and columns ``I``."""
    names = [f"m{i}_{j}" for i in range(1, n) for j in range(1, n + 1)]
    R = PolyRing(names, QQ)
    out = {}
    for k in range(1, n):
        for I in combinations(range(1, n + 1), k):
            terms: dict = {}
            for perm in permutations(range(k)):
                sign = 1
                for a in range(k):
                    for b in range(a + 1, k):
                        if perm[a] > perm[b]:
                            sign = -sign
                e = [0] * len(names)
                for r, c in enumerate(perm):
                    e[r * n + I[c] - 1] += 1
                terms[tuple(e)] = terms.get(tuple(e), 0) + sign
            out[I] = Polynomial(R, terms)
    return out


def _left_kernel(rows: list[dict]) -> list[dict[int, Fraction]]:
    """Basis of ``{c : sum c_i rows[i] = 0}`` over QQ, in reduced echelon form."""
    pivots: dict = {}
    kernel = []
    for i, row in enumerate(rows):
        r = {k: Fraction(v) for k, v in row.items() if v}
        tag = {i: Fraction(1)}
        while r:
            col = min(r)
            if col not in pivots:
                c = r[col]
                pivots[col] = ({k: v / c for k, v in r.items()}, {k: v / c for k, v in tag.items()})
                break
            pr, pt = pivots[col]
            c = r[col]
            for k, v in pr.items():
                nv = r.get(k, 0) - c * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
            for k, v in pt.items():
                nv = tag.get(k, 0) - c * v
                if nv:
                    tag[k] = nv
                else:
                    tag.pop(k, None)
        else:
            kernel.append(tag)
    # reduced echelon form on the tag coordinates, pivots at the largest index
    basis: list[dict] = []
    for vec in kernel:
        v = dict(vec)
        for b in basis:
            lead = max(b)
            if lead in v:
                c = v[lead]
                for k, x in b.items():
                    nv = v.get(k, 0) - c * x
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        if v:
            lead = max(v)
            c = v[lead]
            v = {k: x / c for k, x in v.items()}
            for j, b in enumerate(basis):
                if lead in b:
                    c2 = b[lead]
                    nb = dict(b)
                    for k, x in v.items():
                        nv = nb.get(k, 0) - c2 * x
                        if nv:
                            nb[k] = nv
                        else:
                            nb.pop(k, None)
                    basis[j] = nb
            basis.append(v)
    return sorted(basis, key=max)


def _integral(coeffs: dict[int, Fraction]) -> dict[int, int]:
    den = 1
    for c in coeffs.values():
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {k: int(c * den) for k, c in coeffs.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    return {k: v // g for k, v in ints.items()}


@lru_cache(maxsize=None)
def _flag_ideal_qq(n: int) -> tuple[Polynomial, ...]:
    FR = FlagRing(n, QQ)
    minors = _minor_polys(n)
    gens = []
    for a in range(1, n):
        for b in range(a, n):
            pairs = [
                (I, J)
                for I in FR.step_subsets(a)
                for J in FR.step_subsets(b)
                if a < b or FR.index(I) <= FR.index(J)
            ]
            if not pairs:
                continue
            cols: dict = {}
            rows = []
            for I, J in pairs:
                row: dict = {}
                for e, c in (minors[I] * minors[J]).terms.items():
                    col = cols.setdefault(e, len(cols))
                    row[col] = c
                rows.append(row)
            for vec in _left_kernel(rows):
                terms = {}
                for i, c in _integral(vec).items():
                    I, J = pairs[i]
                    e = [0] * FR.ring.nvars
                    e[FR.index(I)] += 1
                    e[FR.index(J)] += 1
                    terms[tuple(e)] = c
                gens.append(Polynomial(FR.ring, terms))
    return tuple(gens)


def flag_ideal(n: int, field: Field = QQ) -> Ideal:
    """
    Ideal of the complete flag variety in the Pluecker coordinates of all steps:
    every linear relation among products of two minors.

    >>> flag_ideal(3).gens
    (p1*p23 - p2*p13 + p3*p12,)
    """
    if not 2 <= n <= 5:
        raise ValueError(f"flag ideals are supported for 2 <= n <= 5, got {n}")
    FR = FlagRing(n, field)
    return Ideal(FR.ring, [Polynomial(FR.ring, g.terms) for g in _flag_ideal_qq(n)])


def grassmannian_ideal(n: int, k: int, field: Field = QQ) -> Ideal:
    """Pluecker ideal of ``Gr(k, n)`` in the step-``k`` ring (ordered like the quotient's coset ids)."""
    R, _ = bruhat_revlex(grassmannian_quotient(n, k))
    R = R.with_field(field)
    FR = FlagRing(n, field)
    gens = [g for g in flag_ideal(n, field).gens if all(len(FR.subsets[i]) == k for i in g.variables())]
    return Ideal(R, [g.to_ring(R) for g in gens])


def _perm(x: Element | Sequence[int]) -> tuple[int, ...]:
    return x.one_line() if isinstance(x, Element) else tuple(x)


def vanishing_subsets(u, w, n: int) -> list[tuple[int, ...]]:
    """Subsets ``I`` with ``pi_k(u) <= I <= pi_k(w)`` failing at their step."""
    lu, lw = _perm(u), _perm(w)
    out = []
    for k in range(1, n):
        a, b = sorted(lu[:k]), sorted(lw[:k])
        for I in FlagRing(n).step_subsets(k):
            if not (gale_leq(a, I) and gale_leq(I, b)):
                out.append(I)
    return out


def _check_pair(u: Element, w: Element) -> None:
    if not u.system.bruhat_leq(u, w):
        raise NotComparableError(f"{u!r} is not <= {w!r}")


def richardson_ideal(u: Element, w: Element, n: int | None = None, field: Field = QQ) -> Ideal:
    """
    Flag ideal plus the Pluecker variables vanishing on ``X_u^w``.

    >>> W = make_system("A2")
    >>> richardson_ideal(W.identity, W.s(1)).gens[1:]
    (p3, p13, p23)
    """
    _check_pair(u, w)
    n = n or u.system.rank + 1
    FR = FlagRing(n, field)
    zeros = [FR.ring.var(FR.index(I)) for I in vanishing_subsets(u, w, n)]
    return Ideal(FR.ring, list(flag_ideal(n, field).gens) + zeros)


@lru_cache(maxsize=None)
def _projected(u_idx: int, w_idx: int, k: int, n: int, p: int | None, refinement: str, bound: int | None):
    W = make_system("A", n - 1)
    u, w = W.elements[u_idx], W.elements[w_idx]
    field = Field(p)
    FR = FlagRing(n, field)
    zero_subsets = set(vanishing_subsets(u, w, n))
    zero_idx = [FR.index(I) for I in zero_subsets]
    keep = [FR.name(I) for I in FR.subsets if I not in zero_subsets]
    sub = FR.ring.subring(keep)
    gens = [g.set_zero(zero_idx) for g in flag_ideal(n, field).gens]
    reduced = Ideal(sub, [g.to_ring(sub) for g in gens if g])
    # The vanishing ideal is not saturated: e.g. p2*p13 may lie in it while p13
    # never vanishes on a flag.  Saturating by the coordinates that are nonzero
    # at the fixed point w keeps the ideal between I and the prime of X_u^w.
    lw = w.one_line()
    for j in range(1, n):
        reduced = saturate_by_var(reduced, FR.name(lw[:j]), bound)

    Q = grassmannian_quotient(n, k)
    step_ring, order = bruhat_revlex(Q, refinement)
    step_ring = step_ring.with_field(field)
    step_kept = [nm for nm in step_ring.names if nm in set(keep)]
    drop = [FR.name(I) for I in FR.subsets if len(I) != k and I not in zero_subsets]
    kept_ring = sub.subring(step_kept)
    ranking = [kept_ring.index(step_ring.names[v]) for v in order.ranking if step_ring.names[v] in set(step_kept)]
    back = MonomialOrder.grevlex(kept_ring.nvars, ranking, name=order.name)
    elim = eliminate(reduced, drop, back, bound)
    out = [g.to_ring(step_ring) for g in elim.gens]
    out += [step_ring.var(nm) for nm in step_ring.names if nm not in set(step_kept)]
    return Ideal(step_ring, out)


def projected_richardson_ideal(
    u: Element,
    w: Element,
    k: int,
    n: int | None = None,
    field: Field | None = None,
    refinement: str = "sum-lex",
    degree_bound: int | None = None,
) -> Ideal:
    """
    Ideal of the image of ``X_u^w`` in ``Gr(k, n)``, in the step-``k`` ring.

    Vanishing coordinates are substituted first and the result is saturated by
    the coordinates ``p_{pi_j(w)}``; the remaining non-step-``k``
    variables are eliminated with a block order (front: other steps by step
    then rank; back: Bruhat-refining graded revlex).  ``n <= 4`` keeps this
    fast; ``degree_bound`` (default 6, or ``RLAB_DEGREE_BOUND``) turns runaway
    computations into :class:`~rlab.errors.DegreeBoundExceeded`.
    """
    _check_pair(u, w)
    n = n or u.system.rank + 1
    field = field or GF(DEFAULT_PRIME)
    bound = default_degree_bound() if degree_bound is None else degree_bound
    return _projected(u.index, w.index, k, n, field.p, refinement, bound)


# -- F_q point oracle --------------------------------------------------------


def _det(F: FiniteField, M: list[list[int]]) -> int:
    M = [list(r) for r in M]
    n = len(M)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = F.neg(det)
        det = F.mul(det, M[c][c])
        inv = F.inv(M[c][c])
        for i in range(c + 1, n):
            if M[i][c]:
                f = F.mul(M[i][c], inv)
                M[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[i], M[c])]
    return det


def _normalize(F: FiniteField, vec: Sequence[int]) -> tuple[int, ...]:
    lead = next(x for x in vec if x)
    inv = F.inv(lead)
    return tuple(F.mul(inv, x) for x in vec)


def _projective_points(F: FiniteField, dim: int) -> list[tuple[int, ...]]:
    """Normalized representatives of ``P^{dim-1}(F_q)``."""
    out = []
    for lead in range(dim):
        for tail in product(F.elements, repeat=dim - lead - 1):
            out.append((0,) * lead + (1,) + tail)
    return out


class PointOracle:
    """
    Complete flags in ``F_q^n`` and rank-condition predicates.

    Each flag is a matrix whose ``k``-th row spans ``F_k / F_{k-1}``: it is zero
    on the pivot columns of earlier rows and its first nonzero entry is 1.
    """

    def __init__(self, n: int, q: int):
        self.n = n
        self.q = q
        self.F = FiniteField(q)
        self.W: CoxeterSystem = make_system("A", n - 1)
        self.flag_ring = FlagRing(n)
        self.flags: list[tuple[tuple[int, ...], ...]] = []
        self._enumerate([], [])
        self._pos: dict = {}

    def _enumerate(self, rows: list, pivots: list) -> None:
        n, F = self.n, self.F
        if len(rows) == n:
            self.flags.append(tuple(rows))
            return
        free = [c for c in range(n) if c not in pivots]
        for vals in product(F.elements, repeat=len(free)):
            if not any(vals):
                continue
            lead = next(i for i, x in enumerate(vals) if x)
            if vals[lead] != 1:
                continue
            row = [0] * n
            for c, x in zip(free, vals):
                row[c] = x
            self._enumerate(rows + [tuple(row)], pivots + [free[lead]])

    def pluecker(self, M, k: int) -> tuple[int, ...]:
        """Step-``k`` coordinates in (sum, lex) subset order."""
        return tuple(
            _det(self.F, [[M[r][c - 1] for c in I] for r in range(k)])
            for I in self.flag_ring.step_subsets(k)
        )

    def flag_point(self, M) -> tuple[int, ...]:
        """All Pluecker coordinates in :class:`FlagRing` variable order."""
        return tuple(x for k in range(1, self.n) for x in self.pluecker(M, k))

    def _perm_from_counts(self, counts: list[list[int]], cols_for) -> tuple[int, ...]:
        line: list[int] = []
        prev: set[int] = set()
        for k in range(1, self.n + 1):
            c = counts[k]
            subset = {cols_for(j) for j in range(1, self.n + 1) if c[j] - c[j - 1] == 1}
            (new,) = subset - prev
            line.append(new)
            prev = subset
        return tuple(line)

    def positions(self, M) -> tuple[Element, Element]:
        """``(pos_minus, pos_plus)``: relative positions to the opposite and standard flags."""
        key = M
        if key in self._pos:
            return self._pos[key]
        n, F = self.n, self.F
        plus = [[0] * (n + 1)]
        minus = [[0] * (n + 1)]
        for k in range(1, n + 1):
            rows = M[:k]
            # #{i<=k : sigma(i) <= j} = dim(F_k cap E_j) = k - rank(columns j+1..n)
            plus.append([k - fq_rank(F, [r[j:] for r in rows]) if j < n else k for j in range(n + 1)])
            # #{i<=k : sigma(i) > n-j} = k - rank(columns 1..n-j)
            minus.append([k - fq_rank(F, [r[: n - j] for r in rows]) if j < n else k for j in range(n + 1)])
        p_line = self._perm_from_counts(plus, lambda j: j)
        m_line = self._perm_from_counts(minus, lambda j: n - j + 1)
        out = (self.W.from_one_line(m_line), self.W.from_one_line(p_line))
        self._pos[key] = out
        return out

    def in_richardson(self, M, u: Element, w: Element, open_: bool = False) -> bool:
        lo, hi = self.positions(M)
        if open_:
            return lo == u and hi == w
        return self.W.bruhat_leq(u, lo) and self.W.bruhat_leq(hi, w)

    def grassmannian_points(self, k: int) -> list[tuple[int, ...]]:
        """Normalized Pluecker vectors of all ``k``-planes, enumerated by reduced row echelon form."""
        n, F = self.n, self.F
        pts = []
        for piv in combinations(range(n), k):
            free = [(r, c) for r in range(k) for c in range(piv[r] + 1, n) if c not in piv]
            for vals in product(F.elements, repeat=len(free)):
                M = [[0] * n for _ in range(k)]
                for r, c in enumerate(piv):
                    M[r][c] = 1
                for (r, c), x in zip(free, vals):
                    M[r][c] = x
                pts.append(_normalize(F, self.pluecker(M, k)))
        return pts

    def projected(self, M, k: int) -> tuple[int, ...]:
        return _normalize(self.F, self.pluecker(M, k))


@lru_cache(maxsize=None)
def _oracle(n: int, q: int) -> PointOracle:
    return PointOracle(n, q)


def _vanishes(F: FiniteField, I: Ideal, point: Sequence[int]) -> bool:
    return all(F.evaluate(g.terms, point) == 0 for g in I.gens)


# -- certification of the ideals -----------------------------------------------


def flag_ideal_random_check(n: int, points: int = 200, seed: int = 0) -> dict:
    """Evaluate the flag ideal at Pluecker vectors of random integer matrices."""
    rng = random.Random(seed)
    I = flag_ideal(n)
    FR = FlagRing(n)
    failures = 0
    for _ in range(points):
        M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n - 1)]
        pt = []
        for I_ in FR.subsets:
            sub = [[Fraction(M[r][c - 1]) for c in I_] for r in range(len(I_))]
            pt.append(_qq_det(sub))
        if any(g.evaluate(pt) != 0 for g in I.gens):
            failures += 1
    return {"n": n, "points": points, "seed": seed, "failures": failures, "pass": failures == 0}


def _qq_det(M: list[list[Fraction]]) -> Fraction:
    M = [list(r) for r in M]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for i in range(c + 1, n):
            f = M[i][c] / M[c][c]
            M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return det


def flag_ideal_point_count(n: int, q: int) -> dict:
    """
    Count zeros of the flag ideal in the product of projective spaces over F_q,
    assigning one step at a time and pruning by relations among assigned steps.
    """
    F = FiniteField(q)
    FR = FlagRing(n)
    I = flag_ideal(n, GF(F.p))
    steps = list(range(1, n))
    offsets = {}
    pos = 0
    for k in steps:
        offsets[k] = pos
        pos += len(FR.step_subsets(k))
    by_last_step: dict[int, list[Polynomial]] = {k: [] for k in steps}
    for g in I.gens:
        last = max(len(FR.subsets[i]) for i in g.variables())
        by_last_step[last].append(g)
    total = FR.ring.nvars
    count = 0

    def extend(k: int, point: list[int]) -> None:
        nonlocal count
        if k == n:
            count += 1
            return
        dim = len(FR.step_subsets(k))
        for pt in _projective_points(F, dim):
            full = point + list(pt)
            padded = full + [0] * (total - len(full))
            if all(F.evaluate(g.terms, padded) == 0 for g in by_last_step[k]):
                extend(k + 1, full)

    extend(1, [])
    expected = q_factorial(n, q)
    return {"n": n, "q": q, "points": count, "expected": expected, "pass": count == expected}


def richardson_point_check(u: Element, w: Element, q: int) -> dict:
    """Zeros of the Richardson ideal among all F_q flags versus the rank conditions."""
    n = u.system.rank + 1
    orc = _oracle(n, q)
    I = richardson_ideal(u, w, n, GF(orc.F.p))
    mismatches = []
    count = 0
    for M in orc.flags:
        by_ideal = _vanishes(orc.F, I, orc.flag_point(M))
        by_rank = orc.in_richardson(M, u, w)
        count += by_rank
        if by_ideal != by_rank:
            mismatches.append([list(r) for r in M])
    return {
        "u": list(u.word),
        "w": list(w.word),
        "q": q,
        "points": count,
        "pass": not mismatches,
        "witnesses": mismatches[:3],
    }


# -- degeneration checks ---------------------------------------------------------


def _monomial_names(ring: PolyRing, exps: Iterable[tuple[int, ...]]) -> list[str]:
    return sorted(repr(ring.monomial(e)) for e in exps)


def groebner_degeneration_check(
    u: Element,
    w: Element,
    k: int,
    n: int | None = None,
    refinement: str = "sum-lex",
    confirm_qq: bool = True,
    degree_bound: int | None = None,
) -> dict:
    """
    Compare the initial ideal of the projected Richardson ideal under the
    Bruhat-refining revlex order with the Stanley-Reisner ideal of the
    projected order complex.
    """
    n = n or u.system.rank + 1
    Q = grassmannian_quotient(n, k)
    K = projected_complex(u, w, Q)
    report = {
        "u": list(u.word),
        "w": list(w.word),
        "k": k,
        "n": n,
        "refinement": refinement,
        "complex": K.to_json(),
        "note": SCHEME_NOTE,
    }
    verdicts = []
    fields = [GF(DEFAULT_PRIME)] + ([QQ] if confirm_qq else [])
    for field in fields:
        I = projected_richardson_ideal(u, w, k, n, field, refinement, degree_bound)
        _, order = bruhat_revlex(Q, refinement)
        G = buchberger(I, order)
        ini = Ideal(I.ring, initial_ideal(G).gens).minimal_monomial_gens()
        sr = sr_ideal(K, I.ring).minimal_monomial_gens()
        diff = sorted(set(ini) ^ set(sr))
        verdict = "EQUAL" if not diff else "DIFFER"
        verdicts.append(verdict)
        report[field.name] = {
            "initial": _monomial_names(I.ring, ini),
            "sr": _monomial_names(I.ring, sr),
            "verdict": verdict,
            "discrepancy": _monomial_names(I.ring, diff),
        }
    report["verdict"] = "EQUAL" if all(v == "EQUAL" for v in verdicts) else "DIFFER"
    report["pass"] = report["verdict"] == "EQUAL"
    return report


def hilbert_comparison(u: Element, w: Element, k: int, n: int | None = None, dmax: int = 4) -> dict:
    """Hilbert function of the projected ideal against face counts of the projected complex."""
    n = n or u.system.rank + 1
    Q = grassmannian_quotient(n, k)
    K = projected_complex(u, w, Q)
    I = projected_richardson_ideal(u, w, k, n)
    rows = []
    for d in range(dmax + 1):
        a, b = hilbert_function(I, d), sr_hilbert(K, d)
        rows.append({"d": d, "algebra": a, "faces": b, "equal": a == b})
    return {
        "u": list(u.word),
        "w": list(w.word),
        "k": k,
        "n": n,
        "degrees": rows,
        "pass": all(r["equal"] for r in rows),
        "note": SCHEME_NOTE,
    }


def slice_cone_recursion_check(u: Element, w: Element, k: int, n: int | None = None) -> dict:
    """
    Slice/cone identity for ``x = p_{pi(u)}`` on the projected ideal, plus the
    recursive reading: the initial ideal of the slice is the Stanley-Reisner
    ideal of the union of the complexes of the P-covers ``u'`` of ``u`` below
    ``w``, and coning it recovers the direct initial ideal.
    """
    n = n or u.system.rank + 1
    Q = grassmannian_quotient(n, k)
    a, b = class_rep(u, w, Q)
    I = projected_richardson_ideal(a, b, k, n)
    R, order = bruhat_revlex(Q)
    R = I.ring
    x = R.names[Q.coset_of(a)]
    report = revlex_slice_cone_check(I, x, order)
    report.update(u=list(a.word), w=list(b.word), k=k, n=n)
    if report["status"] != "holds":
        report["pass"] = False
        return report

    W = Q.system
    covers = [v for v in W.covers(a, "up") if p_cover(a, v, Q) and p_leq(v, b, Q)]
    report["covers"] = [list(v.word) for v in covers]
    if not covers:
        report["recursion"] = "base case"
        report["pass"] = True
        return report
    union = SimplicialComplex(f for v in covers for f in projected_complex(v, b, Q).facets)
    lin = set(report["linear-variables"])
    keep = [nm for nm in R.names if nm not in lin]
    sub = R.subring(keep)
    I2 = Ideal(sub, [g.set_zero([R.index(v) for v in lin]).to_ring(sub) for g in I.gens])
    S = slice_ideal(I2, x)
    ranking = [S.ring.index(R.names[v]) for v in order.ranking if R.names[v] in set(S.ring.names)]
    in_S = Ideal(S.ring, initial_ideal(buchberger(S, MonomialOrder.grevlex(S.ring.nvars, ranking))).gens)
    verts = [R.index(nm) for nm in S.ring.names]
    sr_union = sr_ideal(union, S.ring, verts)
    ok = sorted(in_S.minimal_monomial_gens()) == sorted(sr_union.minimal_monomial_gens())
    report["recursion"] = "slice matches union of cover complexes" if ok else "slice differs from union"
    report["pass"] = ok
    return report


# -- point-set checks ------------------------------------------------------------


def _closed_points(I: Ideal, F: FiniteField) -> set[tuple[int, ...]]:
    return {pt for pt in _projective_points(F, I.ring.nvars) if _vanishes(F, I, pt)}


def hyperplane_section_check(u: Element, w: Element, k: int, q: int, n: int | None = None) -> dict:
    """
    Points of the projected Richardson variety with ``p_{pi(u)} = 0`` versus
    the union over P-covers ``u'`` of ``u`` with ``u' <=_P w``.
    """
    n = n or u.system.rank + 1
    Q = grassmannian_quotient(n, k)
    F = FiniteField(q)
    field = GF(F.p)
    W = Q.system
    if not p_leq(u, w, Q):
        raise NotComparableError(f"{u!r} is not <=_P {w!r}")
    big = _closed_points(projected_richardson_ideal(u, w, k, n, field), F)
    x = Q.coset_of(u)
    lhs = {pt for pt in big if pt[x] == 0}
    covers = [v for v in W.covers(u, "up") if p_cover(u, v, Q) and p_leq(v, w, Q)]
    rhs: set = set()
    for v in covers:
        rhs |= _closed_points(projected_richardson_ideal(v, w, k, n, field), F)
    diff = sorted(lhs ^ rhs)
    return {
        "u": list(u.word),
        "w": list(w.word),
        "k": k,
        "n": n,
        "q": q,
        "covers": [list(v.word) for v in covers],
        "section-points": len(lhs),
        "union-points": len(rhs),
        "pass": not diff,
        "witness": list(diff[0]) if diff else None,
        "note": COVER_NOTE,
    }


def stratification_check(k: int, n: int, q: int) -> dict:
    """Every F_q point of ``Gr(k, n)`` lies in exactly one open projected Richardson stratum."""
    Q = grassmannian_quotient(n, k)
    P = q_poset(Q)
    F = FiniteField(q)
    field = GF(F.p)
    orc = _oracle(n, q)
    points = orc.grassmannian_points(k)
    closed = []
    for c in P.classes:
        I = projected_richardson_ideal(c.u, c.w, k, n, field)
        closed.append({pt for pt in points if _vanishes(F, I, pt)})
    per_class = [0] * len(P)
    bad = []
    for pt in points:
        homes = [
            j
            for j in range(len(P))
            if pt in closed[j] and not any(pt in closed[i] for i in P.below[j] if i != j)
        ]
        if len(homes) != 1:
            bad.append({"point": list(pt), "strata": homes})
        for j in homes:
            per_class[j] += 1
    expected = gaussian_binomial(n, k, q)
    return {
        "k": k,
        "n": n,
        "q": q,
        "points": len(points),
        "expected-points": expected,
        "distinct-points": len(set(points)),
        "classes": len(P),
        "stratum-sizes": per_class,
        "pass": not bad and len(set(points)) == len(points) == expected,
        "witnesses": bad[:3],
    }


def model_image_check(u: Element, w: Element, k: int, q: int, n: int | None = None) -> dict:
    """
    Point-level checks of projections of Richardson varieties over F_q:
    (a) P-Bruhat pairs of one class have the same open image, (b) projection
    is injective on open Richardson points of P-Bruhat pairs, (c) the closed
    image of ``X_u^w`` equals that of its model from :func:`find_model`.
    """
    n = n or u.system.rank + 1
    Q = grassmannian_quotient(n, k)
    orc = _oracle(n, q)
    W = Q.system
    _check_pair(u, w)
    a, b = find_model(u, w, Q)
    rep = class_rep(a, b, Q)
    same_class = [(x, y) for x, y in p_pairs(Q) if class_rep(x, y, Q) == rep]

    def open_points(x, y):
        return [M for M in orc.flags if orc.in_richardson(M, x, y, open_=True)]

    images = {}
    injective = True
    for x, y in same_class:
        pts = open_points(x, y)
        img = {orc.projected(M, k) for M in pts}
        images[(x.index, y.index)] = img
        injective &= len(img) == len(pts)
    distinct = {frozenset(v) for v in images.values()}

    def closed_image(x, y):
        return {orc.projected(M, k) for M in orc.flags if orc.in_richardson(M, x, y)}

    img_uw, img_model = closed_image(u, w), closed_image(a, b)
    return {
        "u": list(u.word),
        "w": list(w.word),
        "k": k,
        "n": n,
        "q": q,
        "model": [list(a.word), list(b.word)],
        "class-size": len(same_class),
        "open-images-agree": len(distinct) == 1,
        "injective": injective,
        "closed-image-points": len(img_uw),
        "closed-images-agree": img_uw == img_model,
        "pass": len(distinct) == 1 and injective and img_uw == img_model,
    }
