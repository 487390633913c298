"""
Exact multivariate polynomials over QQ and GF(p), monomial orders, a
Buchberger engine with the Gebauer-Moeller pair criteria, elimination,
slice/cone, Hilbert functions and Stanley-Reisner ideals.

Monomials are dense exponent tuples.  Coefficients are ``Fraction`` over QQ
and ``int`` in ``range(p)`` over GF(p).
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Mapping, Sequence

from .errors import DegreeBoundExceeded

__all__ = [
    "Field",
    "QQ",
    "GF",
    "PolyRing",
    "Polynomial",
    "MonomialOrder",
    "Ideal",
    "GroebnerBasis",
    "buchberger",
    "initial_ideal",
    "eliminate",
    "saturate_by_var",
    "slice_ideal",
    "cone_ideal",
    "is_nonzerodivisor",
    "revlex_slice_cone_check",
    "hilbert_function",
    "sr_ideal",
    "bruhat_revlex",
    "default_degree_bound",
]

DEFAULT_PRIME = 32003

Exp = tuple[int, ...]


class Field:
    """QQ when ``p`` is None, else the prime field GF(p)."""

    __slots__ = ("p",)

    def __init__(self, p: int | None = None):
        if p is not None and (p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("Field", self.p))

    def __repr__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def name(self) -> str:
        return repr(self)

    def __call__(self, c) -> Fraction | int:
        """Coerce an int or Fraction into the field."""
        if self.p is None:
            return Fraction(c)
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(c) if self.p is None else pow(c, -1, self.p)

    def to_json(self, c) -> int | str:
        if self.p is None:
            return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
        return c


QQ = Field(None)


def GF(p: int = DEFAULT_PRIME) -> Field:
    return Field(p)


class PolyRing:
    """A polynomial ring with named variables over ``field``."""

    __slots__ = ("names", "field", "_pos")

    def __init__(self, names: Sequence[str], field: Field = QQ):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.field = field
        self._pos = {n: i for i, n in enumerate(self.names)}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyRing) and self.names == other.names and self.field == other.field

    def __hash__(self) -> int:
        return hash((self.names, self.field))

    def __repr__(self) -> str:
        return f"PolyRing({list(self.names)}, {self.field!r})"

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._pos[name]

    def var(self, v: str | int) -> "Polynomial":
        i = self._pos[v] if isinstance(v, str) else v
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: self.field(c)})

    def monomial(self, exp: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exp): self.field(coeff)})

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(self.names, field)

    def subring(self, keep: Iterable[str]) -> "PolyRing":
        keep = set(keep)
        return PolyRing([n for n in self.names if n in keep], self.field)

    def monomials_of_degree(self, d: int) -> list[Exp]:
        out = []
        for combo in combinations_with_replacement(range(self.nvars), d):
            e = [0] * self.nvars
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        return out


class Polynomial:
    """An immutable polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Exp, object]):
        self.ring = ring
        F = ring.field
        clean = {}
        for e, c in terms.items():
            c = F(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials live in different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        F = self.ring.field
        for e, c in other.terms.items():
            v = F(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        F = self.ring.field
        return Polynomial._raw(self.ring, {e: F(-c) for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        F = self.ring.field
        out: dict[Exp, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.ring, {e: F(c) for e, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, a in enumerate(e) if a}

    def set_zero(self, idx: Iterable[int]) -> "Polynomial":
        """Substitute zero for the variables at positions ``idx`` (same ring)."""
        idx = set(idx)
        return Polynomial._raw(
            self.ring, {e: c for e, c in self.terms.items() if not any(e[i] for i in idx)}
        )

    def to_ring(self, ring: PolyRing) -> "Polynomial":
        """Move into ``ring`` by variable name; variables absent from ``ring`` must not occur."""
        pos = [ring._pos.get(n) for n in self.ring.names]
        out = {}
        for e, c in self.terms.items():
            new = [0] * ring.nvars
            for i, a in enumerate(e):
                if a:
                    if pos[i] is None:
                        raise ValueError(f"variable {self.ring.names[i]} not in target ring")
                    new[pos[i]] = a
            out[tuple(new)] = c
        return Polynomial(ring, out)

    def evaluate(self, point: Sequence[int], p: int | None = None):
        """Value at ``point``; modulo ``p`` if given (coefficients must then be integral mod p)."""
        total = 0
        for e, c in self.terms.items():
            t = c if p is None else int(Field(p)(c))
            for x, a in zip(point, e):
                if a:
                    t = t * x**a
            total += t
        return total if p is None else total % p

    def _term_str(self, e: Exp) -> str:
        parts = []
        for i, a in enumerate(e):
            if a:
                parts.append(self.ring.names[i] + (f"^{a}" if a > 1 else ""))
        return "*".join(parts)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-a for a in e))):
            c = self.terms[e]
            mono = self._term_str(e)
            p = self.ring.field.p
            if p is not None and c > p // 2:
                c -= p  # print GF(p) elements in the symmetric range
            sign = "-" if c < 0 else "+"
            mag = -c if sign == "-" else c
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else f"{mag}")
            out.append((sign, body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self) -> list:
        F = self.ring.field
        return [[F.to_json(c), list(e)] for e, c in sorted(self.terms.items())]


class MonomialOrder:
    """
    A term order given by a sort key on exponent tuples: larger key, larger monomial.

    ``grevlex(n, ranking)``: ``ranking`` lists variable positions from lowest
    rank to highest.  Among monomials of equal degree, the one with the smaller
    exponent in the lowest-ranked differing variable is larger.

    With ``z`` lowest (the usual x > y > z), ``y^2 > x*z`` and ``x*y > y*z``:

    >>> o = MonomialOrder.grevlex(3, [2, 1, 0])
    >>> o.greater((0, 2, 0), (1, 0, 1)), o.greater((1, 1, 0), (0, 1, 1))
    (True, True)
    """

    __slots__ = ("name", "nvars", "_key", "_cache", "ranking", "front")

    def __init__(self, name: str, nvars: int, key: Callable[[Exp], tuple], ranking=None, front=()):
        self.name = name
        self.nvars = nvars
        self._key = key
        self._cache: dict[Exp, tuple] = {}
        self.ranking = tuple(ranking) if ranking is not None else None
        self.front = tuple(front)

    def __repr__(self) -> str:
        return f"MonomialOrder({self.name!r})"

    @classmethod
    def grevlex(cls, nvars: int, ranking: Sequence[int] | None = None, name: str = "grevlex") -> "MonomialOrder":
        rank = tuple(range(nvars) if ranking is None else ranking)
        if sorted(rank) != list(range(nvars)):
            raise ValueError("ranking must be a permutation of the variable positions")

        def key(e: Exp) -> tuple:
            return (sum(e), tuple(-e[v] for v in rank))

        return cls(name, nvars, key, ranking=rank)

    @classmethod
    def block(cls, front: Sequence[int], back: "MonomialOrder", name: str = "block") -> "MonomialOrder":
        """
        Elimination order: compare the ``front`` variables first by grevlex with
        ``front`` listed lowest rank first, then break ties with ``back``.
        """
        front = tuple(front)
        fset = set(front)

        def key(e: Exp) -> tuple:
            fe = (sum(e[v] for v in front), tuple(-e[v] for v in front))
            rest = tuple(0 if i in fset else a for i, a in enumerate(e))
            return (fe, back.key(rest))

        return cls(name, back.nvars, key, ranking=back.ranking, front=front)

    def key(self, e: Exp) -> tuple:
        k = self._cache.get(e)
        if k is None:
            k = self._cache[e] = self._key(e)
        return k

    def greater(self, a: Exp, b: Exp) -> bool:
        return self.key(a) > self.key(b)

    def compare(self, a: Exp, b: Exp) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def leading(self, f: Polynomial) -> Exp:
        if not f.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(f.terms, key=self.key)


def default_degree_bound() -> int:
    return int(os.environ.get("RLAB_DEGREE_BOUND", "6"))


# -- Buchberger engine on raw dicts --------------------------------------------


def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exp, b: Exp) -> Exp:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _disjoint(a: Exp, b: Exp) -> bool:
    return not any(x and y for x, y in zip(a, b))


class _Engine:
    def __init__(self, ring: PolyRing, order: MonomialOrder):
        self.ring = ring
        self.order = order
        self.p = ring.field.p
        self.K = order.key

    def monic(self, f: dict) -> dict:
        lt = max(f, key=self.K)
        c = f[lt]
        if c == 1:
            return f
        if self.p is None:
            return {e: v / c for e, v in f.items()}
        inv = pow(c, -1, self.p)
        return {e: v * inv % self.p for e, v in f.items()}

    def reduce(self, f: dict, basis: Sequence[tuple[Exp, dict]], full: bool = True) -> dict:
        """Normal form of ``f`` modulo monic ``basis`` (pairs of leading exponent and terms)."""
        f = dict(f)
        out: dict[Exp, object] = {}
        K, p = self.K, self.p
        while f:
            lt = max(f, key=K)
            c = f[lt]
            for glt, g in basis:
                if _divides(glt, lt):
                    q = tuple(x - y for x, y in zip(lt, glt))
                    for e, a in g.items():
                        e2 = tuple(x + y for x, y in zip(e, q))
                        v = f.get(e2, 0) - c * a
                        if p is not None:
                            v %= p
                        if v:
                            f[e2] = v
                        else:
                            f.pop(e2, None)
                    break
            else:
                if not full:
                    out.update(f)
                    return out
                out[lt] = c
                del f[lt]
        return out

    def spoly(self, f: tuple[Exp, dict], g: tuple[Exp, dict]) -> dict:
        (a, fa), (b, gb) = f, g
        L = _lcm(a, b)
        qa = tuple(x - y for x, y in zip(L, a))
        qb = tuple(x - y for x, y in zip(L, b))
        out: dict[Exp, object] = {}
        for e, c in fa.items():
            out[tuple(x + y for x, y in zip(e, qa))] = c
        p = self.p
        for e, c in gb.items():
            e2 = tuple(x + y for x, y in zip(e, qb))
            v = out.get(e2, 0) - c
            if p is not None:
                v %= p
            if v:
                out[e2] = v
            else:
                out.pop(e2, None)
        return out


def _update(polys, active: list[int], pairs: list, h: int):
    """Gebauer-Moeller installation of basis element ``h``."""
    lt = [q[0] for q in polys]
    H = lt[h]
    C = [g for g in active]
    D: list[int] = []
    while C:
        g1 = C.pop()
        L1 = _lcm(H, lt[g1])
        if _disjoint(H, lt[g1]):
            D.append(g1)
            continue
        if any(_divides(_lcm(H, lt[g2]), L1) for g2 in C) or any(_divides(_lcm(H, lt[g2]), L1) for g2 in D):
            continue
        D.append(g1)
    E = [(g, h) for g in D if not _disjoint(H, lt[g])]
    kept = []
    for g1, g2 in pairs:
        L = _lcm(lt[g1], lt[g2])
        if _divides(H, L) and _lcm(lt[g1], H) != L and _lcm(H, lt[g2]) != L:
            continue
        kept.append((g1, g2))
    new_active = [g for g in active if not _divides(H, lt[g])] + [h]
    return new_active, kept + E


def _groebner_raw(ring: PolyRing, order: MonomialOrder, gens: Iterable[dict], degree_bound: int | None):
    eng = _Engine(ring, order)
    K = order.key
    polys: list[tuple[Exp, dict]] = []
    active: list[int] = []
    pairs: list[tuple[int, int]] = []

    def install(f: dict):
        nonlocal active, pairs
        f = eng.monic(f)
        polys.append((max(f, key=K), f))
        active, pairs = _update(polys, active, pairs, len(polys) - 1)

    # seed with interreduced inputs, lowest leading term first
    seeds = [g for g in gens if g]
    seeds.sort(key=lambda g: K(max(g, key=K)))
    for g in seeds:
        r = eng.reduce(g, [polys[i] for i in active])
        if r:
            if degree_bound is not None and max(sum(e) for e in r) > degree_bound:
                raise DegreeBoundExceeded(f"input generator of degree above {degree_bound}")
            install(r)

    while pairs:
        # normal selection strategy: smallest lcm first
        best = min(range(len(pairs)), key=lambda k: K(_lcm(polys[pairs[k][0]][0], polys[pairs[k][1]][0])))
        i, j = pairs.pop(best)
        s = eng.spoly(polys[i], polys[j])
        r = eng.reduce(s, [polys[k] for k in active])
        if r:
            if degree_bound is not None and max(sum(e) for e in r) > degree_bound:
                raise DegreeBoundExceeded(
                    f"new basis element of degree {max(sum(e) for e in r)} exceeds bound {degree_bound}"
                )
            install(r)

    # reduced basis
    basis = [polys[i] for i in active]
    basis = [b for b in basis if not any(o is not b and _divides(o[0], b[0]) for o in basis)]
    out = []
    for k, (lt, f) in enumerate(basis):
        others = basis[:k] + basis[k + 1 :]
        r = eng.reduce(f, others)
        out.append((max(r, key=K), eng.monic(r)))
    out.sort(key=lambda q: K(q[0]))
    return out


class GroebnerBasis:
    """A reduced Groebner basis; ``polys`` sorted by increasing leading monomial."""

    def __init__(self, ring: PolyRing, order: MonomialOrder, polys: Sequence[Polynomial]):
        self.ring = ring
        self.order = order
        self.polys = tuple(polys)
        self._raw = [(order.leading(f), f.terms) for f in self.polys]

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and set(self.polys) == set(other.polys)
        )

    def __repr__(self) -> str:
        return f"GroebnerBasis({list(self.polys)})"

    def leading_monomials(self) -> list[Exp]:
        return [lt for lt, _ in self._raw]

    def reduce(self, f: Polynomial) -> Polynomial:
        eng = _Engine(self.ring, self.order)
        return Polynomial._raw(self.ring, eng.reduce(f.terms, self._raw))

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def is_groebner(self) -> bool:
        """Every S-polynomial reduces to zero."""
        eng = _Engine(self.ring, self.order)
        for a in range(len(self._raw)):
            for b in range(a + 1, len(self._raw)):
                if eng.reduce(eng.spoly(self._raw[a], self._raw[b]), self._raw):
                    return False
        return True

    def ideal(self) -> "Ideal":
        return Ideal(self.ring, self.polys)


class Ideal:
    """A finitely generated ideal."""

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial]):
        self.ring = ring
        gl = []
        for g in gens:
            if g.ring != ring:
                g = g.to_ring(ring)
            if g:
                gl.append(g)
        self.gens: tuple[Polynomial, ...] = tuple(gl)

    def __repr__(self) -> str:
        return f"Ideal({list(self.gens)})"

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.gens + other.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def with_field(self, field: Field) -> "Ideal":
        R = self.ring.with_field(field)
        return Ideal(R, [Polynomial(R, g.terms) for g in self.gens])

    def groebner(self, order: MonomialOrder, degree_bound: int | None = None) -> GroebnerBasis:
        return buchberger(self, order, degree_bound)

    def equals(self, other: "Ideal", order: MonomialOrder | None = None) -> bool:
        order = order or MonomialOrder.grevlex(self.ring.nvars)
        return buchberger(self, order).polys == buchberger(other, order).polys

    def minimal_monomial_gens(self) -> list[Exp]:
        """Minimal generators of a monomial ideal."""
        if not self.is_monomial():
            raise ValueError("not a monomial ideal")
        exps = sorted({next(iter(g.terms)) for g in self.gens}, key=lambda e: (sum(e), e))
        out: list[Exp] = []
        for e in exps:
            if not any(_divides(m, e) for m in out):
                out.append(e)
        return sorted(out)

    def to_json(self) -> dict:
        return {
            "field": self.ring.field.name,
            "variables": list(self.ring.names),
            "polynomials": [g.to_json() for g in self.gens],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Ideal":
        field_name = data.get("field", "QQ")
        field = QQ if field_name == "QQ" else GF(int(field_name[3:-1]))
        R = PolyRing(data["variables"], field)
        polys = []
        for terms in data["polynomials"]:
            polys.append(Polynomial(R, {tuple(e): Fraction(c) if isinstance(c, str) else c for c, e in terms}))
        return cls(R, polys)


def buchberger(I: Ideal, order: MonomialOrder, degree_bound: int | None = None) -> GroebnerBasis:
    """
    Reduced Groebner basis of ``I``.  With ``degree_bound`` set, any new basis
    element of larger degree raises :class:`DegreeBoundExceeded`.

    >>> R = PolyRing(["x", "y"], QQ)
    >>> x, y = R.gens()
    >>> buchberger(Ideal(R, [2*x*y - 2]), MonomialOrder.grevlex(2)).polys
    (x*y - 1,)
    """
    if order.nvars != I.ring.nvars:
        raise ValueError("order and ring have different numbers of variables")
    raw = _groebner_raw(I.ring, order, [g.terms for g in I.gens], degree_bound)
    return GroebnerBasis(I.ring, order, [Polynomial._raw(I.ring, f) for _, f in raw])


def initial_ideal(G: GroebnerBasis) -> Ideal:
    """Ideal of leading monomials of a Groebner basis."""
    return Ideal(G.ring, [G.ring.monomial(lt) for lt in G.leading_monomials()])


def eliminate(
    I: Ideal,
    drop: Sequence[str],
    back: MonomialOrder | None = None,
    degree_bound: int | None = None,
) -> Ideal:
    """
    ``I`` intersected with the subring on the variables not in ``drop``,
    returned in that subring.  ``drop`` is listed lowest rank first; ``back``
    orders the kept variables (positions in the subring), grevlex by default.
    """
    R = I.ring
    drop_idx = [R.index(n) for n in drop]
    keep_names = [n for n in R.names if n not in set(drop)]
    sub = R.subring(keep_names)
    if not drop_idx:
        return Ideal(sub, I.gens)
    if back is None:
        back = MonomialOrder.grevlex(sub.nvars)
    # lift the back order to the full ring by position
    keep_pos = [R.index(n) for n in keep_names]
    back_full = MonomialOrder(
        back.name, R.nvars, lambda e: back.key(tuple(e[i] for i in keep_pos))
    )
    order = MonomialOrder.block(drop_idx, back_full, name=f"block[{back.name}]")
    G = buchberger(I, order, degree_bound)
    dset = set(drop_idx)
    return Ideal(sub, [g.to_ring(sub) for g in G.polys if not (g.variables() & dset)])


def saturate_by_var(I: Ideal, x: str, degree_bound: int | None = None) -> Ideal:
    """
    ``I : x^infinity`` for homogeneous ``I``: Groebner basis under graded
    revlex with ``x`` lowest, then strip the powers of ``x`` from every element.

    >>> R = PolyRing(["x", "y", "z"], QQ)
    >>> x, y, z = R.gens()
    >>> saturate_by_var(Ideal(R, [x*y, x*z]), "x").gens
    (y, z)
    """
    if not I.is_homogeneous():
        raise ValueError("saturation by a variable needs a homogeneous ideal")
    R = I.ring
    i = R.index(x)
    ranking = [i] + [j for j in range(R.nvars) if j != i]
    G = buchberger(I, MonomialOrder.grevlex(R.nvars, ranking), degree_bound)
    out = []
    for g in G.polys:
        m = min(e[i] for e in g.terms)
        if m:
            g = Polynomial._raw(R, {e[:i] + (e[i] - m,) + e[i + 1 :]: c for e, c in g.terms.items()})
        out.append(g)
    return Ideal(R, out)


def slice_ideal(I: Ideal, x: str) -> Ideal:
    """Image of ``I`` after setting ``x = 0``, in the ring without ``x``."""
    R = I.ring
    i = R.index(x)
    sub = R.subring(n for n in R.names if n != x)
    return Ideal(sub, [g.set_zero([i]).to_ring(sub) for g in I.gens])


def cone_ideal(J: Ideal, ring: PolyRing) -> Ideal:
    """Extension of ``J`` to a ring with more variables."""
    return Ideal(ring, [g.to_ring(ring) for g in J.gens])


def ideal_quotient_by_var(I: Ideal, x: str) -> Ideal:
    """``I : x`` computed as ``(I intersect (x)) / x`` with an auxiliary variable."""
    R = I.ring
    t = "_t"
    while t in R.names:
        t += "_"
    Rt = PolyRing((t,) + R.names, R.field)
    tv = Rt.var(t)
    xv = Rt.var(x)
    gens = [tv * g.to_ring(Rt) for g in I.gens] + [(Rt.one() - tv) * xv]
    inter = eliminate(Ideal(Rt, gens), [t])
    xi = R.index(x)
    out = []
    for g in inter.gens:
        g = g.to_ring(R)
        terms = {}
        for e, c in g.terms.items():
            if e[xi] == 0:
                raise AssertionError("element of I intersect (x) not divisible by x")
            e2 = list(e)
            e2[xi] -= 1
            terms[tuple(e2)] = c
        out.append(Polynomial(R, terms))
    return Ideal(R, out)


def is_nonzerodivisor(I: Ideal, x: str) -> tuple[bool, Polynomial | None]:
    """
    Whether ``x`` is a nonzerodivisor modulo ``I``.  On failure also returns a
    witness ``f`` with ``x f`` in ``I`` and ``f`` not in ``I``.
    """
    G = buchberger(I, MonomialOrder.grevlex(I.ring.nvars))
    for f in ideal_quotient_by_var(I, x).gens:
        if not G.contains(f):
            return False, G.reduce(f)
    return True, None


def revlex_slice_cone_check(I: Ideal, x: str, order: MonomialOrder, degree_bound: int | None = None) -> dict:
    """
    Check ``In(I) = Cone(In(Slice(I)))`` for ``x`` the revlex-last variable.

    Variables that already lie in ``I`` are set to zero first; ``x`` must then
    be lowest in the ranking of the remaining variables and a nonzerodivisor.
    Returns a report with ``status`` ``"holds"``, ``"fails"`` or ``"skipped"``.
    """
    R = I.ring
    if order.ranking is None or order.front:
        raise ValueError("slice/cone check needs a graded revlex order")
    G = buchberger(I, order, degree_bound)
    linear_vars = sorted(
        next(i for i, a in enumerate(next(iter(g.terms))) if a)
        for g in G.polys
        if g.is_monomial() and g.degree() == 1
    )
    lin_names = [R.names[i] for i in linear_vars]
    keep = [n for n in R.names if n not in set(lin_names)]
    sub = R.subring(keep)
    I2 = Ideal(sub, [g.set_zero(linear_vars).to_ring(sub) for g in I.gens])
    report: dict = {"variable": x, "linear-variables": lin_names}
    if x not in keep:
        report.update(status="skipped", reason=f"{x} lies in the ideal")
        return report
    ranking = [sub.index(R.names[v]) for v in order.ranking if R.names[v] in set(keep)]
    if sub.names[ranking[0]] != x:
        report.update(status="skipped", reason=f"{x} is not revlex-last")
        return report
    ok, witness = is_nonzerodivisor(I2, x)
    if not ok:
        report.update(status="skipped", reason="zero divisor", witness=repr(witness))
        return report
    o2 = MonomialOrder.grevlex(sub.nvars, ranking)
    in_I = initial_ideal(buchberger(I2, o2, degree_bound))
    S = slice_ideal(I2, x)
    sring = S.ring
    s_rank = [sring.index(sub.names[v]) for v in ranking if sub.names[v] != x]
    in_S = initial_ideal(buchberger(S, MonomialOrder.grevlex(sring.nvars, s_rank), degree_bound))
    coned = cone_ideal(in_S, sub)
    lhs = sorted(Ideal(sub, in_I.gens).minimal_monomial_gens())
    rhs = sorted(coned.minimal_monomial_gens())
    report.update(
        status="holds" if lhs == rhs else "fails",
        initial=[repr(sub.monomial(e)) for e in lhs],
        cone=[repr(sub.monomial(e)) for e in rhs],
    )
    return report


def _rank_mod(rows: list[dict], p: int | None) -> int:
    """Rank of sparse rows (dicts column -> value) by Gaussian elimination."""
    pivots: dict = {}
    rank = 0
    for row in rows:
        r = dict(row)
        while r:
            col = min(r)
            if col not in pivots:
                c = r[col]
                inv = (1 / c) if p is None else pow(c, -1, p)
                r = {k: (v * inv if p is None else v * inv % p) for k, v in r.items()}
                pivots[col] = r
                rank += 1
                break
            piv = pivots[col]
            c = r[col]
            for k, v in piv.items():
                nv = r.get(k, 0) - c * v
                if p is not None:
                    nv %= p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return rank


def hilbert_function(I: Ideal, d: int) -> int:
    """
    Dimension of the degree-``d`` part of ``R/I`` for homogeneous ``I``, by row
    reduction of all degree-``d`` multiples of the generators.

    >>> R = PolyRing(["x", "y", "z"], QQ)
    >>> x, y, z = R.gens()
    >>> [hilbert_function(Ideal(R, [x*y - z**2]), d) for d in range(4)]
    [1, 3, 5, 7]
    """
    if not I.is_homogeneous():
        raise ValueError("Hilbert function needs a homogeneous ideal")
    R = I.ring
    basis = R.monomials_of_degree(d)
    col = {e: i for i, e in enumerate(basis)}
    rows = []
    for g in I.gens:
        dg = g.degree()
        if dg > d:
            continue
        for m in R.monomials_of_degree(d - dg):
            rows.append({col[tuple(a + b for a, b in zip(e, m))]: c for e, c in g.terms.items()})
    return len(basis) - _rank_mod(rows, R.field.p)


def sr_ideal(K, ring: PolyRing, vertex_of_var: Sequence[int] | None = None) -> Ideal:
    """
    Stanley-Reisner ideal of ``K`` in ``ring``: generated by the minimal
    non-faces over the full vertex set ``range(ring.nvars)`` (or the vertices
    listed in ``vertex_of_var``, one per variable).
    """
    from .simpcomplex import SimplicialComplex

    verts = list(range(ring.nvars)) if vertex_of_var is None else list(vertex_of_var)
    pos = {v: i for i, v in enumerate(verts)}
    full = SimplicialComplex(K.facets, vertices=verts)
    gens = []
    for face in full.minimal_non_faces():
        e = [0] * ring.nvars
        for v in face:
            e[pos[v]] = 1
        gens.append(ring.monomial(e))
    return Ideal(ring, gens)


def bruhat_revlex(Q, refinement: str = "sum-lex") -> tuple[PolyRing, MonomialOrder]:
    """
    Ring with one variable per coset of ``Q`` (named ``p`` + label, in coset-id
    order) and the graded revlex order ranking variables by a linear extension
    of Bruhat order.  ``sum-lex`` uses coset ids; ``sum-colex`` breaks ties
    among equal-sum subsets colexicographically (type A Grassmannians only).

    >>> from rlab.coxeter import make_system
    >>> from rlab.parabolic import ParabolicQuotient
    >>> R, o = bruhat_revlex(ParabolicQuotient(make_system("A3"), {1, 3}))
    >>> R.names
    ('p12', 'p13', 'p14', 'p23', 'p24', 'p34')
    >>> o.greater((0, 0, 1, 1, 0, 0), (0, 1, 0, 0, 1, 0))
    True
    """
    names = ["p" + Q.label(c) if Q.grassmannian_k is not None else f"x{c}" for c in range(Q.n_cosets)]
    ring = PolyRing(names, GF(DEFAULT_PRIME))
    if refinement == "sum-lex":
        ranking = list(range(Q.n_cosets))
    elif refinement == "sum-colex":
        if Q.grassmannian_k is None:
            raise ValueError("sum-colex refinement needs a type A Grassmannian quotient")
        ranking = sorted(range(Q.n_cosets), key=lambda c: (sum(Q.subset(c)), Q.subset(c)[::-1]))
    else:
        raise ValueError(f"unknown refinement {refinement!r}")
    return ring, MonomialOrder.grevlex(len(names), ranking, name=f"bruhat-revlex[{refinement}]")
