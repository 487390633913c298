"""
Projected order complexes of Bruhat intervals on ``W/W_P``, facet lifting,
lexicographic shellings from reflection orders, thinness, ball/sphere
certificates and Stanley-Reisner face counts.

Vertices are coset ids of a :class:`~rlab.parabolic.ParabolicQuotient`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .coxeter import Element
from .errors import ComplexError, NotComparableError, ReflectionOrderError
from .parabolic import ParabolicQuotient, demazure, unique_lift
from .pbruhat import QPoset, p_chains, p_cover, p_leq
from .reforder import ReflectionOrder, chain_sort_key

__all__ = [
    "SimplicialComplex",
    "ShellingCertificate",
    "certificate_for",
    "RidgeTable",
    "normalize_pair",
    "projected_complex",
    "direct_image_complex",
    "lift_facet",
    "shelling_order",
    "lex_order_facets",
    "verify_shelling",
    "ridge_classification",
    "ball_certificate",
    "sr_hilbert",
    "boundary_containment_check",
]

Face = tuple[int, ...]


class SimplicialComplex:
    """
    A simplicial complex stored by its facets.

    >>> K = SimplicialComplex([[0, 1], [1, 2], [0, 1, 2], [3]])
    >>> K.facets
    ((3,), (0, 1, 2))
    >>> K.f_vector()
    [1, 4, 3, 1]
    """

    __slots__ = ("facets", "vertices")

    def __init__(self, facets: Iterable[Iterable[int]], vertices: Iterable[int] | None = None):
        cands = {tuple(sorted(set(f))) for f in facets}
        maximal = [f for f in cands if not any(f != g and set(f) <= set(g) for g in cands)]
        self.facets: tuple[Face, ...] = tuple(sorted(maximal, key=lambda f: (len(f), f)))
        used = {v for f in self.facets for v in f}
        self.vertices: tuple[int, ...] = tuple(sorted(used if vertices is None else set(vertices) | used))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimplicialComplex) and set(self.facets) == set(other.facets)

    def __hash__(self) -> int:
        return hash(frozenset(self.facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex({[list(f) for f in self.facets]})"

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces(self) -> set[Face]:
        """All faces, including the empty face."""
        out: set[Face] = set()
        for f in self.facets:
            for r in range(len(f) + 1):
                out.update(combinations(f, r))
        return out

    def f_vector(self) -> list[int]:
        """``[f_{-1}, f_0, f_1, ...]``: number of faces with 0, 1, 2, ... vertices."""
        counts = [0] * (self.dim + 2)
        for face in self.faces():
            counts[len(face)] += 1
        return counts

    def contains_face(self, face: Iterable[int]) -> bool:
        s = set(face)
        return any(s <= set(f) for f in self.facets)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return all(other.contains_face(f) for f in self.facets)

    def minimal_non_faces(self) -> list[Face]:
        """Minimal vertex subsets of ``self.vertices`` that are not faces."""
        faces = self.faces()
        out = []
        for r in range(1, len(self.vertices) + 1):
            for s in combinations(self.vertices, r):
                if s in faces:
                    continue
                if all(s[:i] + s[i + 1 :] in faces for i in range(r)):
                    out.append(s)
        return out

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "facets": [list(f) for f in self.facets]}


def normalize_pair(u: Element, w: Element, Q: ParabolicQuotient) -> tuple[Element, Element]:
    """``(u o' w_P, w^P)``: a P-Bruhat pair with ``w`` in ``W^P`` and the same projected complex."""
    W = Q.system
    if not W.bruhat_leq(u, w):
        raise NotComparableError(f"{u!r} is not <= {w!r}")
    wP, w_par = Q.factorize(w)
    u2 = demazure(u, w_par.inverse(), "down")
    if not p_leq(u2, wP, Q):
        raise AssertionError(f"normalized pair ({u2!r}, {wP!r}) is not P-Bruhat")
    return u2, wP


def projected_complex(u: Element, w: Element, Q: ParabolicQuotient) -> SimplicialComplex:
    """
    Image in ``W/W_P`` of the order complex of ``[u, w]``, built from the
    maximal P-Bruhat chains of the normalized pair.
    """
    a, b = normalize_pair(u, w, Q)
    facets = [[Q.coset_of(c) for c in chain] for chain in p_chains(a, b, Q)]
    return SimplicialComplex(facets)


def direct_image_complex(u: Element, w: Element, Q: ParabolicQuotient) -> SimplicialComplex:
    """Image of every maximal chain of ``[u, w]``, no normalization or P-chains involved."""
    W = Q.system
    if not W.bruhat_leq(u, w):
        raise NotComparableError(f"{u!r} is not <= {w!r}")
    return SimplicialComplex({Q.coset_of(c) for c in chain} for chain in W.maximal_chains(u, w))


def lift_facet(F: Iterable[int], u: Element, w: Element, Q: ParabolicQuotient) -> tuple[Element, ...]:
    """The P-Bruhat chain of the normalized ``[u, w]`` that projects onto facet ``F``."""
    a, b = normalize_pair(u, w, Q)
    face = tuple(sorted(set(F)))
    # coset ids extend Bruhat order on W/W_P, so this is the order along the chain
    if face not in set(projected_complex(a, b, Q).facets):
        raise ComplexError(f"{list(face)} is not a facet")
    if Q.coset_of(a) != face[0]:
        raise AssertionError("facet does not start at the coset of u")
    chain = [a]
    for cid in face[1:]:
        z = unique_lift(chain[-1], cid, Q)
        if z is None or not p_cover(chain[-1], z, Q):
            raise AssertionError(f"lift of {list(face)} breaks at coset {cid}")
        chain.append(z)
    if chain[-1] != b:
        raise AssertionError(f"lift of {list(face)} ends at {chain[-1]!r}, not {b!r}")
    return tuple(chain)


@dataclass
class RidgeTable:
    ridges: dict[Face, tuple[Face, ...]]
    thin: bool
    witness: Face | None = None

    def tag(self, ridge: Face) -> str:
        k = len(self.ridges[ridge])
        return "exterior" if k == 1 else "interior" if k == 2 else "singular"

    def exterior(self) -> list[Face]:
        return sorted(r for r, fs in self.ridges.items() if len(fs) == 1)

    def to_json(self) -> list[dict]:
        return [
            {"ridge": list(r), "facets": [list(f) for f in fs], "tag": self.tag(r)}
            for r, fs in sorted(self.ridges.items())
        ]


def ridge_classification(K: SimplicialComplex) -> RidgeTable:
    """
    Map each codimension-one face to the facets containing it.

    >>> t = ridge_classification(SimplicialComplex([[0, 1, 2], [1, 2, 3]]))
    >>> t.thin, t.tag((1, 2)), t.tag((0, 1))
    (True, 'interior', 'exterior')
    """
    if not K.is_pure():
        raise ComplexError("ridge classification needs a pure complex")
    table: dict[Face, list[Face]] = {}
    for f in K.facets:
        for i in range(len(f)):
            table.setdefault(f[:i] + f[i + 1 :], []).append(f)
    ridges = {r: tuple(fs) for r, fs in sorted(table.items())}
    bad = next((r for r, fs in ridges.items() if len(fs) > 2), None)
    return RidgeTable(ridges=ridges, thin=bad is None, witness=bad)


def verify_shelling(K: SimplicialComplex, order: Sequence[Iterable[int]]) -> tuple[bool, dict | None]:
    """
    Check that each facet meets the union of its predecessors in a pure
    complex of codimension one.  Positions in failures are 1-based.

    >>> verify_shelling(SimplicialComplex([[0, 1, 2], [2, 3, 4]]), [[0, 1, 2], [2, 3, 4]])
    (False, {'position': 2, 'facet': [2, 3, 4], 'face': [2]})
    """
    if not K.is_pure():
        raise ComplexError("shelling verification needs a pure complex")
    seq = [tuple(sorted(set(f))) for f in order]
    if sorted(seq) != sorted(K.facets):
        return False, {"reason": "order is not a permutation of the facets"}
    for i, f in enumerate(seq):
        sf = set(f)
        meets = [sf & set(g) for g in seq[:i]]
        for m in meets:
            if len(m) == len(f) - 1:
                continue
            if not any(m <= other and len(other) == len(f) - 1 for other in meets):
                return False, {"position": i + 1, "facet": list(f), "face": sorted(m)}
    return True, None


@dataclass
class ShellingCertificate:
    """A facet order together with the data needed to re-check it."""

    complex: SimplicialComplex
    facets: tuple[Face, ...]
    witnesses: list[list[tuple[Face, int]]] = field(default_factory=list)
    ridges: RidgeTable | None = None

    def verify(self) -> tuple[bool, dict | None]:
        ok, why = verify_shelling(self.complex, self.facets)
        if not ok:
            return ok, why
        for i, wit in enumerate(self.witnesses):
            f = set(self.facets[i])
            for ridge, j in wit:
                if not (j < i and set(ridge) <= f and set(ridge) <= set(self.facets[j]) and len(ridge) == len(f) - 1):
                    return False, {"position": i + 1, "bad-witness": list(ridge)}
        fresh = ridge_classification(self.complex)
        if self.ridges is not None and fresh.ridges != self.ridges.ridges:
            return False, {"reason": "ridge table mismatch"}
        return True, None

    def to_json(self) -> dict:
        return {
            "facet-order": [list(f) for f in self.facets],
            "witnesses": [[{"ridge": list(r), "earlier": j} for r, j in wit] for wit in self.witnesses],
            "ridges": self.ridges.to_json() if self.ridges is not None else None,
        }


def certificate_for(K: SimplicialComplex, ordered: Sequence[Iterable[int]]) -> ShellingCertificate:
    """A certificate for an arbitrary facet order; it verifies only if the order is a shelling."""
    ordered = [tuple(sorted(set(f))) for f in ordered]
    witnesses = []
    for i, f in enumerate(ordered):
        wit = []
        for k in range(len(f)):
            ridge = f[:k] + f[k + 1 :]
            j = next((j for j in range(i) if set(ridge) <= set(ordered[j])), None)
            if j is not None:
                wit.append((ridge, j))
        witnesses.append(wit)
    return ShellingCertificate(K, tuple(ordered), witnesses, ridge_classification(K))


def shelling_order(u: Element, w: Element, Q: ParabolicQuotient, order: ReflectionOrder) -> ShellingCertificate:
    """
    Facets of the projected complex sorted lexicographically by the
    reflection sequences of their lifted chains under ``order``.
    """
    if order.placement != "last" or order.J != Q.J or order.system is not Q.system:
        raise ReflectionOrderError("shelling needs a reflection order with the parabolic reflections last")
    a, b = normalize_pair(u, w, Q)
    K = projected_complex(a, b, Q)
    lifted = sorted(((chain_sort_key(lift_facet(F, a, b, Q), order), F) for F in K.facets))
    return certificate_for(K, [F for _, F in lifted])


def lex_order_facets(u: Element, w: Element, Q: ParabolicQuotient, order: ReflectionOrder) -> list[Face]:
    """Facets sorted by the lexicographic key of their lifts under any reflection order."""
    a, b = normalize_pair(u, w, Q)
    K = projected_complex(a, b, Q)
    return [F for _, F in sorted((chain_sort_key(lift_facet(F, a, b, Q), order), F) for F in K.facets)]


def ball_certificate(K: SimplicialComplex, cert: ShellingCertificate) -> str:
    """
    ``"Ball"`` for a shellable thin complex with an exterior ridge, ``"Sphere"``
    for one without, ``"Inconclusive"`` when a hypothesis fails.

    >>> tri = SimplicialComplex([[0, 1], [1, 2], [0, 2]])
    >>> ball_certificate(tri, certificate_for(tri, [(0, 1), (0, 2), (1, 2)]))
    'Sphere'
    """
    if cert.complex != K or not K.is_pure():
        return "Inconclusive"
    ok, _ = cert.verify()
    if not ok:
        return "Inconclusive"
    table = ridge_classification(K)
    if not table.thin:
        return "Inconclusive"
    return "Ball" if table.exterior() else "Sphere"


def sr_hilbert(K: SimplicialComplex, d: int) -> int:
    """
    Number of degree-``d`` monomials supported on faces of ``K``.

    >>> sr_hilbert(SimplicialComplex([[0, 1]]), 3)
    4
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return 1
    f = K.f_vector()
    return sum(f[r] * comb(d - 1, r - 1) for r in range(1, len(f)))


def boundary_containment_check(P: QPoset, Q: ParabolicQuotient | None = None) -> tuple[bool, list[dict]]:
    """
    For every strict relation ``small < big`` in the closure order, every
    ridge of the big complex lying in the small complex must be exterior.
    """
    Q = Q or P.quotient
    complexes = [projected_complex(c.u, c.w, Q) for c in P.classes]
    tables = [ridge_classification(K) for K in complexes]
    failures = []
    for j in range(len(P)):
        for i in sorted(P.below[j]):
            if i == j:
                continue
            small = complexes[i]
            for ridge, fs in tables[j].ridges.items():
                if len(fs) != 1 and small.contains_face(ridge):
                    failures.append({"small": i, "big": j, "ridge": list(ridge)})
    return not failures, failures
