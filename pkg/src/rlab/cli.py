"""
Command-line front end.

Every subcommand writes one JSON report (sorted keys, stable across runs for a
fixed configuration) that embeds the resolved configuration.  Exit codes:
0 when every verdict passes, 1 on a verdict failure, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass, field
from typing import Sequence

from .coxeter import CoxeterSystem, Element, make_system
from .errors import RlabError
from .parabolic import ParabolicQuotient
from .pbruhat import find_model, q_poset
from .polyalg import Ideal, MonomialOrder, buchberger, bruhat_revlex, default_degree_bound, initial_ideal
from .reforder import build_reflection_order
from .simpcomplex import (
    ball_certificate,
    normalize_pair,
    projected_complex,
    ridge_classification,
    shelling_order,
)
from .typea_geom import (
    grassmannian_quotient,
    groebner_degeneration_check,
    hilbert_comparison,
    stratification_check,
)

SUBCOMMANDS = ("qposet", "complex", "shell", "ball-check", "groebner-check", "hilbert", "strata-points", "groebner", "accept")


class UsageError(Exception):
    """Bad flags or malformed input; maps to exit code 2."""


@dataclass
class RunConfig:
    command: str
    type: str = "A"
    rank: int | None = None
    parabolic: list[int] = field(default_factory=list)
    u: list[int] | None = None
    w: list[int] | None = None
    n: int | None = None
    k: int | None = None
    q: int | None = None
    d: int = 4
    characteristic: int = 32003
    degree_bound: int = 6
    refinement: str = "sum-lex"
    functional: int = 0
    ideal: str | None = None
    order: str = "bruhat-revlex"
    criteria: list[int] = field(default_factory=list)
    jobs: int = 1
    seed: int = 0
    output: str | None = None

    def to_json(self) -> dict:
        data = asdict(self)
        data.pop("output")
        return data


def parse_word(text: str, rank: int, flag: str) -> list[int]:
    """
    Space- or comma-separated 1-based generator indices; the empty string is the identity.

    >>> parse_word("2 1 3 2", 3, "--w")
    [2, 1, 3, 2]
    >>> parse_word("", 3, "--u")
    []
    """
    word = []
    for tok in text.replace(",", " ").split():
        try:
            i = int(tok)
        except ValueError:
            raise UsageError(f"{flag}: malformed token {tok!r}") from None
        if not 1 <= i <= rank:
            raise UsageError(f"{flag}: generator {tok!r} out of range 1..{rank}")
        word.append(i)
    return word


def _parse_list(text: str, flag: str) -> list[int]:
    out = []
    for tok in text.replace(",", " ").split():
        try:
            out.append(int(tok))
        except ValueError:
            raise UsageError(f"{flag}: malformed token {tok!r}") from None
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", default="A", help="Cartan type letter (A, B, C, D, G, F)")
    common.add_argument("--rank", type=int, help="rank of the Coxeter system")
    common.add_argument("--parabolic", default="", help="generators of W_P, e.g. 1,3")
    common.add_argument("--u", help="reduced word for u (space separated, empty = identity)")
    common.add_argument("--w", help="reduced word for w")
    common.add_argument("--n", type=int, help="type A: size of the flags (n = rank + 1)")
    common.add_argument("--k", type=int, help="type A: Grassmannian step")
    common.add_argument("--q", type=int, help="finite field size")
    common.add_argument("--d", type=int, default=4, help="largest degree for Hilbert functions")
    common.add_argument("--characteristic", type=int, default=32003)
    common.add_argument("--degree-bound", type=int, help="elimination degree bound (default: RLAB_DEGREE_BOUND or 6)")
    common.add_argument("--refinement", default="sum-lex", choices=["sum-lex", "sum-colex"])
    common.add_argument("--functional", type=int, default=0, choices=[0, 1], help="tie-break functional for reflection orders")
    common.add_argument("--ideal", help="JSON file with an ideal (for 'groebner')")
    common.add_argument("--order", default="bruhat-revlex", choices=["bruhat-revlex", "grevlex"])
    common.add_argument("--criteria", default="", help="acceptance criteria to run, e.g. 1,2,7 (default: all)")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--output", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="rlab", description="Projected Richardson combinatorics and algebra.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "qposet": "classes and closure order of Q(W, W_P)",
        "complex": "projected order complex of [u, w]",
        "shell": "lexicographic shelling certificate",
        "ball-check": "ball/sphere certificate",
        "groebner-check": "initial ideal versus Stanley-Reisner ideal (type A Grassmannians)",
        "hilbert": "Hilbert function versus face counts",
        "strata-points": "F_q point partition of Gr(k, n) into open strata",
        "groebner": "reduced Groebner basis of an ideal from a JSON file",
        "accept": "run the acceptance suite",
    }
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def resolve(ns: argparse.Namespace) -> RunConfig:
    """Validate flags and fill in derived values."""
    cfg = RunConfig(command=ns.command, type=ns.type.upper(), jobs=ns.jobs, seed=ns.seed, output=ns.output)
    cfg.refinement, cfg.functional, cfg.order, cfg.d = ns.refinement, ns.functional, ns.order, ns.d
    cfg.characteristic = ns.characteristic
    cfg.degree_bound = ns.degree_bound if ns.degree_bound is not None else default_degree_bound()
    cfg.ideal = ns.ideal
    cfg.criteria = _parse_list(ns.criteria, "--criteria")
    cfg.parabolic = sorted(set(_parse_list(ns.parabolic, "--parabolic")))
    cfg.q = ns.q
    if cfg.jobs < 1:
        raise UsageError("--jobs must be positive")
    if cfg.degree_bound < 1:
        raise UsageError("--degree-bound must be positive")

    geometric = cfg.command in ("groebner-check", "hilbert", "strata-points")
    if geometric:
        if ns.n is None and ns.rank is None:
            raise UsageError(f"{cfg.command} needs --n (or --rank)")
        n = ns.n if ns.n is not None else ns.rank + 1
        if cfg.type != "A":
            raise UsageError("geometric subcommands support type A only")
        if not 3 <= n <= 4:
            raise UsageError(f"--n {n}: Groebner elimination is supported for n = 3, 4")
        k = ns.k
        if k is None:
            missing = sorted(set(range(1, n)) - set(cfg.parabolic))
            if len(missing) != 1:
                raise UsageError("give --k or a Grassmannian --parabolic")
            (k,) = missing
        if not 1 <= k < n:
            raise UsageError(f"--k {k} out of range 1..{n - 1}")
        cfg.n, cfg.k, cfg.rank = n, k, n - 1
        cfg.parabolic = sorted(set(range(1, n)) - {k})
    elif cfg.command in ("qposet", "complex", "shell", "ball-check"):
        if ns.rank is None:
            if ns.n is None:
                raise UsageError(f"{cfg.command} needs --rank")
            cfg.rank = ns.n - 1
        else:
            cfg.rank = ns.rank
        if cfg.rank < 1:
            raise UsageError("--rank must be positive")
        bad = [j for j in cfg.parabolic if not 1 <= j <= cfg.rank]
        if bad:
            raise UsageError(f"--parabolic: generator {bad[0]} out of range 1..{cfg.rank}")

    if cfg.command in ("complex", "shell", "ball-check", "groebner-check", "hilbert"):
        if ns.w is None:
            raise UsageError(f"{cfg.command} needs --w")
        cfg.u = parse_word(ns.u or "", cfg.rank, "--u")
        cfg.w = parse_word(ns.w, cfg.rank, "--w")
    if cfg.command == "strata-points":
        if cfg.q is None:
            raise UsageError("strata-points needs --q")
        if cfg.q not in (2, 3, 4, 5):
            raise UsageError(f"--q {cfg.q}: supported sizes are 2, 3, 4, 5")
    if cfg.command == "groebner":
        if not cfg.ideal:
            raise UsageError("groebner needs --ideal FILE")
        cfg.n, cfg.k = ns.n, ns.k
    return cfg


def _system(cfg: RunConfig) -> CoxeterSystem:
    try:
        return make_system(cfg.type, cfg.rank)
    except RlabError as exc:
        raise UsageError(str(exc)) from None


def _element(W: CoxeterSystem, word: list[int], flag: str) -> Element:
    e = W.normal_form(word)
    if e.length != len(word):
        raise UsageError(f"{flag}: word {' '.join(map(str, word))!r} is not reduced")
    return e


def _pair(cfg: RunConfig, W: CoxeterSystem) -> tuple[Element, Element]:
    u, w = _element(W, cfg.u, "--u"), _element(W, cfg.w, "--w")
    if not W.bruhat_leq(u, w):
        raise UsageError(f"--u {' '.join(map(str, cfg.u))!r} is not below --w in Bruhat order")
    return u, w


def cmd_qposet(cfg: RunConfig) -> tuple[dict, bool]:
    W = _system(cfg)
    P = q_poset(ParabolicQuotient(W, cfg.parabolic))
    data = P.to_json()
    data["count"] = len(P)
    data["graded"] = P.is_graded()
    return data, True


def cmd_complex(cfg: RunConfig) -> tuple[dict, bool]:
    W = _system(cfg)
    Q = ParabolicQuotient(W, cfg.parabolic)
    u, w = _pair(cfg, W)
    a, b = normalize_pair(u, w, Q)
    K = projected_complex(u, w, Q)
    data = K.to_json()
    data["normalized"] = [list(a.word), list(b.word)]
    data["labels"] = {str(c): Q.label(c) for c in K.vertices}
    data["pure"] = K.is_pure()
    return data, K.is_pure()


def _certificate(cfg: RunConfig):
    W = _system(cfg)
    Q = ParabolicQuotient(W, cfg.parabolic)
    u, w = _pair(cfg, W)
    a, b = normalize_pair(u, w, Q)
    order = build_reflection_order(W, Q.J, "last", cfg.functional)
    return projected_complex(u, w, Q), shelling_order(a, b, Q, order), order


def cmd_shell(cfg: RunConfig) -> tuple[dict, bool]:
    K, cert, order = _certificate(cfg)
    ok, why = cert.verify()
    data = cert.to_json()
    data["reflection-order"] = order.to_json()
    data["valid"] = ok
    data["witness"] = why
    return data, ok


def cmd_ball_check(cfg: RunConfig) -> tuple[dict, bool]:
    K, cert, _ = _certificate(cfg)
    verdict = ball_certificate(K, cert)
    table = ridge_classification(K)
    data = {
        "complex": K.to_json(),
        "verdict": verdict,
        "thin": table.thin,
        "exterior-ridges": len(table.exterior()),
        "ridges": table.to_json(),
    }
    return data, verdict in ("Ball", "Sphere")


def _type_a_pair(cfg: RunConfig):
    W = _system(cfg)
    Q = grassmannian_quotient(cfg.n, cfg.k)
    u, w = _pair(cfg, W)
    a, b = find_model(u, w, Q)
    return Q, u, w, a, b


def cmd_groebner_check(cfg: RunConfig) -> tuple[dict, bool]:
    Q, u, w, a, b = _type_a_pair(cfg)
    rep = groebner_degeneration_check(a, b, cfg.k, cfg.n, cfg.refinement, True, cfg.degree_bound)
    rep["model"] = [list(a.word), list(b.word)]
    return rep, rep["pass"]


def cmd_hilbert(cfg: RunConfig) -> tuple[dict, bool]:
    Q, u, w, a, b = _type_a_pair(cfg)
    rep = hilbert_comparison(a, b, cfg.k, cfg.n, cfg.d)
    rep["model"] = [list(a.word), list(b.word)]
    return rep, rep["pass"]


def cmd_strata_points(cfg: RunConfig) -> tuple[dict, bool]:
    rep = stratification_check(cfg.k, cfg.n, cfg.q)
    return rep, rep["pass"]


def cmd_groebner(cfg: RunConfig) -> tuple[dict, bool]:
    try:
        with open(cfg.ideal) as fh:
            I = Ideal.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"--ideal {cfg.ideal}: {exc}") from None
    names = I.ring.names
    if cfg.order == "grevlex":
        order = MonomialOrder.grevlex(len(names), list(range(len(names)))[::-1])
    else:
        if cfg.n is None or cfg.k is None:
            raise UsageError("--order bruhat-revlex needs --n and --k")
        R, order = bruhat_revlex(grassmannian_quotient(cfg.n, cfg.k), cfg.refinement)
        if tuple(R.names) != tuple(names):
            raise UsageError(f"--ideal variables must be {list(R.names)}")
    G = buchberger(I, order, cfg.degree_bound)
    data = {
        "order": order.name,
        "basis": [repr(g) for g in G.polys],
        "initial": sorted(repr(m) for m in initial_ideal(G).gens),
        "ideal": I.to_json(),
    }
    return data, True


def cmd_accept(cfg: RunConfig) -> tuple[dict, bool]:
    from .acceptance import CRITERIA, run_all, summary_line

    ids = cfg.criteria or sorted(CRITERIA)
    bad = [i for i in ids if i not in CRITERIA]
    if bad:
        raise UsageError(f"--criteria: unknown criterion {bad[0]}")
    reports = run_all(ids, cfg.jobs)
    for r in reports:
        print(summary_line(r), file=sys.stderr)
    ok = all(r["pass"] and r["in-time"] for r in reports)
    # timings vary between runs; keep them out of the byte-stable report
    stable = [{k: v for k, v in r.items() if k not in ("seconds", "in-time")} for r in reports]
    return {"criteria": stable, "in-time": {str(r["id"]): r["in-time"] for r in reports}}, ok


COMMANDS = {
    "qposet": cmd_qposet,
    "complex": cmd_complex,
    "shell": cmd_shell,
    "ball-check": cmd_ball_check,
    "groebner-check": cmd_groebner_check,
    "hilbert": cmd_hilbert,
    "strata-points": cmd_strata_points,
    "groebner": cmd_groebner,
    "accept": cmd_accept,
}


def dispatch(argv: Sequence[str] | None = None) -> tuple[int, dict | None]:
    """Parse ``argv``, run the subcommand, return ``(exit code, report)``."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    try:
        cfg = resolve(ns)
        result, ok = COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"rlab {ns.command}: error: {exc}", file=sys.stderr)
        return 2, {"config": {"command": ns.command}, "error": str(exc), "pass": False}
    except RlabError as exc:
        report = {"config": cfg.to_json(), "error": f"{type(exc).__name__}: {exc}", "pass": False}
        _write(report, cfg.output)
        return 1, report
    report = {"config": cfg.to_json(), "result": result, "pass": bool(ok)}
    _write(report, cfg.output)
    return (0 if ok else 1), report


def _write(report: dict, path: str | None) -> None:
    text = json.dumps(report, sort_keys=True, indent=2, default=str) + "\n"
    if path:
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    code, _ = dispatch(argv)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
