"""groupoidal command line.

    groupoidal analyze --builtin inverse_symmetric:2
    groupoidal reps --builtin inverse_symmetric:3 --field q --out results/
    groupoidal run --builtin chain:3 --compute analyze,cosets,groupoid
    groupoidal export-dot --input s.json --graph groupoid

Reports are canonical JSON on stdout (and in --out).  Results are cached
per (input hash, command, parameters) under $GROUPOIDAL_CACHE_DIR.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import __version__
from .actions import action_graph, action_to_json, is_fundamental, is_universal, point_label
from .core import green_data, schutzenberger_action, sigma_quotient
from .cosets import DEFAULT_MAX_COSETS, build_KS, build_LS
from .dot import export_dot
from .errors import CapExceededError, UnsupportedFieldError, ValidationError
from .families import builtin
from .fields import field_name, parse_field
from .groupoid import connected_components, local_group, paterson_groupoid
from .order import enumerate_closed_inverse_subsemigroups, enumerate_filters
from .reps import DEFAULT_MAX_DIM, VERIFICATION_PRIMES, certify_simple, irreducible_representations, is_simple_module
from .serialize import atomic_write, content_hash, dumps, load_semigroup, semigroup_to_json

COMMANDS = ("analyze", "cosets", "groupoid", "actions", "reps")

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_CAP, EXIT_FIELD = 0, 2, 3, 4, 5


@dataclass
class JobSpec:
    source: str
    computations: tuple
    field: str = "q"
    max_cosets: int = DEFAULT_MAX_COSETS
    max_dim: int = DEFAULT_MAX_DIM
    out: str = None
    cache: bool = True

    def __post_init__(self):
        if self.max_cosets <= 0 or self.max_dim <= 0:
            raise ValidationError("caps must be positive")
        parse_field(self.field)
        unknown = set(self.computations) - set(COMMANDS)
        if unknown:
            raise ValidationError(f"unknown computations {sorted(unknown)}")


def ingest(source):
    """``builtin:NAME:ARG`` or a file path."""
    if source.startswith("builtin:"):
        return builtin(source[len("builtin:"):])
    return load_semigroup(source)


def _labels(S, elems):
    return [S.label(s) for s in sorted(elems)]


def analyze_report(S, job):
    gd = green_data(S)
    Q, _ = sigma_quotient(S)
    return {
        "name": S.name,
        "size": len(S),
        "idempotents": len(S.idempotents),
        "idempotent_labels": _labels(S, S.idempotents),
        "zero": None if S.zero is None else S.label(S.zero),
        "green": {rel: len(getattr(gd, rel)) for rel in ("L", "R", "H", "D", "J")},
        "d_classes": [_labels(S, c) for c in gd.D],
        "filters": len(enumerate_filters(S)),
        "maximal_group_image_order": Q.order,
    }


def cosets_report(S, job):
    family = enumerate_closed_inverse_subsemigroups(S, cap=job.max_cosets)
    K = build_KS(S, max_cosets=job.max_cosets)
    L = build_LS(S)
    return {
        "closed_inverse_subsemigroups": [_labels(S, H) for H in family],
        "K_size": len(K),
        "L_size": len(L),
        "L_elements": [L.label(i) for i in range(len(L))],
        "iota_certificate": L.certificate,
    }


def groupoid_report(S, job):
    G = paterson_groupoid(S)
    comps = connected_components(G)
    out = G.to_json()
    out["components"] = [[G.objects[x] for x in sorted(c)] for c in comps]
    out["local_group_orders"] = {G.objects[x]: local_group(G, x).order for x in range(len(G.objects))}
    out["iso_certificate"] = G.iso_certificate
    return out


def actions_report(S, job):
    gd = green_data(S)
    out = []
    for cls in gd.D:
        e = min(x for x in cls if S.is_idempotent(x))
        X = schutzenberger_action(S, e)
        entry = action_to_json(X)
        entry["idempotent"] = S.label(e)
        entry["stabilizer"] = _labels(S, X.stabilizer())
        entry["universal"] = is_universal(X)
        entry["fundamental"] = is_fundamental(X)
        out.append(entry)
    return {"schutzenberger_actions": out}


def _verification_primes(F, reps):
    if F.characteristic:
        return (F.p,)
    orders = {M.info.get("group_order", 1) for M in reps}
    return tuple(p for p in VERIFICATION_PRIMES if all(o % p for o in orders))


def reps_report(S, job):
    F = parse_field(job.field)
    irr = irreducible_representations(S, F, max_dim=job.max_dim)
    primes = _verification_primes(F, irr)
    group_orders = {M.info["group_order"] for M in irr}
    split = sum(M.dim**2 for M in irr) == len(S)
    out = []
    for M in irr:
        entry = M.to_json()
        entry["idempotent"] = M.info["idempotent"]
        entry["group_rep"] = M.info["group_rep"]
        if F.characteristic:
            entry["simple"] = {str(F.p): is_simple_module(M)[0]}
        else:
            entry["simple"] = {str(p): ok for p, ok in certify_simple(M, primes).items()}
        out.append(entry)
    return {
        "field": field_name(F),
        "count": len(irr),
        "dims": [M.dim for M in irr],
        "sum_of_squares": sum(M.dim**2 for M in irr),
        "complete": split and all(F.characteristic == 0 or o % F.characteristic for o in group_orders),
        "irreducibles": out,
    }


REPORTS = {
    "analyze": analyze_report,
    "cosets": cosets_report,
    "groupoid": groupoid_report,
    "actions": actions_report,
    "reps": reps_report,
}


def _cache_dir():
    return os.environ.get("GROUPOIDAL_CACHE_DIR") or os.path.join(os.path.expanduser("~"), ".cache", "groupoidal")


def _job_params(job, command):
    keys = {"analyze": (), "cosets": ("max_cosets",), "groupoid": (), "actions": (), "reps": ("field", "max_dim")}
    return {k: getattr(job, k) for k in keys[command]}


def compute(S, job, command):
    """Report text for one command, served from the cache when possible."""
    key = content_hash(dumps(semigroup_to_json(S)), command, dumps(_job_params(job, command)), __version__)
    path = os.path.join(_cache_dir(), f"{key}-{command}.json")
    if job.cache and os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    text = dumps(REPORTS[command](S, job))
    if job.cache:
        atomic_write(path, text)
    return text


def dot_outputs(S, graph):
    """{filename: DOT text} for the Paterson groupoid or the
    Schutzenberger action graphs."""
    if graph == "groupoid":
        return {"groupoid.dot": export_dot(paterson_groupoid(S))}
    out = {}
    for cls in green_data(S).D:
        e = min(x for x in cls if S.is_idempotent(x))
        G = action_graph(schutzenberger_action(S, e))
        G.name = f"action_{point_label(G.action, G.action.base)}"
        out[f"action_{e}.dot"] = export_dot(G)
    return out


def run(job):
    """Run every requested computation; returns {filename: text}."""
    S = ingest(job.source)
    files = {}
    for command in job.computations:
        files[f"{command}.json"] = compute(S, job, command)
        if command in ("groupoid", "actions"):
            files.update(dot_outputs(S, command))
    if job.out:
        for name, text in sorted(files.items()):
            atomic_write(os.path.join(job.out, name), text)
    return files


def _error(kind, exc, code):
    payload = {"error": kind, "message": str(exc)}
    witness = getattr(exc, "witness", None)
    if witness is not None:
        payload["witness"] = list(witness)
    cap = getattr(exc, "cap", None)
    if cap is not None:
        payload["cap"] = cap
    sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")
    return code


def build_parser():
    p = argparse.ArgumentParser(prog="groupoidal", description="Finite inverse semigroup computations.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS + ("run", "export-dot"):
        c = sub.add_parser(name)
        src = c.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", help="semigroup JSON file (table schema or generator list)")
        src.add_argument("--builtin", help="NAME:ARG, e.g. inverse_symmetric:3, chain:4, brandt:C2,3, group:S3")
        c.add_argument("--field", default="q", help="q or gf:p")
        c.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
        c.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)
        c.add_argument("--out", help="directory for report files")
        c.add_argument("--no-cache", action="store_true")
        if name == "run":
            c.add_argument("--compute", default=",".join(COMMANDS), help="comma-separated computations")
        if name == "export-dot":
            c.add_argument("--graph", default="groupoid", help="groupoid or actions")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    source = f"builtin:{args.builtin}" if args.builtin else args.input
    try:
        if args.command == "export-dot":
            if args.graph not in ("groupoid", "actions"):
                raise ValidationError(f"unknown graph {args.graph!r}; use groupoid or actions")
            S = ingest(source)
            dots = dot_outputs(S, args.graph)
            if args.out:
                for name, text in sorted(dots.items()):
                    atomic_write(os.path.join(args.out, name), text)
            sys.stdout.write("".join(text for _, text in sorted(dots.items())))
            return EXIT_OK
        computations = tuple(c.strip() for c in args.compute.split(",")) if args.command == "run" else (args.command,)
        job = JobSpec(source, computations, args.field, args.max_cosets, args.max_dim, args.out, not args.no_cache)
        files = run(job)
        if args.command == "run":
            sys.stdout.write(dumps({name: json.loads(text) for name, text in files.items() if name.endswith(".json")}))
        else:
            sys.stdout.write(files[f"{args.command}.json"])
        return EXIT_OK
    except ValidationError as exc:
        return _error("validation", exc, EXIT_VALIDATION)
    except CapExceededError as exc:
        return _error("cap_exceeded", exc, EXIT_CAP)
    except UnsupportedFieldError as exc:
        return _error("unsupported_field", exc, EXIT_FIELD)
    except OSError as exc:
        return _error("io", exc, EXIT_USAGE)


if __name__ == "__main__":
    sys.exit(main())
