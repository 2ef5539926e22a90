"""Command-line front end. Every subcommand prints exactly one JSON document.

Exit codes: 0 success, 1 domain error, 2 malformed command line. Errors are
reported as {"error": message} on stdout; logs go to stderr.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import altrep, gelfand, hadamard, liegroup, perm, schar, symrep, tableaux
from .operators import matrix_from_json, matrix_to_json

log = logging.getLogger("irreps")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---- argument parsing helpers ----

def _ints(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        return [int(x) for x in json.loads(text)]
    return [int(x) for x in text.split(",") if x.strip()]


def _fractions(text: str) -> list[Fraction]:
    text = text.strip()
    items = json.loads(text) if text.startswith("[") else text.split(",")
    return [Fraction(str(x).strip()) for x in items]


def _floats(text: str) -> list[float]:
    text = text.strip()
    if text.startswith("["):
        return [float(x) for x in json.loads(text)]
    return [float(x) for x in text.split(",") if x.strip()]


def _load_json(text: str):
    """Inline JSON, or a path to a JSON file."""
    text = text.strip()
    if text[:1] in "[{":
        return json.loads(text)
    return json.loads(Path(text).read_text())


def _complex(z) -> complex:
    if isinstance(z, (list, tuple)):
        return complex(z[0], z[1])
    return complex(z)


def _cpx_json(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _permutation(text: str) -> perm.Permutation:
    return perm.Permutation(tuple(_ints(text)))


def _tableau(shape: tableaux.YoungDiagram, inline: str | None, word: str | None) -> tableaux.StandardTableau:
    if (inline is None) == (word is None):
        raise UsageError("give a tableau either inline as JSON or by --*-word, not both")
    if inline is not None:
        t = tableaux.StandardTableau.from_json(json.loads(inline))
    else:
        t = tableaux.StandardTableau.from_word(shape, _ints(word))
    if t.shape != shape:
        raise ValueError(f"tableau {t.to_json()} does not have shape {shape.to_json()}")
    return t


def _weight(group: str, text: str) -> gelfand.GTWeight:
    entries = _fractions(text)
    if group in ("gl", "u"):
        if any(x.denominator != 1 for x in entries):
            raise ValueError("U(n) weights must be integers")
        return gelfand.GTWeight.gl(int(x) for x in entries)
    n = 2 * len(entries) + (group == "so_odd")
    return gelfand.GTWeight.so(n, entries)


# ---- enumeration cache ----

def _cached(kind: str, key, compute):
    """Memoize a JSON-serializable enumeration under $IRREP_CACHE_DIR if set."""
    root = os.environ.get("IRREP_CACHE_DIR")
    if not root:
        return compute()
    digest = hashlib.sha256(json.dumps([kind, key], sort_keys=True).encode()).hexdigest()
    path = Path(root) / f"{kind}-{digest[:24]}.json"
    if path.exists():
        log.info("cache hit %s", path)
        return json.loads(path.read_text())
    value = compute()
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(value))
    return value


def _syt_words(shape: tableaux.YoungDiagram) -> list[list[int]]:
    return _cached("syt", shape.to_json(),
                   lambda: [list(t.word) for t in tableaux.enumerate_syt(shape, cap=shape.n)])


def _pattern_rows(weight: gelfand.GTWeight) -> list:
    return _cached("gt", weight.to_json(),
                   lambda: [p.to_json() for p in gelfand.enumerate_patterns(weight)])


# ---- subcommands ----

def cmd_syt_sample(args) -> dict:
    shape = tableaux.YoungDiagram(tuple(_ints(args.shape)))
    if args.count < 0:
        raise ValueError("count must be nonnegative")
    rng = np.random.default_rng(args.seed)
    samples = [tableaux.hook_walk_sample(shape, rng).to_json() for _ in range(args.count)]
    return {"shape": shape.to_json(), "seed": args.seed, "samples": samples}


def cmd_syt_list(args) -> dict:
    shape = tableaux.YoungDiagram(tuple(_ints(args.shape)))
    words = _syt_words(shape)
    tabs = [tableaux.StandardTableau.from_word(shape, w).to_json() for w in words]
    return {"shape": shape.to_json(), "count": len(tabs), "tableaux": tabs}


def cmd_perm_stats(args) -> dict:
    p = _permutation(args.perm)
    return {"permutation": p.to_json(), "stats": perm.stats(p).to_json(),
            "cycle_type": list(perm.cycle_type(p)), "word": perm.bubblesort_decompose(p)}


def cmd_hard_instance(args) -> dict:
    p = perm.hard_instance(args.n)
    return {"permutation": p.to_json(), "stats": perm.stats(p).to_json()}


def cmd_sym_element(args) -> dict:
    shape = tableaux.YoungDiagram(tuple(_ints(args.shape)))
    p = _permutation(args.perm)
    row = _tableau(shape, args.row, args.row_word)
    col = _tableau(shape, args.col, args.col_word)
    return {"value": symrep.matrix_element(shape, p, row, col)}


def cmd_sym_char_exact(args) -> dict:
    shape = tableaux.YoungDiagram(tuple(_ints(args.shape)))
    mu = perm.validate_partition(_ints(args.mu), shape.n)
    chi = schar.exact_character_roichman(shape, mu, cap=shape.n)
    d = tableaux.syt_count(shape)
    return {"shape": shape.to_json(), "mu": list(mu), "character": chi,
            "dimension": d, "normalized": chi / d}


def cmd_sym_char_estimate(args) -> dict:
    shape = tableaux.YoungDiagram(tuple(_ints(args.shape)))
    mu = perm.validate_partition(_ints(args.mu), shape.n)
    report = schar.estimate_normalized_character(shape, mu, args.eps, args.delta, args.seed)
    return report.to_json()


def cmd_alt_element(args) -> dict:
    label = altrep.AltIrrepLabel(tableaux.YoungDiagram(tuple(_ints(args.shape))), args.branch)
    p = _permutation(args.perm)
    value = altrep.alt_matrix_element(label, p, args.row, args.col)
    return {"value": _cpx_json(value), "dimension": altrep.branch_dimension(label)}


def cmd_gt_dim(args) -> dict:
    weight = _weight(args.group, args.weight)
    return {"dimension": len(_pattern_rows(weight))}


def cmd_gt_patterns(args) -> dict:
    weight = _weight(args.group, args.weight)
    rows = _pattern_rows(weight)
    return {"weight": weight.to_json(), "count": len(rows), "patterns": rows}


def _rep_output(weight: gelfand.GTWeight, rep) -> dict:
    return {"weight": weight.to_json(), "dimension": rep.dim,
            "trace": _cpx_json(rep.trace()), "matrix": matrix_to_json(rep.entries)}


def cmd_u_rep(args) -> dict:
    weight = _weight("gl", args.weight)
    u = matrix_from_json(_load_json(args.unitary))
    return _rep_output(weight, liegroup.group_rep_u(weight, u))


def cmd_so_rep(args) -> dict:
    weight = _weight(args.group, args.weight)
    g = matrix_from_json(_load_json(args.orthogonal))
    if np.max(np.abs(g.imag)) > 1e-12:
        raise ValueError("orthogonal matrix must be real")
    return _rep_output(weight, liegroup.group_rep_so(weight, g.real))


def cmd_two_level(args) -> dict:
    u = matrix_from_json(_load_json(args.unitary))
    factors = liegroup.two_level_decompose(u)
    if args.adjacent:
        factors = [g for f in factors for g in liegroup.adjacency_reduce(f)]
    return {"n": u.shape[0], "factors": [
        {"i": f.i, "j": f.j, "block": matrix_to_json(f.block)} for f in factors]}


def cmd_weyl_char(args) -> dict:
    weight = _weight(args.group, args.weight)
    if (args.eigs is None) == (args.angles is None):
        raise UsageError("give exactly one of --eigs and --angles")
    if args.eigs is not None:
        eigs = [_complex(z) for z in _load_json(args.eigs)]
        angles = [float(np.angle(z)) for z in eigs]
    else:
        angles = _floats(args.angles)
        eigs = [complex(np.exp(1j * t)) for t in angles]
    if args.group == "u":
        chi = liegroup.weyl_character_u(weight.entries, eigs)
        dim = liegroup.weyl_dimension(weight.entries)
    else:
        chi = liegroup.weyl_character_so(weight, angles)
        dim = gelfand.gt_dimension(weight)
    return {"weight": weight.to_json(), "character": _cpx_json(chi), "dimension": dim}


def cmd_norm_profile(args) -> dict:
    weight = _weight("gl", args.weight)
    h = matrix_from_json(_load_json(args.h))
    return {"weight": weight.to_json(),
            "profile": [e.to_json() for e in liegroup.norm_profile(weight, h)]}


def cmd_hadamard_estimate(args) -> dict:
    shape = tableaux.YoungDiagram(tuple(_ints(args.shape)))
    p = _permutation(args.perm)
    t = _tableau(shape, args.row, args.row_word)
    psi = np.zeros(tableaux.syt_count(shape))
    psi[symrep.tableau_index(shape, t)] = 1.0
    plan = hadamard.ShotPlan.for_accuracy(args.eps, args.delta, args.part, args.seed)
    result = hadamard.simulate_estimate(
        lambda v: symrep.apply_permutation(shape, p, v), psi, plan, workers=args.threads)
    exact = hadamard.overlap(lambda v: symrep.apply_permutation(shape, p, v), psi)
    part = exact.real if args.part == "real" else exact.imag
    return {**result, "exact": part, "plan": plan.to_json()}


# Each subcommand and the library operation it exposes.
COMMANDS = {
    "syt-sample": (cmd_syt_sample, "tableaux.hook_walk_sample"),
    "syt-list": (cmd_syt_list, "tableaux.enumerate_syt"),
    "perm-stats": (cmd_perm_stats, "perm.stats"),
    "hard-instance": (cmd_hard_instance, "perm.hard_instance"),
    "sym-element": (cmd_sym_element, "symrep.matrix_element"),
    "sym-char-exact": (cmd_sym_char_exact, "schar.exact_character_roichman"),
    "sym-char-estimate": (cmd_sym_char_estimate, "schar.estimate_normalized_character"),
    "alt-element": (cmd_alt_element, "altrep.alt_matrix_element"),
    "gt-dim": (cmd_gt_dim, "gelfand.gt_dimension"),
    "gt-patterns": (cmd_gt_patterns, "gelfand.enumerate_patterns"),
    "u-rep": (cmd_u_rep, "liegroup.group_rep_u"),
    "so-rep": (cmd_so_rep, "liegroup.group_rep_so"),
    "two-level": (cmd_two_level, "liegroup.two_level_decompose"),
    "weyl-char": (cmd_weyl_char, ("liegroup.weyl_character_u", "liegroup.weyl_character_so")),
    "norm-profile": (cmd_norm_profile, "liegroup.norm_profile"),
    "hadamard-estimate": (cmd_hadamard_estimate, "hadamard.simulate_estimate"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="irreps", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=1,
                        help="worker count for sharded sampling (default 1)")
    parser.add_argument("-v", "--verbose", action="store_true", help="log to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=COMMANDS[name][0])
        return p

    def shape_arg(p):
        p.add_argument("--shape", required=True, help="partition, e.g. 3,2,1")

    def row_args(p, col=True):
        p.add_argument("--row", help='tableau as JSON, e.g. "[[1,2],[3]]"')
        p.add_argument("--row-word", help="tableau by row-reading word, e.g. 1,2,3")
        if col:
            p.add_argument("--col")
            p.add_argument("--col-word")

    p = add("syt-sample", "uniform standard tableaux by the hook walk")
    shape_arg(p)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int)

    p = add("syt-list", "all standard tableaux of a shape, in basis order")
    shape_arg(p)

    p = add("perm-stats", "sign, length and moved points of a permutation")
    p.add_argument("--perm", required=True)

    p = add("hard-instance", "the transposition (1 n)")
    p.add_argument("--n", type=int, required=True)

    p = add("sym-element", "matrix element of an S_n irrep")
    shape_arg(p)
    p.add_argument("--perm", required=True, help="one-based images, e.g. 2,1,3")
    row_args(p)

    p = add("sym-char-exact", "exact character by Roichman's rule")
    shape_arg(p)
    p.add_argument("--mu", required=True, help="cycle type")

    p = add("sym-char-estimate", "sampled normalized character")
    shape_arg(p)
    p.add_argument("--mu", required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--seed", type=int)

    p = add("alt-element", "matrix element of an A_n irrep")
    shape_arg(p)
    p.add_argument("--branch", required=True, choices=[b.value for b in altrep.Branch])
    p.add_argument("--perm", required=True)
    p.add_argument("--row", type=int, required=True, help="zero-based branch basis index")
    p.add_argument("--col", type=int, required=True)

    for name, text in [("gt-dim", "number of Gel'fand patterns"),
                       ("gt-patterns", "all Gel'fand patterns of a weight")]:
        p = add(name, text)
        p.add_argument("--weight", required=True)
        p.add_argument("--group", default="gl", choices=["gl", "so_odd", "so_even"])

    p = add("u-rep", "U(n) irrep of a unitary matrix")
    p.add_argument("--weight", required=True)
    p.add_argument("--unitary", required=True, help="JSON file or inline [[re,im],...] rows")

    p = add("so-rep", "SO(n) irrep of a rotation matrix")
    p.add_argument("--weight", required=True)
    p.add_argument("--group", required=True, choices=["so_odd", "so_even"])
    p.add_argument("--orthogonal", required=True)

    p = add("two-level", "two-level decomposition of a unitary")
    p.add_argument("--unitary", required=True)
    p.add_argument("--adjacent", action="store_true", help="reduce to adjacent-index factors")

    p = add("weyl-char", "character by the Weyl formula")
    p.add_argument("--group", required=True, choices=["u", "so_odd", "so_even"])
    p.add_argument("--weight", required=True)
    p.add_argument("--eigs", help="JSON list of eigenvalues ([re, im] or real); e^{i theta_r} for SO")
    p.add_argument("--angles", help="eigenphases in radians")

    p = add("norm-profile", "spectral norms of a(H_p) across positions p")
    p.add_argument("--weight", required=True)
    p.add_argument("--h", required=True, help="2x2 antihermitian matrix as JSON")

    p = add("hadamard-estimate", "Hadamard-test estimate of a diagonal S_n matrix element")
    shape_arg(p)
    p.add_argument("--perm", required=True)
    row_args(p, col=False)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--part", default="real", choices=["real", "imaginary"])
    p.add_argument("--seed", type=int)
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
        result = args.func(args)
        code = 0
    except UsageError as exc:
        result, code = {"error": str(exc)}, 2
    except (ValueError, KeyError, IndexError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        result, code = {"error": f"{type(exc).__name__}: {exc}"}, 1
    out.write(json.dumps(result, sort_keys=True) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
