"""``qroots`` command line tool.

Subcommands operate on a Cartan matrix given as JSON (``--gcm FILE``, with
``-`` meaning stdin): ``quantum`` lists the quantum roots, ``classify``
answers whether a level sequence is realized, ``roots`` enumerates positive
real roots, ``covers``/``cocovers``/``interval`` query the affine order, and
``verify`` runs the built-in check suites.

Exit codes: 0 success, 1 bad input or failed verification, 2 certification
budget exhausted, 3 operation not supported for the given element.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from typing import Optional, Sequence

from qroots import verify
from qroots.affine import Affine, AffineElement, NotSupported
from qroots.cartan import GCM
from qroots.datum import BudgetExceeded, RootDatum, doubled_datum
from qroots.quantum import (
    QuantumRootRecord,
    classify_sequence,
    construct_from_sequence,
    dynkin_sequence,
    enumerate_quantum_roots,
    is_quantum_by_length,
)
from qroots.roots import Roots


def _dump(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _read_source(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.lstrip().startswith(("{", "[")):
        return arg
    with open(arg, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_datum(args: argparse.Namespace) -> RootDatum:
    if not getattr(args, "gcm", None):
        raise ValueError("a Cartan matrix is required (--gcm FILE)")
    return doubled_datum(GCM.from_json(_read_source(args.gcm)))


def _vertex_index(gcm: GCM, item: object) -> int:
    if isinstance(item, str):
        return gcm.index(item)
    i = int(item)  # type: ignore[arg-type]
    if not 0 <= i < gcm.n:
        raise ValueError(f"vertex index {i} out of range")
    return i


def _parse_element(aff: Affine, text: str) -> AffineElement:
    obj = json.loads(text)
    if not isinstance(obj, dict) or "coweight" not in obj:
        raise ValueError('element must be {"coweight": ..., "word": [...]}')
    lam = aff.datum.parse_coweight(obj["coweight"])
    word = tuple(
        _vertex_index(aff.datum.gcm, item) for item in obj.get("word", [])
    )
    return aff.element(lam, word)


def _element_obj(aff: Affine, x: AffineElement) -> dict:
    labels = aff.datum.gcm.labels
    return {
        "coweight": {"doubled": list(x.coweight)},
        "word": [labels[i] for i in x.w.word],
        "length": x.length,
    }


def _element_tsv(aff: Affine, x: AffineElement) -> str:
    labels = aff.datum.gcm.labels
    word = " ".join(labels[i] for i in x.w.word)
    return "\t".join(
        [",".join(str(c) for c in x.coweight), word, str(x.length)]
    )


# --- quantum ---------------------------------------------------------------


def _cache_path(cache_dir: str, sha: str) -> str:
    return os.path.join(cache_dir, f"quantum-{sha[:16]}.json")


def _records_from_cache(
    datum: RootDatum, path: str, sha: str
) -> Optional[list[QuantumRootRecord]]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, ValueError):
        return None
    if not isinstance(obj, dict) or obj.get("gcm_sha256") != sha:
        return None
    gcm = datum.gcm
    roots = Roots(datum)
    recs = []
    try:
        # Entries are re-verified one by one below, but that alone would
        # accept a truncated list; the recorded count closes that hole.
        if obj["count"] != len(obj["roots"]):
            return None
        for ent in obj["roots"]:
            word = tuple(gcm.index(l) for l in ent["word"])
            beta = roots.from_expression(word)
            if list(beta.nvec) != ent["coroot"]:
                return None
            # Trust nothing beyond the words: re-verify quantumness.
            if not is_quantum_by_length(datum, beta):
                return None
            seq = dynkin_sequence(beta.nvec)
            recs.append(
                QuantumRootRecord(beta, word, seq, classify_sequence(gcm, seq))
            )
    except (KeyError, TypeError, ValueError):
        return None
    return recs


def _quantum_records(
    datum: RootDatum, cache_dir: Optional[str]
) -> list[QuantumRootRecord]:
    sha = hashlib.sha256(datum.gcm.to_json().encode()).hexdigest()
    path = _cache_path(cache_dir, sha) if cache_dir else None
    if path is not None:
        cached = _records_from_cache(datum, path, sha)
        if cached is not None:
            return cached
    recs = enumerate_quantum_roots(datum)
    if path is not None:
        labels = datum.gcm.labels
        payload = {
            "gcm_sha256": sha,
            "count": len(recs),
            "roots": [
                {
                    "coroot": list(r.root.nvec),
                    "word": [labels[i] for i in r.word],
                }
                for r in recs
            ],
        }
        os.makedirs(cache_dir, exist_ok=True)  # type: ignore[arg-type]
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_dump(payload))
    return recs


def cmd_quantum(args: argparse.Namespace) -> int:
    datum = _load_datum(args)
    labels = datum.gcm.labels
    recs = sorted(
        _quantum_records(datum, args.cache),
        key=lambda r: (sum(r.root.nvec), r.root.nvec),
    )
    for r in recs:
        seq = [[labels[i] for i in level] for level in r.sequence]
        classes = [
            {
                "kind": c.kind,
                "base": labels[c.base],
                "vertices": [labels[i] for i in c.vertices],
                "top": c.top,
            }
            for c in r.classification.components
        ]
        if args.format == "json":
            print(
                _dump(
                    {
                        "coroot": list(r.root.nvec),
                        "height": sum(r.root.nvec),
                        "sequence": seq,
                        "classes": classes,
                    }
                )
            )
        elif args.format == "tsv":
            print(
                "\t".join(
                    [
                        ",".join(str(c) for c in r.root.nvec),
                        str(sum(r.root.nvec)),
                        "|".join(" ".join(level) for level in seq),
                        ";".join(f"{c['kind']}@{c['base']}" for c in classes),
                    ]
                )
            )
        else:
            kinds = ", ".join(f"{c['kind']} at {c['base']}" for c in classes)
            print(
                f"{r.root.nvec}  height {sum(r.root.nvec)}"
                + (f"  [{kinds}]" if kinds else "")
            )
    if args.format == "pretty":
        print(f"{len(recs)} quantum roots")
    return 0


# --- classify --------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> int:
    datum = _load_datum(args)
    gcm = datum.gcm
    obj = json.loads(_read_source(args.sequence))
    if not isinstance(obj, list) or not all(isinstance(lv, list) for lv in obj):
        raise ValueError("sequence must be a JSON list of vertex-label lists")
    seq = tuple(
        tuple(sorted(_vertex_index(gcm, item) for item in level))
        for level in obj
    )
    res = classify_sequence(gcm, seq)
    classes = [
        {
            "kind": c.kind,
            "base": gcm.labels[c.base],
            "vertices": [gcm.labels[i] for i in c.vertices],
            "top": c.top,
        }
        for c in res.components
    ]
    witness = None
    if res.ok:
        rec = construct_from_sequence(datum, seq)
        witness = {"coroot": list(rec.root.nvec), "root": list(rec.root.m)}
    if args.format == "json":
        print(
            _dump(
                {
                    "ok": res.ok,
                    "failure": res.failure,
                    "classes": classes,
                    "witness": witness,
                }
            )
        )
    elif args.format == "tsv":
        print(
            "\t".join(
                [
                    "yes" if res.ok else "no",
                    res.failure or "",
                    ";".join(f"{c['kind']}@{c['base']}" for c in classes),
                    ",".join(str(x) for x in witness["coroot"]) if witness else "",
                ]
            )
        )
    else:
        if res.ok:
            kinds = ", ".join(f"{c['kind']} at {c['base']}" for c in classes)
            coroot = tuple(witness["coroot"]) if witness else ()
            print(f"yes{': ' + kinds if kinds else ''}  (coroot {coroot})")
        else:
            print(f"no: {res.failure}")
    return 0


# --- roots -----------------------------------------------------------------


def cmd_roots(args: argparse.Namespace) -> int:
    datum = _load_datum(args)
    labels = datum.gcm.labels
    for beta, word in Roots(datum).enumerate_real_roots(args.max_height):
        row = {
            "coroot": list(beta.nvec),
            "height": sum(beta.nvec),
            "root": list(beta.m),
            "word": [labels[i] for i in word],
        }
        if args.format == "json":
            print(_dump(row))
        elif args.format == "tsv":
            print(
                "\t".join(
                    [
                        ",".join(str(c) for c in beta.m),
                        ",".join(str(c) for c in beta.nvec),
                        str(sum(beta.nvec)),
                        " ".join(row["word"]),
                    ]
                )
            )
        else:
            print(f"{beta.m}  coroot {beta.nvec}  height {sum(beta.nvec)}")
    return 0


# --- affine order ----------------------------------------------------------


def cmd_covers(args: argparse.Namespace) -> int:
    return _neighbours(args, up=True)


def cmd_cocovers(args: argparse.Namespace) -> int:
    return _neighbours(args, up=False)


def _neighbours(args: argparse.Namespace, up: bool) -> int:
    datum = _load_datum(args)
    aff = Affine(datum, args.budget)
    x = _parse_element(aff, _read_source(args.element))
    ys = aff.covers(x) if up else aff.cocovers(x)
    key = "covers" if up else "cocovers"
    if args.format == "json":
        print(
            _dump(
                {
                    "element": _element_obj(aff, x),
                    key: [_element_obj(aff, y) for y in ys],
                }
            )
        )
    elif args.format == "tsv":
        for y in ys:
            print(_element_tsv(aff, y))
    else:
        arrow = "<." if up else ">."
        print(f"element {_element_tsv(aff, x)}")
        for y in ys:
            print(f"  {arrow} {_element_tsv(aff, y)}")
        print(f"{len(ys)} {key}")
    return 0


def cmd_interval(args: argparse.Namespace) -> int:
    datum = _load_datum(args)
    aff = Affine(datum, args.budget)
    x = _parse_element(aff, _read_source(args.lower))
    y = _parse_element(aff, _read_source(args.upper))
    nodes, edges = aff.interval(x, y)
    pos = {z: k for k, z in enumerate(nodes)}
    pairs = sorted((pos[a], pos[b]) for a, b in edges)
    if args.format == "json":
        print(
            _dump(
                {
                    "nodes": [_element_obj(aff, z) for z in nodes],
                    "edges": [list(p) for p in pairs],
                }
            )
        )
    elif args.format == "tsv":
        for z in nodes:
            print("node\t" + _element_tsv(aff, z))
        for a, b in pairs:
            print(f"edge\t{a}\t{b}")
    else:
        print(f"{len(nodes)} elements, {len(pairs)} cover edges")
        for z in nodes:
            print(f"  {_element_tsv(aff, z)}")
    return 0


# --- verify ----------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    datum = _load_datum(args) if args.gcm else None
    checks = verify.run_suite(args.suite, datum, args.seed, args.max_height)
    failed = 0
    for name, ok, detail in checks:
        if not ok:
            failed += 1
        if args.format == "json":
            print(_dump({"check": name, "detail": detail, "ok": ok}))
        else:
            print(f"{'PASS' if ok else 'FAIL'} {name} -- {detail}")
    if args.format != "json":
        print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


# --- parser ----------------------------------------------------------------


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qroots",
        description="Quantum roots and the affine order of a Kac-Moody root datum.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def common(p: argparse.ArgumentParser, gcm_required: bool = True) -> None:
        p.add_argument(
            "--gcm",
            metavar="FILE",
            required=gcm_required,
            help='Cartan matrix JSON ({"matrix": [...], "labels": [...]}); '
            "- reads stdin",
        )
        p.add_argument(
            "--format",
            choices=["json", "tsv", "pretty"],
            default="json",
            help="output format (default json)",
        )
        p.add_argument(
            "--budget",
            type=_positive_int,
            metavar="N",
            help="step budget for dominance certification",
        )

    p = sub.add_parser("quantum", help="list the quantum roots")
    common(p)
    p.add_argument(
        "--cache",
        metavar="DIR",
        help="directory for cached expression words (re-verified on load)",
    )
    p.set_defaults(func=cmd_quantum)

    p = sub.add_parser(
        "classify", help="test whether a level sequence is realized"
    )
    common(p)
    p.add_argument(
        "sequence",
        nargs="?",
        default="-",
        help='JSON list of levels, e.g. \'[["0","1"],["1"]]\'; - reads stdin',
    )
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("roots", help="enumerate positive real roots")
    common(p)
    p.add_argument(
        "--max-height",
        type=int,
        required=True,
        metavar="H",
        help="largest coroot height to enumerate",
    )
    p.set_defaults(func=cmd_roots)

    for name, fn, extra in [
        ("covers", cmd_covers, "elements covering ELEMENT"),
        ("cocovers", cmd_cocovers, "elements covered by ELEMENT"),
    ]:
        p = sub.add_parser(name, help=extra)
        common(p)
        p.add_argument(
            "element",
            nargs="?",
            default="-",
            help='{"coweight": {"pairings": [...]}, "word": [...]}; - reads stdin',
        )
        p.set_defaults(func=fn)

    p = sub.add_parser("interval", help="all elements between two given ones")
    common(p)
    p.add_argument("lower", help="element JSON or file")
    p.add_argument("upper", help="element JSON or file")
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("verify", help="run a built-in check suite")
    common(p, gcm_required=False)
    p.set_defaults(format="pretty")
    p.add_argument(
        "suite",
        choices=sorted(verify.SUITES) + ["all"],
        help="which checks to run",
    )
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.add_argument(
        "--max-height",
        type=int,
        default=10,
        metavar="H",
        help="height bound for the grading sweep",
    )
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else 1
    if not getattr(args, "func", None):
        parser.print_help()
        return 1
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NotSupported as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
