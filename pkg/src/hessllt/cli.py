"""Command-line interface.

Subcommands: llt, csf, poincare, triples, decompose, transpose, enumerate,
gkm (betti | frobenius | xi), verify.  All JSON output is compact and
byte-stable for a fixed configuration; exit code 0 on success, 1 on an
identity violation, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from hessllt import gkm as gkm_mod
from hessllt import identities
from hessllt.gkm import MarginViolation, PrimeDisagreement
from hessllt.hessenberg import HessFn, enumerate_hessenberg, find_triples
from hessllt.llt import (
    Derivation,
    csf_direct,
    csf_recursive,
    llt_direct,
    llt_recursive,
    poincare,
)
from hessllt.modp import seeded_primes
from hessllt.qpoly import InexactDivision
from hessllt.symfunc import SymFunc

CACHE_ENV = "HESSLLT_CACHE_DIR"
CACHE_SCHEMA = 1


def _dump(obj):
    return json.dumps(obj, separators=(",", ":"))


class MemoCache:
    """Persistent recursion memo, one JSON file per engine and size n."""

    def __init__(self, directory, engine):
        self.directory = directory
        self.engine = engine
        self.memo = {}
        self._loaded = set()

    def path(self, n):
        return os.path.join(self.directory, f"{self.engine}_n{n}.json")

    def load(self, n):
        for size in range(1, n + 1):
            if size in self._loaded:
                continue
            self._loaded.add(size)
            path = self.path(size)
            if not os.path.exists(path):
                continue
            try:
                with open(path, encoding="utf-8") as fh:
                    data = json.load(fh)
            except (OSError, json.JSONDecodeError):
                print(f"warning: unreadable cache file {path}, ignoring", file=sys.stderr)
                continue
            if data.get("schema") != CACHE_SCHEMA or data.get("engine") != self.engine:
                print(f"warning: cache version mismatch in {path}, ignoring", file=sys.stderr)
                continue
            for key, entry in data.get("entries", {}).items():
                values = tuple(int(x) for x in key.split(","))
                self.memo[values] = (
                    SymFunc.from_json_dict(entry["value"]),
                    Derivation.from_json_dict(entry["derivation"]),
                )

    def save(self):
        os.makedirs(self.directory, exist_ok=True)
        by_n = {}
        for values, (value, deriv) in self.memo.items():
            by_n.setdefault(len(values), {})[values] = (value, deriv)
        for n, entries in by_n.items():
            path = self.path(n)
            merged = {}
            if os.path.exists(path):
                try:
                    with open(path, encoding="utf-8") as fh:
                        data = json.load(fh)
                    if (
                        data.get("schema") == CACHE_SCHEMA
                        and data.get("engine") == self.engine
                    ):
                        merged = data.get("entries", {})
                except (OSError, json.JSONDecodeError):
                    pass
            for values, (value, deriv) in sorted(entries.items()):
                merged[",".join(map(str, values))] = {
                    "value": value.to_json_dict(),
                    "derivation": deriv.to_json_dict(),
                }
            payload = {
                "schema": CACHE_SCHEMA,
                "engine": self.engine,
                "n": n,
                "entries": dict(sorted(merged.items())),
            }
            tmp = path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, separators=(",", ":"), sort_keys=True)
            os.replace(tmp, path)


def _cache_dir(args):
    if getattr(args, "no_cache", False):
        return None
    if getattr(args, "cache_dir", None):
        return args.cache_dir
    if os.environ.get(CACHE_ENV):
        return os.environ[CACHE_ENV]
    return os.path.join(os.path.expanduser("~"), ".cache", "hessllt")


def _parse_h(text):
    try:
        return HessFn.from_string(text)
    except ValueError as exc:
        raise SystemExit(f"invalid Hessenberg function {text!r}: {exc}")


def _mode(args):
    return "exact" if getattr(args, "exact", False) else "modp"


def _mode_marker(args):
    if _mode(args) == "exact":
        return {"mode": "exact"}
    seed = getattr(args, "seed", 0)
    return {
        "mode": "modp",
        "seed": seed,
        "primes": list(seeded_primes(seed)),
        "agreement": True,
    }


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_symfunc(args, engine):
    h = _parse_h(args.h)
    direct_fn = llt_direct if engine == "llt" else csf_direct
    recursive_fn = llt_recursive if engine == "llt" else csf_recursive
    if args.trace and args.method != "recursive":
        raise SystemExit("--trace requires --method recursive")
    deriv = None
    if args.method == "direct":
        value = direct_fn(h)
    else:
        cache = None
        cache_dir = _cache_dir(args)
        if cache_dir is not None:
            cache = MemoCache(cache_dir, engine)
            cache.load(h.n)
        memo = cache.memo if cache is not None else None
        value, deriv = recursive_fn(h, memo=memo)
        if cache is not None:
            cache.save()
    value = value.convert(args.basis)
    if args.json:
        if args.trace:
            print(_dump({"value": value.to_json_dict(), "derivation": deriv.to_json_dict()}))
        else:
            print(_dump(value.to_json_dict()))
    else:
        print(value)
        if args.trace:
            print(_dump(deriv.to_json_dict()))
    return 0


def _cmd_poincare(args):
    hs = [_parse_h(text) for text in args.h] if args.h else []
    if args.n:
        hs.extend(enumerate_hessenberg(args.n))
    if not hs:
        raise SystemExit("poincare requires --h or --n")
    rows = [(h, poincare(h)) for h in hs]
    if args.csv:
        print("h,poincare")
        for h, poly in rows:
            print(f"\"{','.join(map(str, h.values))}\",\"{poly}\"")
    elif args.json:
        print(_dump([
            {"h": h.to_json(), "poincare": poly.to_pairs()} for h, poly in rows
        ]))
    else:
        for h, poly in rows:
            print(f"{','.join(map(str, h.values))}: {poly}")
    return 0


def _cmd_triples(args):
    h = _parse_h(args.h)
    triples = find_triples(h, args.role, args.r)
    if args.json:
        print(_dump([
            {
                "kind": t.kind,
                "r": t.r,
                "params": list(t.params),
                "h_minus": t.h_minus.to_json(),
                "h_mid": t.h_mid.to_json(),
                "h_plus": t.h_plus.to_json(),
            }
            for t in triples
        ]))
    else:
        for t in triples:
            print(
                f"{t.kind} params={t.params} r={t.r}: "
                f"{t.h_minus.values} < {t.h_mid.values} < {t.h_plus.values}"
            )
        if not triples:
            print("no triples")
    return 0


def _cmd_decompose(args):
    h = _parse_h(args.h)
    blocks = h.decompose()
    if args.json:
        print(_dump([b.to_json() for b in blocks]))
    else:
        print(" | ".join(",".join(map(str, b.values)) for b in blocks))
    return 0


def _cmd_transpose(args):
    h = _parse_h(args.h)
    t = h.transpose()
    if args.json:
        print(_dump(t.to_json()))
    else:
        print(",".join(map(str, t.values)))
    return 0


def _cmd_enumerate(args):
    hs = enumerate_hessenberg(args.n)
    if args.json:
        print(_dump([h.to_json() for h in hs]))
    else:
        for h in hs:
            print(",".join(map(str, h.values)))
    return 0


def _cmd_gkm(args):
    h = _parse_h(args.h)
    mode = _mode(args)
    seed = args.seed
    if args.gkm_command == "betti":
        variant = "twin" if args.variant == "twin" else "hessenberg"
        hilb, betti = gkm_mod.hilbert_and_betti(h, variant, mode=mode, seed=seed)
        out = {
            "h": h.to_json(),
            "variant": variant,
            "betti": [int(c) for c in betti.coeffs],
            "hilbert": list(hilb.coeffs),
            "truncation": hilb.order,
        }
        out.update(_mode_marker(args))
        if args.csv:
            print("h,betti")
            print(f"\"{','.join(map(str, h.values))}\",\"{betti}\"")
        else:
            print(_dump(out))
        return 0
    if args.gkm_command == "frobenius":
        graded = gkm_mod.frobenius_graded(h, args.action, mode=mode, seed=seed)
        out = {"h": h.to_json(), "action": args.action}
        out.update(_mode_marker(args))
        out["frobenius"] = graded.to_json_dict()
        print(_dump(out))
        return 0
    if args.gkm_command == "xi":
        dmax = args.dmax
        if dmax is None:
            dmax = h.complex_dimension() + h.n
        results = {
            d: gkm_mod.xi_check(h, d, mode=mode, seed=seed)
            for d in range(dmax + 1)
        }
        out = {"h": h.to_json(), "dmax": dmax}
        out.update(_mode_marker(args))
        out["isomorphism"] = [
            {"d": d, "ok": ok} for d, ok in sorted(results.items())
        ]
        print(_dump(out))
        return 0 if all(results.values()) else 1
    raise SystemExit(f"unknown gkm subcommand {args.gkm_command!r}")


SUITES = ("f-recursions", "palindromicity", "laws", "plethystic", "gkm-llt", "all")


def _cmd_verify(args):
    n_max = args.n_max
    mode = _mode(args)
    jobs = args.parallel
    reports = []
    wanted = SUITES[:-1] if args.suite == "all" else (args.suite,)
    for suite in wanted:
        if suite == "f-recursions":
            for n in range(1, n_max + 1):
                reports.append(identities.verify_f_recursions(n, args.truncation))
        elif suite == "palindromicity":
            for n in range(1, n_max + 1):
                reports.append(identities.verify_k_palindromicity(n))
        elif suite == "laws":
            reports.append(identities.verify_laws(n_max, jobs=jobs))
        elif suite == "plethystic":
            reports.append(identities.verify_plethystic(n_max, jobs=jobs))
        elif suite == "gkm-llt":
            reports.append(
                identities.verify_gkm_llt(n_max, mode=mode, seed=args.seed, jobs=jobs)
            )
    ok = all(r.ok for r in reports)
    out = {
        "command": "verify",
        "suite": args.suite,
        "n_max": n_max,
        "seed": args.seed,
        "mode": mode,
        "ok": ok,
        "reports": [r.to_json_dict() for r in reports],
    }
    if args.report == "json":
        print(_dump(out))
    else:
        for r in reports:
            status = "pass" if r.ok else "FAIL"
            print(f"{status} {r.suite} ({r.checks} checks)")
        print("ok" if ok else "FAILED")
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def _add_common_symfunc(sub):
    sub.add_argument("--h", required=True, help="comma-separated values, e.g. 2,5,5,5,6,6")
    sub.add_argument("--method", choices=("direct", "recursive"), default="direct")
    sub.add_argument("--basis", choices=("m", "e", "h", "p", "s"), default="m")
    sub.add_argument("--json", action="store_true")
    sub.add_argument("--trace", action="store_true", help="emit the derivation tree (recursive only)")
    sub.add_argument("--cache-dir", default=None)
    sub.add_argument("--no-cache", action="store_true")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hessllt",
        description="Exact LLT / chromatic quasisymmetric / GKM cohomology computations for Hessenberg functions",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    for engine in ("llt", "csf"):
        sub = subs.add_parser(engine, help=f"compute {engine} of a Hessenberg function")
        _add_common_symfunc(sub)

    sub = subs.add_parser("poincare", help="Betti generating polynomial")
    sub.add_argument("--h", action="append", default=None)
    sub.add_argument("--n", type=int, default=None, help="tabulate all Hessenberg functions of size n")
    sub.add_argument("--csv", action="store_true")
    sub.add_argument("--json", action="store_true")

    sub = subs.add_parser("triples", help="modular / general-r triples")
    sub.add_argument("--h", required=True)
    sub.add_argument("--role", choices=("lower", "middle", "upper"), default="middle")
    sub.add_argument("--r", type=int, default=1)
    sub.add_argument("--json", action="store_true")

    sub = subs.add_parser("decompose", help="split at fixed points into blocks")
    sub.add_argument("--h", required=True)
    sub.add_argument("--json", action="store_true")

    sub = subs.add_parser("transpose", help="the dual Hessenberg function")
    sub.add_argument("--h", required=True)
    sub.add_argument("--json", action="store_true")

    sub = subs.add_parser("enumerate", help="all Hessenberg functions of size n")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--json", action="store_true")

    sub = subs.add_parser("gkm", help="congruence-presentation computations")
    gsubs = sub.add_subparsers(dest="gkm_command", required=True)
    gb = gsubs.add_parser("betti")
    gb.add_argument("--h", required=True)
    gb.add_argument("--variant", choices=("twin", "hess"), default="twin")
    gb.add_argument("--exact", action="store_true")
    gb.add_argument("--seed", type=int, default=0)
    gb.add_argument("--csv", action="store_true")
    gf = gsubs.add_parser("frobenius")
    gf.add_argument("--h", required=True)
    gf.add_argument("--action", choices=("dagger", "dot"), required=True)
    gf.add_argument("--exact", action="store_true")
    gf.add_argument("--seed", type=int, default=0)
    gf.add_argument("--json", action="store_true")
    gx = gsubs.add_parser("xi")
    gx.add_argument("--h", required=True)
    gx.add_argument("--dmax", type=int, default=None)
    gx.add_argument("--exact", action="store_true")
    gx.add_argument("--seed", type=int, default=0)

    sub = subs.add_parser("verify", help="run a verification suite")
    sub.add_argument("--suite", choices=SUITES, required=True)
    sub.add_argument("--n-max", type=int, required=True)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--exact", action="store_true")
    sub.add_argument("--truncation", type=int, default=8)
    sub.add_argument("--parallel", type=int, default=1)
    sub.add_argument("--report", choices=("json", "text"), default="json")

    return parser


def run(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "llt": lambda a: _cmd_symfunc(a, "llt"),
        "csf": lambda a: _cmd_symfunc(a, "csf"),
        "poincare": _cmd_poincare,
        "triples": _cmd_triples,
        "decompose": _cmd_decompose,
        "transpose": _cmd_transpose,
        "enumerate": _cmd_enumerate,
        "gkm": _cmd_gkm,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (InexactDivision, PrimeDisagreement, MarginViolation) as exc:
        print(f"identity violation: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
