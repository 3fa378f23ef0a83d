"""Command-line front end: catalog listing, weight dumps, search, verification, cache.

Configuration precedence: command-line flags > ``HG_*`` environment variables >
JSON config file (``--config`` or ``HG_CONFIG``) > built-in defaults.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource ceiling.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .classify import SearchOptions, search_principal
from .golden import verify_paper
from .hodge import HalfInt, ModuleSpec, Pairing
from .rootsys import DEFAULT_RANK_CEILING, ConfigurationError, RootSystem, build_root_system, parse_lie_type
from .weightsys import (DEFAULT_DIM_CEILING, DEFAULT_SYM_DEGREE_CEILING, ResourceError, mf_catalog,
                        weight_system, weyl_dim)
from .wscache import WeightCache, dumps_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
FORMATS = ("text", "json", "tsv")


@dataclass(frozen=True)
class CliConfig:
    rank_ceiling: int = DEFAULT_RANK_CEILING
    dim_ceiling: int = DEFAULT_DIM_CEILING
    sym_degree_ceiling: int = DEFAULT_SYM_DEGREE_CEILING
    output_format: str = "text"
    cache_dir: str | None = None
    threads: int = 1

    def search_options(self, **kw) -> SearchOptions:
        return SearchOptions(dim_ceiling=self.dim_ceiling, sym_degree_ceiling=self.sym_degree_ceiling,
                             threads=self.threads, **kw)


_KEYS = {  # config key -> (env var, parser)
    "rank_ceiling": ("HG_RANK_CEILING", int),
    "dim_ceiling": ("HG_DIM_CEILING", int),
    "sym_degree_ceiling": ("HG_SYM_DEGREE_CEILING", int),
    "output_format": ("HG_FORMAT", str),
    "cache_dir": ("HG_CACHE_DIR", str),
    "threads": ("HG_THREADS", str),
}


def _threads(v) -> int:
    if isinstance(v, str) and v.strip().lower() == "auto":
        return os.cpu_count() or 1
    return int(v)


def resolve_config(flags: dict, env: dict | None = None) -> CliConfig:
    env = os.environ if env is None else env
    merged: dict = {}
    path = flags.get("config") or env.get("HG_CONFIG")
    if path:
        try:
            with open(path) as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigurationError(f"cannot read config file {path}: {e}") from None
        unknown = set(data) - set(_KEYS)
        if unknown:
            raise ConfigurationError(f"unknown config keys: {', '.join(sorted(unknown))}")
        merged.update(data)
    for key, (var, _) in _KEYS.items():
        if var in env and env[var] != "":
            merged[key] = env[var]
    for key in _KEYS:
        if flags.get(key) is not None:
            merged[key] = flags[key]
    try:
        for key, (_, conv) in _KEYS.items():
            if key in merged and key not in ("threads", "cache_dir", "output_format"):
                merged[key] = conv(merged[key])
        if "threads" in merged:
            merged["threads"] = _threads(merged["threads"])
    except ValueError as e:
        raise ConfigurationError(f"bad configuration value: {e}") from None
    cfg = CliConfig(**merged)
    for k in ("rank_ceiling", "dim_ceiling", "sym_degree_ceiling", "threads"):
        if getattr(cfg, k) < 1:
            raise ConfigurationError(f"{k} must be positive")
    if cfg.output_format not in FORMATS:
        raise ConfigurationError(f"output format must be one of {', '.join(FORMATS)}")
    return cfg


# --------------------------------------------------------------------------
# highest-weight selection


def parse_dynkin(text: str, rank: int) -> tuple[int, ...]:
    parts = [p for p in text.split(",")]
    if parts and parts[-1].strip() == "":
        parts = parts[:-1]  # allow a trailing comma, e.g. "3,"
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError:
        raise ConfigurationError(f"cannot parse Dynkin labels {text!r}") from None
    if len(vals) != rank:
        raise ConfigurationError(f"expected {rank} Dynkin labels, got {len(vals)}")
    if any(v < 0 for v in vals):
        raise ConfigurationError(f"highest weight {vals} is not dominant")
    return vals


def resolve_mu(rs: RootSystem, text: str) -> list[tuple[int, ...]]:
    """Dynkin labels or an alias: standard, spin, spin+, spin-, sym:<a>, sym*:<a>, wedge:<k>."""
    t = rs.lie_type
    r = t.rank
    fam = t.family

    def unit(k, a=1):
        if not 1 <= k <= r:
            raise ConfigurationError(f"index {k} out of range 1..{r}")
        return tuple(a if i == k - 1 else 0 for i in range(r))

    name = text.strip().lower()
    if name == "standard":
        if fam in "ABCDG":
            return [unit(1)]
        raise ConfigurationError(f"{t} has no standard module alias")
    if name in ("spin", "spin+", "spin-"):
        if fam == "B" and name != "spin-":
            return [unit(r)]
        if fam == "D":
            return {"spin": [unit(r - 1), unit(r)], "spin+": [unit(r)], "spin-": [unit(r - 1)]}[name]
        raise ConfigurationError(f"alias {text!r} is not defined for {t}")
    for prefix, k_of in (("sym*:", lambda a: r), ("sym:", lambda a: 1), ("wedge:", None)):
        if name.startswith(prefix):
            if fam != "A" and prefix != "wedge:":
                raise ConfigurationError(f"alias {text!r} is only defined for type A")
            try:
                a = int(name[len(prefix):])
            except ValueError:
                raise ConfigurationError(f"bad alias {text!r}") from None
            if a < 1:
                raise ConfigurationError(f"bad alias {text!r}")
            return [unit(a)] if k_of is None else [unit(k_of(a), a)]
    return [parse_dynkin(text, r)]


# --------------------------------------------------------------------------
# rendering


def half_text(h: HalfInt) -> str:
    return str(h)


def half_json(h: HalfInt) -> dict:
    return {"twice": h.twice}


def _tup(v) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _dyn(x) -> list[int]:
    return list(getattr(x, "dynkin", x))


def _emit(text: str):
    sys.stdout.write(text)


def cmd_list_mf(args, cfg: CliConfig) -> int:
    t = parse_lie_type(args.family, args.rank)
    rs = build_root_system(t, cfg.rank_ceiling)
    rows = []
    for e in mf_catalog(t, cfg.sym_degree_ceiling):
        rows.append({"label": e.description, "mu": list(e.dynkin),
                     "dim": weyl_dim(rs, e.highest_weight), "self_dual": e.self_dual})
    if cfg.output_format == "json":
        _emit(json.dumps({"type": str(t), "entries": rows}, sort_keys=True, indent=2) + "\n")
    elif cfg.output_format == "tsv":
        _emit("label\tmu\tdim\tself_dual\n" + "".join(
            f"{r['label']}\t{','.join(map(str, r['mu']))}\t{r['dim']}\t{str(r['self_dual']).lower()}\n"
            for r in rows))
    else:
        lines = [f"{t}: {len(rows)} weight multiplicity-free module(s)"]
        lines += [f"  {r['label']:<12} mu={_tup(r['mu'])}  dim={r['dim']}  "
                  f"{'self-dual' if r['self_dual'] else 'not self-dual'}" for r in rows]
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_weights(args, cfg: CliConfig) -> int:
    t = parse_lie_type(args.family, args.rank)
    rs = build_root_system(t, cfg.rank_ceiling)
    mus = resolve_mu(rs, args.mu)
    if len(mus) != 1:
        raise ConfigurationError(f"alias {args.mu!r} names {len(mus)} modules; pick one")
    mu = rs.weight(mus[0])
    if cfg.cache_dir:
        ws = WeightCache(cfg.cache_dir).get(rs, mu, cfg.dim_ceiling)
    else:
        ws = weight_system(rs, mu, cfg.dim_ceiling)
    if cfg.output_format == "json":
        _emit(dumps_json(ws))
        return EXIT_OK
    ws_sorted = sorted(ws.entries, key=lambda w: (sum(ws.lowering(w)), ws.lowering(w)))
    if cfg.output_format == "tsv":
        _emit("lowering\tdynkin\tmult\n" + "".join(
            f"{','.join(map(str, ws.lowering(w)))}\t{','.join(map(str, w.dynkin))}\t{ws.entries[w]}\n"
            for w in ws_sorted))
        return EXIT_OK
    lines = [f"{t} mu={mu} dim={ws.dim} weights={len(ws)}"]
    for w in ws_sorted:
        low = ws.lowering(w)
        low_s = "(" + ("".join(map(str, low)) if all(x < 10 for x in low) else ",".join(map(str, low))) + ")"
        lines.append(f"  {low_s}  dynkin={w}  mult={ws.entries[w]}")
    _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_search(args, cfg: CliConfig) -> int:
    t = parse_lie_type(args.family, args.rank)
    rs = build_root_system(t, cfg.rank_ceiling)
    selection = resolve_mu(rs, args.mu) if args.mu else None
    if args.pairing != "auto" and selection:
        want = Pairing.SELF_DUAL_SINGLE if args.pairing == "self-dual" else Pairing.COMPLEX_PAIR
        for mu in selection:
            ModuleSpec(rs, rs.weight(mu), want)  # validates the requested pairing
    opts = cfg.search_options(dedupe=args.dedupe, use_filters=not args.no_filters,
                              require_structure=not args.pattern_only)
    res = search_principal(t, selection, opts, rank_ceiling=cfg.rank_ceiling)
    sols = []
    for s in res.solutions:
        spec = ModuleSpec(rs, rs.weight(s.dynkin), s.pairing)
        sols.append({"type": str(s.lie_type), "mu": list(s.dynkin), "n": list(s.n),
                     "pairing": s.pairing.value, "structure": s.structure.value, "m": spec.target_m})
    filtered = [{"mu": _dyn(x), "lemma": f.lemma, "detail": f.detail} for x, f in res.filtered]
    skipped = [{"mu": _dyn(x), "reason": why} for x, why in res.skipped]
    if cfg.output_format == "json":
        for s in sols:
            s["m"] = half_json(s["m"])
        _emit(json.dumps({"type": str(t), "solutions": sols, "filtered": filtered, "skipped": skipped},
                         sort_keys=True, indent=2) + "\n")
    elif cfg.output_format == "tsv":
        _emit("type\tmu\tn\tpairing\tstructure\tm\n" + "".join(
            f"{s['type']}\t{','.join(map(str, s['mu']))}\t{','.join(map(str, s['n']))}\t"
            f"{s['pairing']}\t{s['structure']}\t{half_text(s['m'])}\n" for s in sols))
    else:
        lines = [f"{t}: {len(sols)} solution(s)"]
        lines += [f"  mu={_tup(s['mu'])}  n={_tup(s['n'])}  {s['pairing']}  {s['structure']}  "
                  f"m={half_text(s['m'])}" for s in sols]
        if len(filtered) <= 8:
            lines += [f"  filtered mu={_tup(f['mu'])}: {f['lemma']} {f['detail']}".rstrip() for f in filtered]
        else:
            counts: dict[str, int] = {}
            for f in filtered:
                counts[f["lemma"]] = counts.get(f["lemma"], 0) + 1
            lines += [f"  filtered {c} module(s) by {lem} (use --format json for details)"
                      for lem, c in sorted(counts.items())]
        lines += [f"  skipped mu={_tup(k['mu'])}: {k['reason']}" for k in skipped]
        _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args, cfg: CliConfig) -> int:
    scope = args.scope or ["all"]
    rep = verify_paper(scope, cfg.search_options(), rank_ceiling=cfg.rank_ceiling)
    if cfg.output_format == "json":
        _emit(rep.dumps() + "\n")
    elif cfg.output_format == "tsv":
        _emit("id\tstatus\tfound\tmissing\textra\n" + "".join(
            f"{t.id}\t{t.status}\t{len(t.found)}\t{len(t.missing)}\t{len(t.extra)}\n" for t in rep.tables))
    else:
        _emit(rep.render_text())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_cache(args, cfg: CliConfig) -> int:
    if not cfg.cache_dir:
        raise ConfigurationError("no cache directory configured (use --cache-dir or HG_CACHE_DIR)")
    cache = WeightCache(cfg.cache_dir)
    if args.action == "clear":
        n = cache.clear()
        out = {"cache_dir": cfg.cache_dir, "removed": n}
        _emit(json.dumps(out, sort_keys=True) + "\n" if cfg.output_format == "json"
              else f"removed {n} cached weight system(s) from {cfg.cache_dir}\n")
        return EXIT_OK
    ents = cache.entries()
    if cfg.output_format == "json":
        _emit(json.dumps({"cache_dir": cfg.cache_dir,
                          "entries": [{"file": f, "bytes": b} for f, b in ents]}, sort_keys=True) + "\n")
    else:
        _emit(f"{cfg.cache_dir}: {len(ents)} cached weight system(s)\n"
              + "".join(f"  {f}\t{b}\n" for f, b in ents))
    return EXIT_OK


# --------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("configuration")
    g.add_argument("--config", help="JSON config file")
    g.add_argument("--format", dest="output_format", choices=FORMATS)
    g.add_argument("--rank-ceiling", type=int)
    g.add_argument("--dim-ceiling", type=int)
    g.add_argument("--sym-degree-ceiling", type=int)
    g.add_argument("--cache-dir")
    g.add_argument("--threads", help="worker processes, or 'auto'")

    p = argparse.ArgumentParser(prog="principal-hodge", parents=[common],
                                description="Weight multiplicity-free modules and principal Hodge gradings.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("list-mf", parents=[common], help="list the weight multiplicity-free catalog")
    s.add_argument("family")
    s.add_argument("rank", type=int)
    s.set_defaults(func=cmd_list_mf)

    s = sub.add_parser("weights", parents=[common], help="dump a weight system")
    s.add_argument("family")
    s.add_argument("rank", type=int)
    s.add_argument("--mu", required=True, help="Dynkin labels (e.g. 0,0,1) or an alias")
    s.set_defaults(func=cmd_weights)

    s = sub.add_parser("search", parents=[common], help="search principal grading elements")
    s.add_argument("family")
    s.add_argument("rank", type=int)
    s.add_argument("--mu", help="Dynkin labels or alias; default: whole catalog")
    s.add_argument("--pairing", choices=("auto", "self-dual", "complex"), default="auto",
                   help="assert the pairing of the selected module")
    s.add_argument("--dedupe", action="store_true", help="drop diagram-automorphism images")
    s.add_argument("--no-filters", action="store_true", help="disable the type A necessary conditions")
    s.add_argument("--pattern-only", action="store_true",
                   help="accept quaternionic self-dual modules with the principal eigenvalue pattern")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify", parents=[common], help="recompute the embedded classification tables")
    s.add_argument("--scope", action="append", help="table id or prefix (repeatable); default all")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("cache", parents=[common], help="inspect or clear the weight-system cache")
    s.add_argument("action", choices=("inspect", "clear"))
    s.set_defaults(func=cmd_cache)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    flags = {k: getattr(args, k, None) for k in ("config", *_KEYS)}
    try:
        cfg = resolve_config(flags)
        return args.func(args, cfg)
    except ResourceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConfigurationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
