"""Command line front end: ``takahasi <area> <command> ...``.

Human-readable output by default, ``--json`` for machine output.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from . import clifford, experiments, groups, numeric, presentations, rees, rewriting, stallings
from .words import Alphabet


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------
# parsing helpers


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _tuples(text: str) -> list[tuple]:
    """``"0,1,0; 1,0,1"`` → [(0,1,0), (1,0,1)]."""
    return [tuple(_ints(part)) for part in text.split(";") if part.strip()]


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _alphabet(rank: int) -> Alphabet:
    return stallings.default_alphabet(rank)


def _generators(text: str, alpha: Alphabet) -> list[tuple]:
    return [alpha.parse(w) for w in text.split(",") if w.strip()]


def _group(args):
    if args.group_file:
        return groups.FiniteGroup.from_dict(_read_json(args.group_file))
    return groups.by_name(args.group)


# ---------------------------------------------------------------------
# output


def _emit(args, data: dict, lines: list[str]):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True, default=_jsonable))
    else:
        print("\n".join(lines))


def _jsonable(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x, key=repr)
    if hasattr(x, "tolist"):
        return x.tolist()
    return repr(x)


def _table(rows: list[tuple], header: tuple) -> list[str]:
    cells = [tuple(map(str, header))] + [tuple(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    out = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    out.insert(1, "  ".join("-" * w for w in widths))
    return out


# ---------------------------------------------------------------------
# stallings


def cmd_stallings(args):
    alpha = _alphabet(args.rank)
    if args.command in ("fold", "pipeline"):
        A = stallings.Automaton.from_dict(_read_json(args.automaton))
        if args.command == "fold":
            F = stallings.fold(A)
            _emit(args, F.to_dict(), [f"folded: {len(F.vertices)} vertices, {len(F.edges)} edges",
                                      json.dumps(F.to_dict())])
            return 0
        A = stallings.trim(A)
        res = stallings.pipeline(A)
        stages = {name: getattr(res, name).to_dict() for name in ("a1", "a2", "a3", "a4")}
        r = res.report
        data = {"stages": stages, "rank": r.rank, "edges": r.edge_count, "vertices": r.vertex_count,
                "ragr_bound": stallings.ragr_bound(A)}
        lines = [f"{k}: {len(v['edges'])} edges, {v['vertices']} vertices" for k, v in stages.items()]
        lines.append(f"rank {r.rank}  (bound {data['ragr_bound']})")
        _emit(args, data, lines)
        return 0
    if args.command in ("rank", "member"):
        G = stallings.subgroup(_generators(args.generators, alpha), alpha)
        if args.command == "rank":
            basis = [alpha.format(w) for w in G.basis()]
            _emit(args, {"rank": G.rank, "vertices": G.vertex_count, "edges": G.edge_count, "basis": basis},
                  [f"rank {G.rank}", f"vertices {G.vertex_count}, edges {G.edge_count}",
                   "basis: " + ", ".join(basis)])
        else:
            hit = G.member(alpha.parse(args.word))
            _emit(args, {"member": hit}, [str(hit).lower()])
        return 0
    if args.command == "chain":
        chain = [_generators(step, alpha) for step in args.steps]
        try:
            rep = stallings.chain_check(chain, args.max_rank)
        except stallings.NotAscendingError as e:
            _emit(args, {"ascending": False, "pair": e.pair, "witness": alpha.format(e.witness)},
                  [f"not ascending at pair {e.pair}: {alpha.format(e.witness)}"])
            return 1
        data = {"ascending": True, "ranks": rep.ranks, "stabilized_at": rep.stabilized_at,
                "witnessed": rep.witnessed, "bounded": rep.bounded}
        note = "" if rep.witnessed else " (no repetition inside the prefix)"
        _emit(args, data, [f"ranks {list(rep.ranks)}", f"stabilized at {rep.stabilized_at}{note}"])
        return 0
    raise UsageError(args.command)


# ---------------------------------------------------------------------
# numeric


def cmd_numeric(args):
    if args.command == "profile":
        S = numeric.NumSgp.of(*_ints(args.generators))
        p = numeric.profile(S)
        window = args.window if args.window is not None else p.p + 2 * max(S.generators)
        table = numeric.membership_table(S, window)
        data = {"d": p.d, "p": p.p, "minimal_generators": list(p.minimal_generators),
                "membership": [n for n in range(window + 1) if table[n]], "window": window}
        _emit(args, data, [f"d = {p.d}", f"p = {p.p}",
                           "minimal generators: " + ", ".join(map(str, p.minimal_generators)),
                           f"members ≤ {window}: " + " ".join(map(str, data["membership"]))])
        return 0
    if args.command == "member":
        gens = _ints(args.generators)
        hit = numeric.int_member(gens, args.n) if any(g < 0 for g in gens) else \
            numeric.member(numeric.NumSgp.of(*gens), args.n)
        _emit(args, {"member": hit}, [str(hit).lower()])
        return 0
    if args.command == "classify":
        c = numeric.classify_int(_ints(args.generators))
        data = {k: (v.name if hasattr(v, "name") else v) for k, v in vars(c).items()}
        _emit(args, data, [f"{k}: {v}" for k, v in data.items()])
        return 0
    if args.command == "chain":
        chain = [numeric.NumSgp.of(*_ints(s)) for s in args.steps]
        try:
            rep = numeric.chain_stabilization(chain)
        except numeric.NotAscendingError as e:
            _emit(args, {"ascending": False, "error": str(e)}, [str(e)])
            return 1
        data = {"ascending": True, **{k: v for k, v in vars(rep).items()}}
        _emit(args, data, [f"{k}: {v}" for k, v in data.items()])
        return 0
    if args.command == "notts":
        rep = numeric.notts_chain(args.n_max)
        rows = [(n, s, e) for n, s, e in zip(range(1, args.n_max + 1), rep.strict + (None,), rep.excluded)]
        _emit(args, {"n_max": args.n_max, "all_strict": rep.all_strict, "strict": rep.strict,
                     "excluded": rep.excluded},
              _table(rows, ("n", "S_n ⊊ S_n+1", "(2n+1,1) ∉ S_n")) + [f"all strict: {rep.all_strict}"])
        return 0 if rep.all_strict else 1
    raise UsageError(args.command)


# ---------------------------------------------------------------------
# rees


def _rees_structure(args) -> rees.ReesStructure:
    if args.structure:
        return rees.ReesStructure.from_dict(_read_json(args.structure))
    G = _group(args)
    P = _tuples(args.P) if args.P else [[0] * args.I for _ in range(args.Lambda)]
    return rees.ReesStructure(G, args.I, args.Lambda, P)


def _fmt_elements(xs) -> str:
    return " ".join("(" + ",".join(map(str, x)) + ")" for x in sorted(xs))


def _finite_endo(args, S, module):
    d = _read_json(args.endo) if args.endo else None
    if d is None and args.images:
        gens, images = _tuples(args.images_from), _tuples(args.images)
        return _extend(S, gens, images)
    if d is None:
        raise UsageError("give --endo FILE or --images-from/--images")
    if module is rees:
        return rees.endo_from_json(S, d)
    if "map" in d:
        return clifford.validate_endo(S, [tuple(x) for x in d["map"]])
    return _extend(S, [tuple(x) for x in d["generators"]], [tuple(x) for x in d["images"]])


def _extend(S, gens, images):
    return S.algebra.extend(S.codes(gens), S.codes(images))


def cmd_rees(args):
    S = _rees_structure(args)
    if args.command in ("fix", "per"):
        m = _finite_endo(args, S, rees)
        if args.command == "fix":
            r = rees.fix(S, m)
            by = {f"{i},{lam}": sorted(v) for (i, lam), v in sorted(r.by_class.items())}
            _emit(args, {"fixed": sorted(r.elements), "by_class": by},
                  [f"|Fix| = {len(r)}"] + [f"  class ({k}): {_fmt_elements(v)}" for k, v in by.items()])
        else:
            r = rees.per(S, m)
            _emit(args, {"k": r.k, "R": r.R, "periodic": sorted(r.periodic)},
                  [f"k = {r.k}", f"R = {r.R}", f"|Per| = {len(r.periodic)}"])
        return 0
    A = _tuples(args.gens)
    T = S.closure(A)
    if args.command == "closure":
        _emit(args, {"elements": sorted(T.elements), "size": len(T), "I_T": sorted(T.I_T),
                     "Lambda_T": sorted(T.Lambda_T)},
              [f"|T| = {len(T)}", f"I_T = {sorted(T.I_T)}", f"Lambda_T = {sorted(T.Lambda_T)}",
               _fmt_elements(T.elements)])
        return 0
    if args.command == "component":
        H = rees.component_iso(S, T, args.i, args.lam)
        _emit(args, {"component": sorted(rees.component(T, args.i, args.lam)),
                     "group_elements": sorted(H.elements), "size": len(H.elements)},
              [f"T^({args.i},{args.lam}) ≅ subgroup of order {len(H.elements)}: {sorted(H.elements)}"])
        return 0
    if args.command == "automaton":
        M = rees.build_g_automaton(S, A, args.i, args.lam)
        edges = sorted(M.edges, key=repr)
        _emit(args, {"states": list(M.states), "edges": edges, "language": sorted(M.language())},
              [f"states: {' '.join(map(str, M.states))}"] + [f"  {p} --{g}--> {q}" for p, g, q in edges]
              + [f"path labels: {sorted(M.language())}"])
        return 0
    if args.command == "bound":
        b = rees.rank_bound_check(S, A, args.i, args.lam)
        _emit(args, {"rk_cs": b.rk_cs, "rk_component": b.rk_component, "bound_holds": b.bound_holds},
              [f"rk_CS(T) = {b.rk_cs}", f"rk_G(T^(iλ)) = {b.rk_component}",
               f"bound {b.rk_component} ≤ {b.rk_cs ** 2 + 1}: {b.bound_holds}"])
        return 0 if b.bound_holds else 1
    raise UsageError(args.command)


# ---------------------------------------------------------------------
# clifford


def _clifford_structure(args) -> clifford.SemilatticeOfGroups:
    if args.structure:
        return clifford.SemilatticeOfGroups.from_dict(_read_json(args.structure))
    return clifford.single_group(_group(args))


def cmd_clifford(args):
    S = _clifford_structure(args)
    if args.command in ("fix", "per"):
        m = _finite_endo(args, S, clifford)
        if args.command == "fix":
            r = clifford.fix(S, m)
            by = {str(a): sorted(v) for a, v in sorted(r.by_class.items())}
            _emit(args, {"fixed": sorted(r.elements), "by_level": by},
                  [f"|Fix| = {len(r.elements)}"] + [f"  level {a}: {_fmt_elements(v)}" for a, v in by.items()])
        else:
            r = clifford.per(S, m)
            _emit(args, {"k": r.k, "R": r.R, "periodic": sorted(r.periodic)},
                  [f"k = {r.k}", f"R = {r.R}", f"|Per| = {len(r.periodic)}"])
        return 0
    T = S.closure(_tuples(args.gens))
    if args.command == "index":
        r = clifford.index(S, T)
        sup = r.sup if r.finite else "infinite"
        _emit(args, {"per_level": r.per_class, "index": sup},
              [f"[H_{a} : H_{a} ∩ T] = {v}" for a, v in enumerate(r.per_class)] + [f"[S:T] = {sup}"])
        return 0
    if args.command == "green-index":
        r = clifford.green_index(S, T)
        _emit(args, {"green_index": r.green, "h_t_classes": r.h_t_classes, "index": r.sup},
              [f"green index = {r.green}", f"|S/H^T| = {r.h_t_classes}", f"[S:T] = {r.sup}"])
        return 0
    if args.command == "retraction":
        r = clifford.retraction_check(S, T, args.level)
        _emit(args, {"rk_g": r.rk_g, "rk_c": r.rk_c, "holds": r.holds, "t_prime": sorted(r.t_prime)},
              [f"rk_G(T ∩ H) = {r.rk_g}", f"rk_C(T) = {r.rk_c}", f"inequality holds: {r.holds}"])
        return 0 if r.holds else 1
    raise UsageError(args.command)


# ---------------------------------------------------------------------
# monoids


def cmd_monoid(args):
    if args.command == "exth":
        r = experiments.exth_check(args.n_max)
        _emit(args, r, [f"{k}: {v}" for k, v in r.items()])
        return 0 if all(r[k] for k in ("fixed", "distinct", "indecomposable")) else 1
    if args.command == "ltwo-sweep":
        rep = experiments.ltwo_sweep(letters=args.letters, image_len=args.image_len, L=args.max_length)
        return _report(args, rep)
    if args.command == "rewrite":
        return _rewrite(args)
    P = presentations.presentation(args.presentation)
    f = P.fmt
    if args.command == "canon":
        w = P.word(args.word)
        _emit(args, {"canonical": f(P.canonical(w))}, [f(P.canonical(w))])
        return 0
    if args.command == "equal":
        eq = P.equal(P.word(args.left), P.word(args.right))
        _emit(args, {"equal": eq}, [str(eq).lower()])
        return 0
    if args.command == "jabove":
        xs = sorted(P.j_above(P.word(args.word)), key=lambda w: (len(w), w))
        _emit(args, {"j_above": [f(w) for w in xs], "count": len(xs)}, [f"{len(xs)} elements"] + [f(w) for w in xs])
        return 0
    phi = presentations.validate_endo(P, args.endo)
    L = args.max_length
    if args.command == "fix":
        r = presentations.fix_up_to(P, phi, L)
        rows = [(n, len(r.fixed[n])) for n in sorted(r.fixed)]
        ind = [f(w) for w in r.indecomposables]
        _emit(args, {"fixed": [f(w) for w in r.fixed_words()], "indecomposables": ind, "rank_at_L": r.rank_at_L},
              _table(rows, ("length", "fixed")) + [f"indecomposables: {', '.join(ind) or '-'}",
                                                   f"rank within length {L}: {r.rank_at_L}"])
        return 0
    if args.command == "per":
        r = presentations.per_up_to(P, phi, L, args.n_max)
        ind = [f(w) for w in r.indecomposables]
        _emit(args, {"k": r.k, "R": r.R, "periodic": [f(w) for w in r.periodic_words()], "indecomposables": ind,
                     "fix_factorial": r.fix_factorial},
              [f"k = {r.k if r.stabilized else 'not stabilized by ' + str(args.n_max)}", f"R = {r.R}",
               f"|Per| within length {L}: {r.count()}", f"indecomposables: {', '.join(ind) or '-'}"])
        return 0
    if args.command == "period-check":
        r = presentations.per_up_to(P, phi, L, args.n_max)
        ok, witness = presentations.period_divides_R(P, phi, r)
        _emit(args, {"R": r.R, "holds": ok, "witness": None if ok else f(witness)},
              [f"R = {r.R}", "xφ^R = x on every periodic x" if ok else f"fails at {f(witness)}"])
        return 0 if ok else 1
    raise UsageError(args.command)


def _rewrite(args):
    if args.rules:
        alpha = Alphabet.of(args.alphabet)
        rs = rewriting.RewriteSystem.parse(alpha, args.rules)
    else:
        rs = rewriting.a2b2_system()
        alpha = rs.alphabet
    fmt = lambda w: "".join(alpha.name(x) for x in w) or "1"
    if args.word is not None:
        nf = rs.normal_form(alpha.parse(args.word))
        _emit(args, {"normal_form": fmt(nf)}, [fmt(nf)])
        return 0
    rep = rs.check_local_confluence()
    pairs = [{"word": fmt(p.word), "kind": p.kind, "left": fmt(p.left), "right": fmt(p.right),
              "left_nf": fmt(p.left_nf), "right_nf": fmt(p.right_nf), "joinable": p.joinable}
             for p in rep.pairs]
    rows = [(p["word"], p["kind"], f"{p['left']} → {p['left_nf']}", f"{p['right']} → {p['right_nf']}",
             p["joinable"]) for p in pairs]
    _emit(args, {"locally_confluent": rep.locally_confluent, "critical_pairs": pairs},
          _table(rows, ("overlap", "kind", "left", "right", "joinable"))
          + [f"locally confluent: {rep.locally_confluent}"])
    return 0 if rep.locally_confluent else 1


# ---------------------------------------------------------------------
# experiments


def _report(args, rep) -> int:
    d = rep.to_dict()
    lines = [f"experiment {rep.name}  seed={rep.seed}  {'PASS' if rep.passed else 'FAIL'}  ({rep.elapsed:.2f} s)"]
    lines += [f"  {k}: {v}" for k, v in rep.stats.items()]
    if rep.counterexamples:
        lines.append(f"  first counterexample: {rep.counterexamples[0]!r}")
    _emit(args, d, lines)
    return 0 if rep.passed else 1


def _experiment_params(name: str, raw: dict) -> dict:
    fn = experiments.REGISTRY[name]
    inner = getattr(fn, "__wrapped__", None)
    sig = inspect.signature(inner or fn)
    params = {}
    for key, value in raw.items():
        if value is None:
            continue
        if key not in sig.parameters:
            raise UsageError(f"experiment {name} takes no --{key.replace('_', '-')}")
        params[key] = value
    return params


def cmd_experiment(args):
    if args.name not in experiments.REGISTRY:
        raise UsageError(f"unknown experiment {args.name!r}; choose from {', '.join(sorted(experiments.REGISTRY))}")
    raw = {"seed": args.seed, "n_max": args.n_max, "group_max": args.group_max, "gens": args.gens,
           "letters": args.letters, "image_len": args.image_len, "L": args.max_length, "count": args.count}
    rep = experiments.run(args.name, **_experiment_params(args.name, raw))
    return _report(args, rep)


# ---------------------------------------------------------------------
# argument parser


def build_parser() -> argparse.ArgumentParser:
    # --json is accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    parser = argparse.ArgumentParser(prog="takahasi",
                                     description="Subgroup graphs, numerical semigroups, Rees and "
                                                 "Clifford structures, and fixed points of monoid endomorphisms.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    areas = parser.add_subparsers(dest="area", required=True)

    # stallings
    st = areas.add_parser("stallings", help="subgroups of free groups")
    st_cmds = st.add_subparsers(dest="command", required=True)
    for name in ("fold", "pipeline"):
        p = st_cmds.add_parser(name, parents=[common], help=f"{name} an automaton given as JSON")
        p.add_argument("automaton", help="JSON file, or - for stdin")
        p.add_argument("--rank", type=int, default=2)
    p = st_cmds.add_parser("rank", parents=[common], help="rank of the subgroup generated by words")
    p.add_argument("generators", help="comma-separated words, e.g. \"aa, b, aba'\"")
    p.add_argument("--rank", type=int, default=2, help="number of free generators")
    p = st_cmds.add_parser("member", parents=[common], help="membership of a word")
    p.add_argument("generators")
    p.add_argument("word")
    p.add_argument("--rank", type=int, default=2)
    p = st_cmds.add_parser("chain", parents=[common], help="ascending chain of subgroups")
    p.add_argument("steps", nargs="+", help="one comma-separated generator list per subgroup")
    p.add_argument("--max-rank", type=int)
    p.add_argument("--rank", type=int, default=2)

    # numeric
    nu = areas.add_parser("numeric", help="subsemigroups of ℕ, ℤ and ℤ²")
    nu_cmds = nu.add_subparsers(dest="command", required=True)
    p = nu_cmds.add_parser("profile", parents=[common], help="d, p and minimal generators")
    p.add_argument("generators", help="comma-separated positive integers")
    p.add_argument("--window", type=int)
    p = nu_cmds.add_parser("member", parents=[common])
    p.add_argument("generators")
    p.add_argument("n", type=int)
    p = nu_cmds.add_parser("classify", parents=[common], help="shape of a subsemigroup of ℤ")
    p.add_argument("generators", help="put -- first when the list starts with a negative number")
    p = nu_cmds.add_parser("chain", parents=[common])
    p.add_argument("steps", nargs="+")
    p = nu_cmds.add_parser("notts", parents=[common], help="the ascending chain in ℤ²")
    p.add_argument("--n-max", type=int, default=25)

    # rees
    structure = argparse.ArgumentParser(add_help=False)
    structure.add_argument("--structure", help="JSON file")
    structure.add_argument("--group", default="C2")
    structure.add_argument("--group-file", help="group JSON {order, table}")
    endo = argparse.ArgumentParser(add_help=False)
    endo.add_argument("--endo", help="JSON file with a map or generators/images")
    endo.add_argument("--images-from", dest="images_from", help="generators, e.g. \"0,1,0; 1,0,1\"")
    endo.add_argument("--images", help="their images, same format")

    re_ = areas.add_parser("rees", help="completely simple semigroups")
    re_cmds = re_.add_subparsers(dest="command", required=True)
    for name in ("closure", "component", "automaton", "bound", "fix", "per"):
        p = re_cmds.add_parser(name, parents=[common, structure] + ([endo] if name in ("fix", "per") else []))
        p.add_argument("--I", type=int, default=1)
        p.add_argument("--Lambda", type=int, default=1)
        p.add_argument("--P", help="sandwich rows indexed by Λ, e.g. \"0,0; 0,1\"")
        if name not in ("fix", "per"):
            p.add_argument("--gens", required=True, help="triples i,g,λ separated by ;")
        if name in ("component", "automaton", "bound"):
            p.add_argument("--i", type=int, default=0)
            p.add_argument("--lam", type=int, default=0)

    cl = areas.add_parser("clifford", help="strong semilattices of groups")
    cl_cmds = cl.add_subparsers(dest="command", required=True)
    for name in ("index", "green-index", "retraction", "fix", "per"):
        p = cl_cmds.add_parser(name, parents=[common, structure] + ([endo] if name in ("fix", "per") else []))
        if name not in ("fix", "per"):
            p.add_argument("--gens", required=True, help="pairs level,g separated by ;")
        if name == "retraction":
            p.add_argument("--level", type=int, required=True)

    # monoids
    mo = areas.add_parser("monoid", help="balanced presentations and endomorphisms")
    mo_cmds = mo.add_subparsers(dest="command", required=True)
    p = mo_cmds.add_parser("canon", parents=[common])
    p.add_argument("presentation", help="e.g. \"monoid a b c ; cac = cbc\"")
    p.add_argument("word")
    p = mo_cmds.add_parser("equal", parents=[common])
    p.add_argument("presentation")
    p.add_argument("left")
    p.add_argument("right")
    p = mo_cmds.add_parser("jabove", parents=[common])
    p.add_argument("presentation")
    p.add_argument("word")
    for name in ("fix", "per", "period-check"):
        p = mo_cmds.add_parser(name, parents=[common])
        p.add_argument("presentation")
        p.add_argument("endo", help="e.g. \"a -> b ; b -> a\"")
        p.add_argument("--max-length", type=int, default=8)
        if name != "fix":
            p.add_argument("--n-max", type=int, default=6)
    p = mo_cmds.add_parser("exth", parents=[common])
    p.add_argument("--n-max", type=int, default=6)
    p = mo_cmds.add_parser("ltwo-sweep", parents=[common])
    p.add_argument("--letters", type=int, nargs="+", default=[2, 3])
    p.add_argument("--image-len", type=int, default=2)
    p.add_argument("--max-length", type=int, default=8)
    p = mo_cmds.add_parser("rewrite", parents=[common], help="critical pairs or a normal form")
    p.add_argument("--rules", help="e.g. \"bb -> aa ; baa -> aab\" (default)")
    p.add_argument("--alphabet", default="ab")
    p.add_argument("--word")

    # experiments
    ex = areas.add_parser("experiment", parents=[common], help="run a registered check")
    ex.add_argument("name", help=", ".join(experiments.ACCEPTANCE))
    ex.add_argument("--seed", type=int)
    ex.add_argument("--n-max", type=int)
    ex.add_argument("--group-max", type=int)
    ex.add_argument("--gens", type=int)
    ex.add_argument("--letters", type=int, nargs="+")
    ex.add_argument("--image-len", type=int)
    ex.add_argument("--max-length", type=int)
    ex.add_argument("--count", type=int)
    return parser


HANDLERS = {
    "stallings": cmd_stallings,
    "numeric": cmd_numeric,
    "rees": cmd_rees,
    "clifford": cmd_clifford,
    "monoid": cmd_monoid,
    "experiment": cmd_experiment,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.area](args)
    except UsageError as e:
        parser.error(str(e))
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
