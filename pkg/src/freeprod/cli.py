"""Command-line interface.

Every run writes line-oriented JSON (one object per line, keys sorted) or a
plain-text rendering of the same records.  Exit status: 0 when every check
passes with no bound exhaustion, 1 when a check fails, 2 on a parse error,
3 when a bound was exhausted and nothing failed.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass, field
from typing import Any

from .errors import BoundExhausted, ParseError, SizeLimitExceeded
from .fincat import Move, Path, funny_tensor, to_fin_category
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BOUND = 0, 1, 2, 3


@dataclass
class CliConfig:
    subcommand: str
    action: str | None = None
    inputs: list = field(default_factory=list)
    bound: int = 4
    out: str | None = None
    format: str = "json"
    monad: str = "cat"
    interchange: bool = False
    all: bool = False

    def __post_init__(self):
        if self.bound < 1:
            raise ValueError("bound must be at least 1")


class Recorder:
    """Collects output records and tracks failures and exhaustion."""

    def __init__(self):
        self.records: list[dict] = []
        self.failed = False
        self.exhausted = False

    def emit(self, kind: str, **fields):
        self.records.append({"kind": kind, **fields})

    def report(self, name: str, rep: Report, **extra):
        d = rep.to_dict()
        self.failed |= not rep.ok
        self.exhausted |= bool(rep.notes.get("exhausted"))
        self.emit("check", name=name, ok=rep.ok, checked=d["checked"], violations=d["violations"][:20],
                  **({"notes": d["notes"]} if "notes" in d else {}), **extra)

    def verdict(self, name: str, ok: bool, **extra):
        self.failed |= not ok
        self.emit("check", name=name, ok=ok, **extra)

    def hom(self, src, tgt, size: int, exhausted: bool = False, **extra):
        self.exhausted |= exhausted
        self.emit("hom", src=src, tgt=tgt, size=size, exhausted=exhausted, **extra)

    def status(self) -> int:
        if self.failed:
            return EXIT_FAIL
        if self.exhausted:
            return EXIT_BOUND
        return EXIT_OK


def _plain(x: Any):
    if isinstance(x, (Path, Move)):
        return str(x)
    if isinstance(x, tuple) or isinstance(x, list):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(_plain(k)) if not isinstance(k, str) else k: _plain(v) for k, v in x.items()}
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def render(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps(_plain(r), sort_keys=True, ensure_ascii=False) + "\n" for r in records)
    lines = []
    for r in records:
        r = _plain(r)
        head = r.pop("kind")
        lines.append(head + " " + " ".join(f"{k}={json.dumps(v, sort_keys=True, ensure_ascii=False)}"
                                           for k, v in sorted(r.items())))
    return "\n".join(lines) + "\n"


def _name(x) -> str:
    return getattr(x, "name", None) or "?"


# ------------------------------------------------------------ subcommands


def cmd_funny(cfg: CliConfig, rec: Recorder):
    from .comparison import compare_with_tensor, pushout_formula_tensor
    from .formats import load_catspec
    from .monads import tensor_categories
    cats = [load_catspec(p) for p in cfg.inputs]
    if len(cats) < 1:
        raise ParseError("funny needs at least one .catspec input")
    P = funny_tensor(cats)
    rec.emit("input", factors=[_name(c) for c in cats], bound=cfg.bound)
    for a in P.objects:
        for b in P.objects:
            hc = P.hom(a, b, cfg.bound)
            if len(hc) or hc.exhausted:
                rec.hom(a, b, len(hc), hc.exhausted, classes=[str(r) for r in hc])
    if len(cats) >= 2:
        t = tensor_categories(cats, cfg.bound)
        rep = compare_with_tensor(pushout_formula_tensor(cats, cfg.bound), t, cfg.bound)
        rec.report("pushout-formula-agrees", rep)


def cmd_vgraph(cfg: CliConfig, rec: Recorder):
    from .formats import load_vgraph
    from .multicat import GraphMulticategory, is_universal
    from .vgraph import (count_morphisms, count_morphisms_into_hom, count_multimaps, free_product_graphs,
                         graph_hom, tensor2_reformulation)
    gs = [load_vgraph(p) for p in cfg.inputs]
    rec.emit("input", graphs=[_name(g) for g in gs])
    if cfg.action == "tensor":
        T, _ = free_product_graphs(gs)
        for (a, b), h in T.homs.items():
            if T.base.size(h):
                rec.hom(a, b, T.base.size(h))
        R = tensor2_reformulation(gs)
        ok = all(R.base.size(R.homs[k]) == T.base.size(T.homs[k]) for k in T.homs)
        rec.verdict("reformulation-sizes-agree", ok)
    elif cfg.action == "hom":
        if len(gs) != 2:
            raise ParseError("vgraph hom needs exactly two graphs")
        H = graph_hom(gs[0], gs[1])
        rec.emit("hom-graph", objects=len(H.objects), edges=H.edge_count())
        rec.verdict("objects-are-morphisms", len(H.objects) == count_morphisms(gs[0], gs[1]))
    elif cfg.action == "alpha":
        if len(gs) < 2:
            raise ParseError("vgraph alpha needs at least two graphs")
        T, alpha = free_product_graphs(gs)
        for C in gs:
            n = count_morphisms(T, C)
            rec.verdict("multimaps-vs-morphisms", n == count_multimaps(gs, C), target=_name(C), count=n)
            if len(gs) == 2:
                rec.verdict("adjunction", n == count_morphisms_into_hom(gs[0], gs[1], C), target=_name(C))
        names = [f"G{i}" for i in range(len(gs))]
        X = GraphMulticategory({**dict(zip(names, gs)), "T": T})
        rec.verdict("alpha-universal", is_universal(X, X.wrap(tuple(names), "T", alpha)))


def _finite_categories(cfg):
    from .formats import load_catspec
    return {(_name(p) or f"C{i}"): to_fin_category(p, cfg.bound)
            for i, p in enumerate(load_catspec(x) for x in cfg.inputs)}


def cmd_multicat(cfg: CliConfig, rec: Recorder):
    from .multicat import (GraphMulticategory, build_F, cat_over_set, is_strongly_universal, is_universal,
                           validate_symmetric_multicat)
    from .vgraph import count_morphisms_into_hom, count_multimaps, free_product_graphs
    if cfg.action in ("build-f", "validate"):
        cats = _finite_categories(cfg)
        F = build_F(cat_over_set(cats))
        rec.emit("input", categories=sorted(cats))
        if cfg.action == "build-f":
            for xs in F.sequences(2):
                for y in F.objects:
                    rec.emit("multimaps", dom=list(xs), cod=y, count=len(F.hom(xs, y)))
        else:
            rec.report("symmetric-multicategory", validate_symmetric_multicat(F, max_arity=2))
        return
    from .formats import load_vgraph
    gs = [load_vgraph(p) for p in cfg.inputs]
    rec.emit("input", graphs=[_name(g) for g in gs])
    if cfg.action == "universal":
        T, alpha = free_product_graphs(gs)
        names = [f"G{i}" for i in range(len(gs))]
        X = GraphMulticategory({**dict(zip(names, gs)), "T": T})
        f = X.wrap(tuple(names), "T", alpha)
        u = is_universal(X, f)
        rec.verdict("universal", u)
        rec.verdict("strongly-universal", is_strongly_universal(X, f, context_arity=1,
                                                                context_objects=names[:1]))
    elif cfg.action == "closed":
        for A, B, C in itertools.product(gs, repeat=3):
            n = count_morphisms_into_hom(A, B, C)
            rec.verdict("closedness-bijection", n == count_multimaps([A, B], C),
                        triple=[_name(A), _name(B), _name(C)], count=n)


def cmd_alg(cfg: CliConfig, rec: Recorder):
    from .formats import load_catspec, load_module, load_ring
    from .monads import (IdentityMonad, TAlgebra, category_monad, hom_algebras, hom_categories,
                         rmodule_monad, tensor_algebras, tensor_categories, validate_set_monad)
    monad = cfg.monad
    if monad.startswith("rmod:"):
        R = load_ring(monad[5:])
        mods = [load_module(p, R) for p in cfg.inputs]
        rec.emit("input", monad=f"rmod:{R.name}", modules=[m.name for m in mods])
        if cfg.action == "tensor":
            t = tensor_algebras(mods)
            rec.emit("tensor", size=len(t.algebra.carrier), relations=t.relation_count)
            rec.report("algebra-axioms", t.algebra.validate(limit=500))
        elif cfg.action == "hom":
            if len(mods) != 2:
                raise ParseError("alg hom needs exactly two modules")
            H = hom_algebras(mods[0], mods[1])
            rec.emit("hom", size=len(H.carrier))
            rec.report("algebra-axioms", H.validate(limit=500))
        else:
            rec.report("monad-laws", validate_set_monad(rmodule_monad(R), [(), (0,), (0, 1)]))
            for m in mods:
                rec.report(f"algebra {m.name}", m.validate())
    elif monad == "id":
        mods = [load_module_as_set(p) for p in cfg.inputs]
        rec.emit("input", monad="id", sets=[len(m) for m in mods])
        T = IdentityMonad()
        algs = [TAlgebra(T, m, lambda x: x, f"S{i}") for i, m in enumerate(mods)]
        if cfg.action == "tensor":
            rec.emit("tensor", size=len(tensor_algebras(algs).algebra.carrier))
        elif cfg.action == "hom":
            rec.emit("hom", size=len(hom_algebras(algs[0], algs[1]).carrier))
        else:
            rec.report("monad-laws", validate_set_monad(T, mods[:3] or [()]))
    elif monad == "cat":
        cats = [load_catspec(p) for p in cfg.inputs]
        rec.emit("input", monad="cat", categories=[_name(c) for c in cats])
        if cfg.action == "tensor":
            t = tensor_categories(cats, cfg.bound)
            P = t.algebra
            for a in P.objects:
                for b in P.objects:
                    hc = P.hom(a, b, cfg.bound)
                    if len(hc) or hc.exhausted:
                        rec.hom(a, b, len(hc), hc.exhausted)
            rec.emit("tensor", generators=t.notes.get("generators"), relations=t.relation_count,
                     truncated=t.truncated)
            rec.exhausted |= t.truncated
        elif cfg.action == "hom":
            fins = [to_fin_category(c, cfg.bound) for c in cats]
            if len(fins) != 2:
                raise ParseError("alg hom needs exactly two categories")
            H = hom_categories(fins[0], fins[1])
            rec.emit("hom", objects=len(H.objects), morphisms=len(H.morphisms))
        else:
            rec.report("monad-laws", category_monad().validate([c.graph for c in cats], cfg.bound))
    else:
        raise ParseError(f"unknown monad {monad!r}; use cat, id or rmod:<ring-file>")


def load_module_as_set(path) -> tuple:
    from .formats import _lines, _read
    for no, line in _lines(_read(path)):
        parts = line.split()
        if parts[0] == "elements":
            return tuple(parts[1:])
    raise ParseError("missing elements line", None, str(path))


def cmd_compare(cfg: CliConfig, rec: Recorder):
    from .comparison import (check_cartesian_naturality, compare_kappa_tilde_bar, compare_with_tensor,
                             graph_morphisms, kappa, kappa_coherence_check, kappa_on_classes,
                             kappa_tilde_square, pushout_formula_tensor)
    from .monads import tensor_categories
    if cfg.action in ("kappa", "pushout"):
        from .formats import load_catspec
        cats = [load_catspec(p) for p in cfg.inputs]
        rec.emit("input", categories=[_name(c) for c in cats], bound=cfg.bound)
        t = tensor_categories(cats, cfg.bound)
        if cfg.action == "kappa":
            K = kappa(t)
            for a in t.algebra.objects:
                for b in t.algebra.objects:
                    imgs = kappa_on_classes(K, a, b, cfg.bound)
                    if imgs:
                        rec.emit("kappa", src=a, tgt=b, classes=len(imgs), image=len(set(imgs.values())))
            rec.report("comparison-well-defined", K.check(cfg.bound))
            if len(cats) >= 2:
                rec.report("coherence", kappa_coherence_check(cats, cfg.bound))
        else:
            rec.report("pushout-formula-agrees",
                       compare_with_tensor(pushout_formula_tensor(cats, cfg.bound), t, cfg.bound))
        return
    from .formats import load_vgraph, vgraph_to_fingraph
    gs = [vgraph_to_fingraph(load_vgraph(p)) for p in cfg.inputs]
    rec.emit("input", graphs=len(gs))
    if cfg.action == "naturality":
        rec.report("kappa-tilde-equals-kappa-bar", compare_kappa_tilde_bar(gs))
        for (i, X), (j, Y) in itertools.product(enumerate(gs), repeat=2):
            for k, h in enumerate(graph_morphisms(X, Y)):
                sq = kappa_tilde_square([X, X], [Y, Y], [h, h])
                rep = check_cartesian_naturality([sq])
                rec.report("pullback", rep, square=f"{i}->{j}#{k}")
    else:
        raise ParseError(f"unknown compare action {cfg.action!r}")


def cmd_ecat(cfg: CliConfig, rec: Recorder):
    from .formats import ecategory_to_doc, load_ecat_document
    from .multitensor import check_coequalizer_universal, coequalize_E_categories, validate_E_category
    if len(cfg.inputs) != 1:
        raise ParseError("ecat needs one JSON document")
    doc = load_ecat_document(cfg.inputs[0])
    rec.emit("input", operad=doc["operad"].name)
    if cfg.action == "validate":
        rec.report("operad", doc["operad"].validate())
        if "category" in doc:
            rec.report("E-category", validate_E_category(doc["category"]))
        for key in ("source", "target"):
            if key in doc:
                rec.report(f"E-category {key}", validate_E_category(doc[key]))
    else:
        if "target" not in doc:
            raise ParseError("ecat coeq needs source, target, f and g")
        f, g = doc["f"], doc["g"]
        rec.report("f", f.check())
        rec.report("g", g.check())
        co = coequalize_E_categories(f, g)
        rec.report("coequalizer", co.report)
        rec.emit("result", category=ecategory_to_doc(co.category), homwise=co.homwise_sufficient)
        targets = doc.get("targets") or [co.category]
        rec.report("universal-property", check_coequalizer_universal(co, f, g, targets))


def cmd_sesqui(cfg: CliConfig, rec: Recorder):
    from .formats import load_sesqui
    from .sesqui import check_interchange, validate_sesqui
    for p in cfg.inputs:
        S = load_sesqui(p)
        rec.report(f"sesqui {S.name or p}", validate_sesqui(S))
        if cfg.interchange:
            rep = check_interchange(S)
            rec.emit("interchange", ok=rep.ok, failures=[str(v) for v in rep.violations])


def cmd_check(cfg: CliConfig, rec: Recorder):
    from .suite import SUITE, run_suite
    names = None if cfg.all or not cfg.inputs else cfg.inputs
    unknown = [n for n in (names or []) if n not in SUITE]
    if unknown:
        raise ParseError(f"unknown suite entries {unknown}; known: {sorted(SUITE)}")
    for name, rep in run_suite(cfg.bound, names):
        rec.report(name, rep)


COMMANDS = {"funny": cmd_funny, "vgraph": cmd_vgraph, "multicat": cmd_multicat, "alg": cmd_alg,
            "compare": cmd_compare, "ecat": cmd_ecat, "sesqui": cmd_sesqui, "check": cmd_check}

ACTIONS = {"vgraph": ["tensor", "hom", "alpha"], "multicat": ["build-f", "validate", "universal", "closed"],
           "alg": ["tensor", "hom", "check"], "compare": ["kappa", "pushout", "naturality"],
           "ecat": ["validate", "coeq"], "sesqui": ["validate"], "check": ["suite"]}


def cli_run(cfg: CliConfig) -> tuple[int, str]:
    """Run one command; returns the exit status and the rendered report."""
    rec = Recorder()
    try:
        COMMANDS[cfg.subcommand](cfg, rec)
        status = rec.status()
    except ParseError as exc:
        rec.emit("error", type="parse", message=str(exc))
        status = EXIT_PARSE
    except BoundExhausted as exc:
        rec.emit("error", type="bound", message=str(exc))
        status = EXIT_BOUND
    except SizeLimitExceeded as exc:
        rec.emit("error", type="size-limit", message=str(exc))
        status = EXIT_BOUND
    rec.emit("verdict", command=" ".join([cfg.subcommand] + ([cfg.action] if cfg.action else [])),
             bound=cfg.bound, ok=status == EXIT_OK, exit=status, exhausted=rec.exhausted)
    return status, render(rec.records, cfg.format)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # defaults are filled in after parsing so flags work before or after the subcommand
    common.add_argument("--bound", type=int, default=argparse.SUPPRESS, help="word-length bound (default 4)")
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report here instead of stdout")
    common.add_argument("--format", choices=["json", "text"], default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="freeprod", description="Funny tensors, multicategories and comparisons.",
                                     parents=[common])
    sub = parser.add_subparsers(dest="subcommand", required=True)
    p = sub.add_parser("funny", parents=[common], help="funny tensor of .catspec categories")
    p.add_argument("inputs", nargs="+")
    for name, actions in ACTIONS.items():
        p = sub.add_parser(name, parents=[common])
        p.add_argument("action", choices=actions)
        p.add_argument("inputs", nargs="*")
        if name == "alg":
            p.add_argument("--monad", default="cat", help="cat, id or rmod:<ring-file>")
        if name == "sesqui":
            p.add_argument("--interchange", action="store_true", help="also report interchange failures")
        if name == "check":
            p.add_argument("--all", action="store_true", help="run every suite entry")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    # options may sit between positional inputs, so leftovers are extra inputs
    args, extra = parser.parse_known_args(argv)
    bad = [x for x in extra if x.startswith("-")]
    if bad:
        parser.error(f"unrecognized arguments: {' '.join(bad)}")
    args.inputs = list(args.inputs) + extra
    args.bound = getattr(args, "bound", 4)
    args.out = getattr(args, "out", None)
    args.format = getattr(args, "format", "json")
    if args.bound < 1:
        parser.error("--bound must be at least 1")
    cfg = CliConfig(subcommand=args.subcommand, action=getattr(args, "action", None),
                    inputs=list(args.inputs), bound=args.bound, out=args.out, format=args.format,
                    monad=getattr(args, "monad", "cat"), interchange=getattr(args, "interchange", False),
                    all=getattr(args, "all", False))
    status, text = cli_run(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
