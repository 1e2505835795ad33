"""Text and JSON input formats.

* ``.catspec``: ``obj <name>``, ``gen <name>: <src> -> <tgt>``,
  ``rel <word> = <word>`` with ``;``-separated diagrammatic words and
  ``id(<obj>)`` for an empty word.
* ``.vgraph``: ``obj <name>``, ``hom <a> <b> = <literal>`` where the literal is
  a list of edge labels such as ``{x, y}`` or ``[x, y]``.
* ring files: ``elements``, ``zero``, ``one`` lines then ``add`` and ``mul``
  tables (one row per element, in element order).
* module files: ``rank <m>`` for a free module, or ``elements``, ``zero`` and
  ``add``/``scale`` tables (``scale`` rows are ring elements).
* operad files: ``arity <n>: <elem>,...``, ``unit <elem>``, ``max_arity <N>``
  and ``sub <e>(<e1>,...,<en>) = <elem>`` lines.
* E-categories and sesqui-categories: JSON documents (see the README).

Lines starting with ``#`` and blank lines are ignored everywhere.
"""
from __future__ import annotations

import json
import re
from pathlib import Path as FilePath

from .errors import ParseError
from .fincat import FinCategory, FinGraph, Path, PresentedCategory
from .monads import FiniteCommRing, TAlgebra, free_module, module_algebra, validate_module
from .multitensor import ECategory, EFunctor, SetOperad, terminal_operad, two_monoid_operad
from .sesqui import SesquiCategory, sesqui_from_enrichment
from .vgraph import CatMultimap, FINSET, VGraph
from .fincat import Functor

_NAME = r"[^\s:;=,(){}\[\]]+"


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _read(path) -> str:
    try:
        return FilePath(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", path=str(path)) from exc


# ------------------------------------------------------------------ catspec


def parse_catspec(text: str, path=None, name=None) -> PresentedCategory:
    objects, edges, rels = [], [], []
    gens = {}
    for no, line in _lines(text):
        if m := re.fullmatch(rf"obj\s+({_NAME})", line):
            if m.group(1) in objects:
                raise ParseError(f"duplicate object {m.group(1)}", no, path)
            objects.append(m.group(1))
        elif m := re.fullmatch(rf"gen\s+({_NAME})\s*:\s*({_NAME})\s*->\s*({_NAME})", line):
            g, s, t = m.groups()
            for o in (s, t):
                if o not in objects:
                    raise ParseError(f"generator {g}: unknown object {o}", no, path)
            if g in gens:
                raise ParseError(f"duplicate generator {g}", no, path)
            gens[g] = (s, t)
            edges.append((g, s, t))
        elif m := re.fullmatch(r"rel\s+(.+?)\s*=\s*(.+)", line):
            lhs = _word(m.group(1), gens, objects, no, path)
            rhs = _word(m.group(2), gens, objects, no, path)
            if (lhs.src, lhs.tgt) != (rhs.src, rhs.tgt):
                raise ParseError(f"ill-typed relation: {lhs.src}->{lhs.tgt} vs {rhs.src}->{rhs.tgt}", no, path)
            rels.append((lhs, rhs))
        else:
            raise ParseError(f"unrecognized line: {line!r}", no, path)
    graph = FinGraph(objects, edges)
    return PresentedCategory(graph, rels, name=name or (FilePath(path).stem if path else None))


def _word(text: str, gens: dict, objects: list, no: int, path) -> Path:
    text = text.strip()
    if m := re.fullmatch(rf"id\(\s*({_NAME})\s*\)", text):
        o = m.group(1)
        if o not in objects:
            raise ParseError(f"unknown object {o}", no, path)
        return Path(o, o, ())
    word = [w.strip() for w in text.split(";")]
    for i, g in enumerate(word):
        if g not in gens:
            raise ParseError(f"unknown generator {g!r}", no, path)
        if i and gens[word[i - 1]][1] != gens[g][0]:
            raise ParseError(f"ill-typed word: {word[i - 1]} ends at {gens[word[i - 1]][1]}, "
                             f"{g} starts at {gens[g][0]}", no, path)
    return Path(gens[word[0]][0], gens[word[-1]][1], tuple(word))


def load_catspec(path) -> PresentedCategory:
    return parse_catspec(_read(path), str(path))


def dump_catspec(p: PresentedCategory) -> str:
    out = [f"obj {o}" for o in p.graph.objects]
    out += [f"gen {g}: {s} -> {t}" for g, s, t in p.graph.edges]
    for lhs, rhs in p.relations:
        out.append(f"rel {_show_word(lhs)} = {_show_word(rhs)}")
    return "\n".join(out) + "\n"


def _show_word(p: Path) -> str:
    return ";".join(str(g) for g in p.word) if p.word else f"id({p.src})"


# ------------------------------------------------------------------- vgraph


def parse_vgraph(text: str, path=None, name=None) -> VGraph:
    objects, homs = [], {}
    for no, line in _lines(text):
        if m := re.fullmatch(rf"obj\s+({_NAME})", line):
            if m.group(1) in objects:
                raise ParseError(f"duplicate object {m.group(1)}", no, path)
            objects.append(m.group(1))
        elif m := re.fullmatch(rf"hom\s+({_NAME})\s+({_NAME})\s*=\s*(.*)", line):
            a, b, lit = m.groups()
            for o in (a, b):
                if o not in objects:
                    raise ParseError(f"unknown object {o}", no, path)
            if (a, b) in homs:
                raise ParseError(f"duplicate hom {a} {b}", no, path)
            homs[(a, b)] = _label_list(lit, no, path)
        else:
            raise ParseError(f"unrecognized line: {line!r}", no, path)
    full = {(a, b): homs.get((a, b), ()) for a in objects for b in objects}
    seen = {}
    for (a, b), labs in full.items():
        for lab in labs:
            if lab in seen:
                raise ParseError(f"edge label {lab} used twice", None, path)
            seen[lab] = (a, b)
    return VGraph(objects, full, FINSET, name=name or (FilePath(path).stem if path else None))


def _label_list(lit: str, no, path) -> tuple:
    lit = lit.strip()
    if not (m := re.fullmatch(r"[\[{]\s*(.*?)\s*[\]}]", lit)):
        raise ParseError(f"expected an edge-label list like {{x, y}}, got {lit!r}", no, path)
    body = m.group(1)
    labs = tuple(s.strip() for s in body.split(",")) if body else ()
    if any(not re.fullmatch(_NAME, s) for s in labs):
        raise ParseError(f"bad edge label in {lit!r}", no, path)
    if len(set(labs)) != len(labs):
        raise ParseError("repeated edge label", no, path)
    return labs


def load_vgraph(path) -> VGraph:
    return parse_vgraph(_read(path), str(path))


def vgraph_to_fingraph(X: VGraph) -> FinGraph:
    return FinGraph(X.objects, [(e, a, b) for (a, b), h in X.homs.items() for e in h])


# --------------------------------------------------------- rings and modules


def _tables(text: str, path, header: set, table_names: set):
    """Split a file into ``key value...`` header lines and named row tables."""
    fields, tables, current = {}, {}, None
    for no, line in _lines(text):
        parts = line.split()
        if parts[0] in table_names and len(parts) == 1:
            current = parts[0]
            tables[current] = []
        elif parts[0] in header:
            fields[parts[0]] = (parts[1:], no)
            current = None
        elif current is not None:
            tables[current].append((parts, no))
        else:
            raise ParseError(f"unrecognized line: {line!r}", no, path)
    return fields, tables


def _square(rows, rows_for, cols, name, path) -> dict:
    if len(rows) != len(rows_for):
        raise ParseError(f"table {name} needs {len(rows_for)} rows, got {len(rows)}", rows[-1][1] if rows else None, path)
    out = {}
    for r, (vals, no) in zip(rows_for, rows):
        if len(vals) != len(cols):
            raise ParseError(f"table {name}: row needs {len(cols)} entries", no, path)
        for c, v in zip(cols, vals):
            out[(r, c)] = v
    return out


def parse_ring(text: str, path=None) -> FiniteCommRing:
    fields, tables = _tables(text, path, {"name", "elements", "zero", "one"}, {"add", "mul"})
    for key in ("elements", "zero", "one"):
        if key not in fields:
            raise ParseError(f"missing {key} line", None, path)
    E = tuple(fields["elements"][0])
    for key in ("zero", "one"):
        vals, no = fields[key]
        if len(vals) != 1 or vals[0] not in E:
            raise ParseError(f"{key} must be one of the elements", no, path)
    for t in ("add", "mul"):
        if t not in tables:
            raise ParseError(f"missing {t} table", None, path)
    add = _square(tables["add"], E, E, "add", path)
    mul = _square(tables["mul"], E, E, "mul", path)
    for (a, b), v in list(add.items()) + list(mul.items()):
        if v not in E:
            raise ParseError(f"table entry {v} is not an element", None, path)
    name = fields["name"][0][0] if "name" in fields else (FilePath(path).stem if path else "R")
    R = FiniteCommRing(E, add, mul, fields["zero"][0][0], fields["one"][0][0], name)
    rep = R.validate()
    if not rep.ok:
        raise ParseError(f"not a commutative ring: {sorted(rep.failed_axioms())}", None, path)
    return R


def load_ring(path) -> FiniteCommRing:
    return parse_ring(_read(path), str(path))


def parse_module(text: str, R: FiniteCommRing, path=None) -> TAlgebra:
    fields, tables = _tables(text, path, {"name", "rank", "elements", "zero"}, {"add", "scale"})
    name = fields["name"][0][0] if "name" in fields else (FilePath(path).stem if path else "")
    if "rank" in fields:
        vals, no = fields["rank"]
        if len(vals) != 1 or not vals[0].isdigit():
            raise ParseError("rank must be a non-negative integer", no, path)
        return free_module(R, int(vals[0]), name)
    for key in ("elements", "zero"):
        if key not in fields:
            raise ParseError(f"missing {key} line", None, path)
    E = tuple(fields["elements"][0])
    add = _square(tables.get("add", []), E, E, "add", path)
    scale = _square(tables.get("scale", []), R.elements, E, "scale", path)
    zero = fields["zero"][0][0]
    rep = validate_module(R, E, add, scale)
    if not rep.ok:
        raise ParseError(f"not an {R.name}-module: {sorted(rep.failed_axioms())}", None, path)
    return module_algebra(R, E, add, scale, zero, name)


def load_module(path, R: FiniteCommRing) -> TAlgebra:
    return parse_module(_read(path), R, str(path))


# ------------------------------------------------------------------- operads


def parse_operad(text: str, path=None) -> SetOperad:
    E, table, unit, max_arity = {}, {}, None, None
    for no, line in _lines(text):
        if m := re.fullmatch(r"arity\s+(\d+)\s*:\s*(.*)", line):
            n = int(m.group(1))
            elems = tuple(s for s in _split_top(m.group(2), no, path) if s)
            E[n] = E.get(n, ()) + elems
        elif m := re.fullmatch(rf"unit\s+({_NAME})", line):
            unit = m.group(1)
        elif m := re.fullmatch(r"max_arity\s+(\d+)", line):
            max_arity = int(m.group(1))
        elif m := re.fullmatch(r"builtin\s+(terminal|two-monoids)(?:\s+(\d+))?", line):
            N = int(m.group(2) or 3)
            return labelled_operad(terminal_operad(N) if m.group(1) == "terminal" else two_monoid_operad(N))
        elif m := re.fullmatch(r"sub\s+(.*?)\s*=\s*([^=\s]+)", line):
            head, args = _split_call(m.group(1), no, path)
            table[(head, args)] = (m.group(2), no)
        else:
            raise ParseError(f"unrecognized line: {line!r}", no, path)
    if unit is None:
        raise ParseError("missing unit line", None, path)
    if max_arity is None:
        max_arity = max(E) if E else 1
    arity = {e: n for n, es in E.items() for e in es}
    if len(arity) != sum(len(es) for es in E.values()):
        raise ParseError("an element is listed in two arities", None, path)
    if arity.get(unit) != 1:
        raise ParseError("unit must be listed in arity 1", None, path)
    clean = {}
    for (e, args), (v, no) in table.items():
        for x in (e, v) + args:
            if x not in arity:
                raise ParseError(f"unknown operad element {x}", no, path)
        if arity[e] != len(args):
            raise ParseError(f"{e} has arity {arity[e]} but got {len(args)} arguments", no, path)
        if arity[v] != sum(arity[a] for a in args):
            raise ParseError(f"result {v} has the wrong arity", no, path)
        clean[(e, args)] = v

    def substitute(e, es):
        es = tuple(es)
        if e == unit and len(es) == 1:
            return es[0]
        if all(x == unit for x in es):
            return e
        return clean.get((e, es))

    E = {n: E.get(n, ()) for n in range(max_arity + 1)}
    return SetOperad(E, unit, substitute, max_arity, FilePath(path).stem if path else "E")


def _split_top(text: str, no, path) -> list:
    """Split on commas outside parentheses; element names may be trees like ``a(x,b(x,x))``."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses", no, path)
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ParseError("unbalanced parentheses", no, path)
    out.append("".join(cur).strip())
    return out


def _split_call(text: str, no, path) -> tuple:
    """``head(arg,...)`` where the argument group is the final balanced group."""
    text = text.strip()
    if not text.endswith(")"):
        raise ParseError(f"expected e(e1,...,en), got {text!r}", no, path)
    depth = 0
    for i in range(len(text) - 1, -1, -1):
        depth += {")": 1, "(": -1}.get(text[i], 0)
        if depth == 0:
            break
    head = text[:i].strip()
    if depth or not head:
        raise ParseError(f"expected e(e1,...,en), got {text!r}", no, path)
    return head, tuple(a for a in _split_top(text[i + 1:-1], no, path) if a)


def labelled_operad(O: SetOperad) -> SetOperad:
    """Relabel elements by printable strings (trees print as ``a(x,b(x,x))``)."""
    show = {e: _show_op(e) for n in O.E for e in O.E[n]}
    back = {v: k for k, v in show.items()}

    def substitute(e, es):
        r = O.substitute(back[e], tuple(back[x] for x in es))
        return show.get(r)

    return SetOperad({n: tuple(show[e] for e in es) for n, es in O.E.items()}, show[O.unit],
                     substitute, O.max_arity, O.name)


def _show_op(e) -> str:
    if isinstance(e, str):
        return e
    if isinstance(e, tuple) and len(e) == 2 and e[0] == "*":
        return f"m{e[1]}"
    if isinstance(e, tuple) and len(e) == 2 and isinstance(e[1], tuple):
        return f"{e[0]}(" + ",".join(_show_op(c) for c in e[1]) + ")"
    return str(e)


def load_operad(path) -> SetOperad:
    return parse_operad(_read(path), str(path))


def dump_operad(O: SetOperad) -> str:
    from .multitensor import _compositions_upto
    import itertools
    lines = [f"max_arity {O.max_arity}", f"unit {O.unit}"]
    for n in range(O.max_arity + 1):
        lines.append(f"arity {n}: " + ",".join(O.elements(n)))
    for n in range(O.max_arity + 1):
        for e in O.elements(n):
            for ks in _compositions_upto(n, O.max_arity):
                for es in itertools.product(*[O.elements(k) for k in ks]):
                    if e == O.unit or all(x == O.unit for x in es):
                        continue
                    lines.append(f"sub {e}({','.join(es)}) = {O.substitute(e, es)}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ JSON documents


def _json(text: str, path):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, path) from exc


def _need(doc: dict, key: str, path, where="document"):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"{where}: missing key {key!r}", None, path)
    return doc[key]


def _operad_from_doc(ref, path) -> SetOperad:
    if isinstance(ref, str):
        if m := re.fullmatch(r"(terminal|two-monoids)(?::(\d+))?", ref):
            N = int(m.group(2) or 3)
            return labelled_operad(terminal_operad(N) if m.group(1) == "terminal" else two_monoid_operad(N))
        base = FilePath(path).parent if path else FilePath(".")
        return load_operad(base / ref)
    raise ParseError("operad must be a builtin name or a relative operad file path", None, path)


def ecategory_from_doc(doc: dict, operad: SetOperad, path=None, where="ecategory") -> ECategory:
    objects = _need(doc, "objects", path, where)
    homs = {}
    for h in _need(doc, "homs", path, where):
        homs[(_need(h, "src", path, where), _need(h, "tgt", path, where))] = tuple(_need(h, "morphisms", path, where))
    table = {}
    for row in _need(doc, "compose", path, where):
        e = _need(row, "op", path, where)
        seq = tuple(_need(row, "seq", path, where))
        if seq:
            table[(e, seq)] = _need(row, "result", path, where)
        else:
            table[(e, (), _need(row, "obj", path, where))] = _need(row, "result", path, where)
    for (a, b) in homs:
        if a not in objects or b not in objects:
            raise ParseError(f"{where}: hom ({a}, {b}) uses an unknown object", None, path)
    return ECategory(objects, homs, operad, table, name=doc.get("name", ""))


def ecategory_to_doc(A: ECategory) -> dict:
    rows = []
    for key, v in A.table.items():
        row = {"op": _show_op(key[0]), "seq": list(key[1]), "result": v}
        if len(key) == 3:
            row["obj"] = key[2]
        rows.append(row)
    return {"name": A.name, "objects": list(A.objects),
            "homs": [{"src": a, "tgt": b, "morphisms": list(ms)} for (a, b), ms in A.homs.items() if ms],
            "compose": rows}


def parse_ecat_document(text: str, path=None) -> dict:
    """``{"operad": ..., "category": {...}}`` or a coequalizer problem with
    ``"source"``, ``"target"``, ``"f"`` and ``"g"`` (each functor a pair of
    ``objects``/``morphisms`` maps)."""
    doc = _json(text, path)
    O = _operad_from_doc(_need(doc, "operad", path), path)
    out = {"operad": O}
    if "category" in doc:
        out["category"] = ecategory_from_doc(doc["category"], O, path, "category")
    if "target" in doc:
        A = ecategory_from_doc(_need(doc, "source", path), O, path, "source")
        B = ecategory_from_doc(doc["target"], O, path, "target")
        out["source"], out["target"] = A, B
        for key in ("f", "g"):
            F = _need(doc, key, path)
            out[key] = EFunctor(A, B, dict(_need(F, "objects", path, key)), dict(_need(F, "morphisms", path, key)))
        out["targets"] = [ecategory_from_doc(t, O, path, "targets") for t in doc.get("targets", [])]
    if "category" not in out and "target" not in out:
        raise ParseError("expected a 'category' or a coequalizer problem", None, path)
    return out


def load_ecat_document(path) -> dict:
    return parse_ecat_document(_read(path), str(path))


def _hom_category(doc: dict, path, where: str) -> FinCategory:
    cells = list(doc.get("cells", []))
    mors = {f"1_{c}": (c, c) for c in cells}
    ids = {c: f"1_{c}" for c in cells}
    for name, (s, t) in doc.get("two_cells", {}).items():
        if s not in cells or t not in cells:
            raise ParseError(f"{where}: 2-cell {name} has an unknown boundary", None, path)
        mors[name] = (s, t)
    comp = {}
    for f, (s, t) in mors.items():
        comp[(ids[s], f)] = f
        comp[(f, ids[t])] = f
    for row in doc.get("composites", []):
        if len(row) != 3 or any(x not in mors for x in row):
            raise ParseError(f"{where}: composite {row} is malformed", None, path)
        f, g, h = row
        if mors[f][1] != mors[g][0] or mors[h] != (mors[f][0], mors[g][1]):
            raise ParseError(f"{where}: composite {row} is ill-typed", None, path)
        comp[(f, g)] = h
    for f, (s, t) in mors.items():
        for g, (s2, t2) in mors.items():
            if t == s2 and (f, g) not in comp:
                raise ParseError(f"{where}: missing composite of {f} and {g}", None, path)
    return FinCategory(cells, mors, ids, comp, name=where)


def parse_sesqui(text: str, path=None) -> SesquiCategory:
    """``objects``, ``identity`` (object -> 1-cell), ``homs`` (list with ``src``,
    ``tgt``, ``cells``, ``two_cells``, ``composites``) and ``compositions``
    (list with ``triple``, ``cells`` rows ``[f, g, fg]``, ``right`` rows
    ``[alpha, g, value]`` and ``left`` rows ``[f, beta, value]``).  Hom
    pairs left out are empty; compositions through identity-only homs may
    be left out."""
    doc = _json(text, path)
    objects = list(_need(doc, "objects", path))
    identity = dict(_need(doc, "identity", path))
    homs = {(a, b): FinCategory([], {}, {}, {}, name="empty") for a in objects for b in objects}
    for h in _need(doc, "homs", path):
        a, b = _need(h, "src", path, "hom"), _need(h, "tgt", path, "hom")
        if a not in objects or b not in objects:
            raise ParseError(f"hom ({a}, {b}) uses an unknown object", None, path)
        homs[(a, b)] = _hom_category(h, path, f"{a}->{b}")
    comp = {}
    for c in doc.get("compositions", []):
        a, b, cc = _need(c, "triple", path, "composition")
        L, R, T = homs[(a, b)], homs[(b, cc)], homs[(a, cc)]
        om = {(f, g): v for f, g, v in c.get("cells", [])}
        right = {(al, g): v for al, g, v in c.get("right", [])}
        left = {(f, be): v for f, be, v in c.get("left", [])}
        for f in L.objects:
            for g in R.objects:
                if (f, g) not in om:
                    raise ParseError(f"composition {a},{b},{cc}: missing 1-cell composite of {f}, {g}", None, path)
        for g in R.objects:
            for f in L.objects:
                right.setdefault((L.identities[f], g), T.identities.get(om[(f, g)]))
        for f in L.objects:
            for g in R.objects:
                left.setdefault((f, R.identities[g]), T.identities.get(om[(f, g)]))
        try:
            parts = {(0, (g,)): Functor(L, T, {f: om[(f, g)] for f in L.objects},
                                        {al: right[(al, g)] for al in L.morphisms}) for g in R.objects}
            parts.update({(1, (f,)): Functor(R, T, {g: om[(f, g)] for g in R.objects},
                                             {be: left[(f, be)] for be in R.morphisms}) for f in L.objects})
        except KeyError as exc:
            raise ParseError(f"composition {a},{b},{cc}: missing whiskering {exc.args[0]}", None, path) from exc
        comp[(a, b, cc)] = CatMultimap((L, R), T, om, parts)
    try:
        return sesqui_from_enrichment(objects, homs, identity, comp, name=doc.get("name", ""))
    except (KeyError, ValueError) as exc:
        raise ParseError(f"ill-typed composition data: {exc}", None, path) from exc


def load_sesqui(path) -> SesquiCategory:
    return parse_sesqui(_read(path), str(path))
