"""Command line front end.

Every command prints one JSON report with the keys ``command``,
``verdicts``, ``counterexamples``, ``derived_tables`` and
``discrepancy_log``, in that order.  Exit status: 0 when the checked
property holds (or the construction succeeded), 1 when it fails, 2 for
unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from ..bilinear import build_form, is_invariant
from ..errors import (
    CocycleError,
    DeconstructionError,
    ExtensionError,
    InternalInconsistency,
    NotLeibniz,
    SuperLeibnizError,
)
from ..exactla import LinearMap, Parity, Vector, format_scalar, sign, to_scalar
from ..fixtures import FIXTURES, PAIR_FIXTURES
from ..levicivita import CurvatureTensors, is_flat, levi_civita, verify_pair
from ..structure import quadratic_flat_report, verify_isometric_isomorphism
from ..superalg import DI_KINDS, DiSuperAlgebra, IdentityKind, admissible_product, check_identity
from .documents import (
    DocumentError,
    algebra_from_document,
    document_from_algebra,
    dumps,
    pair_from_document,
    products_to_list,
    read_json,
)

EXTEND_KINDS = ("central", "semidirect", "t-star", "pi-t-star", "double-even", "double-odd")
VERBS = ("validate", "classify", "levi-civita", "curvature", "flat", "quadratic-report", "extend",
         "deconstruct", "iterate-to-lie", "verify-pair", "verify-iso")


class InputError(Exception):
    """Bad command line input; exit status 2."""


# ---------------------------------------------------------------------------
# serialization helpers

def _json_value(x):
    if isinstance(x, Vector):
        return {k: format_scalar(v) for k, v in x.coords.items()}
    if isinstance(x, Fraction):
        return format_scalar(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return format_scalar(Fraction(x))
    if x is None or isinstance(x, (str, bool)):
        return x
    return str(x)


def counterexample_json(ce) -> dict:
    return {"equation": ce.equation, "labels": list(ce.labels),
            "lhs": _json_value(ce.lhs), "rhs": _json_value(ce.rhs)}


def map_json(f: LinearMap) -> dict:
    """Images of the basis vectors, zero images omitted."""
    out = {}
    for lab in f.domain.labels:
        img = f.image(lab)
        if not img.is_zero():
            out[lab] = _json_value(img)
    return out


def pair_tables(star, circ) -> dict:
    return {"star": products_to_list(star), "circ": products_to_list(circ)}


class Report:
    def __init__(self, command: dict):
        self.command = command
        self.verdicts = {}
        self.counterexamples = []
        self.derived_tables = {}
        self.discrepancy_log = []

    def fail(self, ce, where=None):
        item = counterexample_json(ce)
        if where:
            item = {"check": where, **item}
        self.counterexamples.append(item)

    def document(self) -> dict:
        return {
            "command": self.command,
            "verdicts": self.verdicts,
            "counterexamples": self.counterexamples,
            "derived_tables": self.derived_tables,
            "discrepancy_log": self.discrepancy_log,
        }


# ---------------------------------------------------------------------------
# input

def _load_doc(source, fixtures: bool, table=FIXTURES, what="algebra"):
    if fixtures:
        if source not in table:
            raise InputError(f"unknown {what} fixture {source!r}; choose from {sorted(table)}")
        return table[source]()
    return _read(source)


def _read(path):
    try:
        return read_json(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(args):
    if args.source is None:
        raise InputError("an input document is required")
    doc = _load_doc(args.source, args.fixtures)
    alg, form = algebra_from_document(doc)
    return alg, form


def _need_form(form):
    if form is None:
        raise InputError("this command needs a document with a form")
    return form


def _load_pair(args, space):
    if not args.pair:
        raise InputError("--pair is required")
    doc = _load_doc(args.pair, args.fixtures, PAIR_FIXTURES, "pair")
    return pair_from_document(space, doc)


def _load_data(args, required=True):
    if not args.data:
        if required:
            raise InputError("--data is required")
        return {}
    doc = _read(args.data)
    if not isinstance(doc, dict):
        raise InputError("data document must be a JSON object")
    return doc


def _check_fields(doc, allowed, where):
    unknown = sorted(set(doc) - set(allowed))
    if unknown:
        raise InputError(f"{where}: unknown field(s) {unknown}")


def _vector(space, value, where):
    if value is None:
        return None
    if not isinstance(value, dict):
        raise InputError(f"{where}: a vector is a map from labels to rationals")
    coords = {}
    for lab, c in value.items():
        if lab not in space.labels:
            raise InputError(f"{where}: unknown label {lab!r}")
        if isinstance(c, float):
            raise InputError(f"{where}: floats are not allowed")
        coords[lab] = to_scalar(c)
    return Vector(space, coords)


def _matrix(space, value, where):
    """A map given by the images of basis vectors; missing images are zero."""
    if value is None:
        return None
    if not isinstance(value, dict):
        raise InputError(f"{where}: a map is given as {{label: image vector}}")
    n = space.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for lab, img in value.items():
        if lab not in space.labels:
            raise InputError(f"{where}: unknown label {lab!r}")
        j = space.index(lab)
        for i, c in enumerate(_vector(space, img, f"{where}[{lab}]").dense):
            m[i][j] = c
    return m


def _table2(space, entries, where):
    n = space.dim
    t = [[Fraction(0)] * n for _ in range(n)]
    for k, e in enumerate(entries or []):
        loc = f"{where}[{k}]"
        if not isinstance(e, dict) or set(e) != {"a", "b", "value"}:
            raise InputError(f"{loc}: expected {{a, b, value}}")
        for lab in (e["a"], e["b"]):
            if lab not in space.labels:
                raise InputError(f"{loc}: unknown label {lab!r}")
        t[space.index(e["a"])][space.index(e["b"])] = to_scalar(e["value"])
    return t


def _scalar_field(doc, key, where):
    v = doc.get(key, 0)
    if isinstance(v, float):
        raise InputError(f"{where}.{key}: floats are not allowed")
    return to_scalar(v)


# ---------------------------------------------------------------------------
# commands

def cmd_validate(args, rep):
    alg, form = _load(args)
    rep.verdicts["valid"] = True
    rep.verdicts["has form"] = form is not None
    rep.derived_tables["dimension"] = f"{len(alg.space.even_basis)}|{len(alg.space.odd_basis)}"
    return True


def cmd_classify(args, rep):
    alg, form = _load(args)
    for kind in IdentityKind:
        if kind in DI_KINDS:
            continue
        r = check_identity(alg, kind)
        rep.verdicts[kind.value] = r.holds
        if not r.holds:
            rep.fail(r.counterexample, kind.value)
    if form is not None:
        r = is_invariant(alg, form)
        rep.verdicts["invariant"] = r.holds
        if not r.holds:
            rep.fail(r.counterexample, "invariant")
    return True


def cmd_levi_civita(args, rep):
    alg, form = _load(args)
    pair = levi_civita(alg, _need_form(form))
    check = verify_pair(alg, form, pair.star, pair.circ)
    t = alg.tensor
    par = alg.space.parities
    n = alg.space.dim
    half_tensor = tuple(tuple(tuple(c / 2 for c in t[i][j]) for j in range(n)) for i in range(n))
    # v∘u = ½(-1)^{|u||v|} u•v when • is symmetric Leibniz with an invariant form
    half_flipped = tuple(tuple(tuple(sign(par[i] * par[j]) * c / 2 for c in t[j][i])
                               for j in range(n)) for i in range(n))
    rep.verdicts["torsion and compatibility"] = check.holds
    rep.verdicts["star = circ"] = pair.star.tensor == pair.circ.tensor
    rep.verdicts["star = half product"] = pair.star.tensor == half_tensor
    rep.verdicts["circ = half product"] = pair.circ.tensor == half_tensor
    rep.verdicts["circ = half super-flipped product"] = pair.circ.tensor == half_flipped
    rep.derived_tables.update(pair_tables(pair.star, pair.circ))
    if args.emit:
        _emit(args.emit, {"name": f"Levi-Civita pair of {args.source}",
                          **pair_tables(pair.star, pair.circ), "metadata": {}})
    if not check.holds:
        raise InternalInconsistency("solved pair fails torsion or compatibility")
    return True


def _leibniz_gate(alg, rep):
    r = check_identity(alg, IdentityKind.LEFT_LEIBNIZ)
    rep.verdicts["left-leibniz"] = r.holds
    if not r.holds:
        rep.fail(r.counterexample, "left-leibniz")
    return r.holds


def cmd_curvature(args, rep):
    alg, form = _load(args)
    pair = levi_civita(alg, _need_form(form))
    K = CurvatureTensors(pair, alg)
    lab = alg.space.labels
    n = alg.space.dim
    entries = []
    zero = {name: True for name in K.NAMES}
    for i in range(n):
        for j in range(n):
            for name, m in zip(K.NAMES, K.matrices(i, j)):
                for k in range(n):
                    col = [m[r][k] for r in range(n)]
                    if any(col):
                        zero[name] = False
                        entries.append({"tensor": name, "u": lab[i], "v": lab[j], "w": lab[k],
                                        "value": _json_value(Vector.from_dense(alg.space, col))})
    for name in K.NAMES:
        rep.verdicts[f"{name} = 0"] = zero[name]
    hit = K.first_nonzero()
    if hit is not None:
        name, u, v, w, val = hit
        rep.counterexamples.append({"check": "curvature", "equation": name,
                                    "labels": [u, v, w], "lhs": _json_value(val), "rhs": {}})
    rep.derived_tables["curvature"] = entries
    return all(zero.values())


def cmd_flat(args, rep):
    alg, form = _load(args)
    form = _need_form(form)
    if not _leibniz_gate(alg, rep):
        rep.verdicts["flat"] = False
        rep.discrepancy_log.append("flatness is only decided for left Leibniz superalgebras")
        return False
    r = is_flat(alg, form)
    rep.verdicts["flat"] = r.holds
    if not r.holds:
        rep.fail(r.counterexample, "flat")
    return r.holds


def cmd_quadratic_report(args, rep):
    alg, form = _load(args)
    q = quadratic_flat_report(alg, _need_form(form))
    rep.verdicts.update(q.verdicts)
    for key, sub in q.details.items():
        rep.derived_tables[key] = [_json_value(v) for v in sub.basis_vectors]
    return q.consistent


def _emit(path, doc):
    Path(path).write_text(dumps(doc), encoding="utf-8")


def _core_form(form, alg, data):
    if form is not None:
        return form
    if alg.space.dim:
        raise InputError("this construction needs a document with a form")
    return build_form(alg.space, Parity.parse(data.get("form_parity", "even")), [])


def _base_pair(args, alg, form):
    if args.pair:
        return _load_pair(args, alg.space)
    return levi_civita(alg, _need_form(form)).as_disuperalgebra()


def _extend_central(args, alg, form, data, rep):
    from ..extensions import CentralExtensionData, central_extension
    _check_fields(data, ("line_parity", "label", "mu", "gamma"), "data")
    base = _base_pair(args, alg, form)
    sp = alg.space
    cd = CentralExtensionData.from_tables(_table2(sp, data.get("mu"), "mu"),
                                          _table2(sp, data.get("gamma"), "gamma"))
    return central_extension(base, cd, data.get("line_parity", "even"), data.get("label", "e"))


def _extend_semidirect(args, alg, form, data, rep):
    from ..extensions import AdmissibleTuple, semidirect_product
    _check_fields(data, ("line_parity", "label", "delta", "D", "xi", "G", "a0", "b0",
                         "alpha", "beta"), "data")
    base = _base_pair(args, alg, form)
    sp = alg.space
    t = AdmissibleTuple(*(_matrix(sp, data.get(k), k) for k in ("delta", "D", "xi", "G")),
                        *(_vector(sp, data.get(k), k) for k in ("a0", "b0")),
                        _scalar_field(data, "alpha", "data"), _scalar_field(data, "beta", "data"))
    return semidirect_product(base, t, data.get("line_parity", "even"), data.get("label", "d"))


def _extend_t_star(alg, data, shifted):
    from ..extensions import CocycleTensor, pi_t_star_extension, t_star_extension
    _check_fields(data, ("omega",), "data")
    values = {}
    for k, e in enumerate(data.get("omega", [])):
        if not isinstance(e, dict) or set(e) != {"u", "v", "w", "value"}:
            raise InputError(f"omega[{k}]: expected {{u, v, w, value}}")
        for lab in (e["u"], e["v"], e["w"]):
            if lab not in alg.space.labels:
                raise InputError(f"omega[{k}]: unknown label {lab!r}")
        values[(e["u"], e["v"], e["w"])] = to_scalar(e["value"])
    omega = CocycleTensor.from_values(alg.space, values, Parity(int(shifted)))
    return (pi_t_star_extension if shifted else t_star_extension)(alg, omega)


def _double_data(space, form, data, line_parity):
    from ..extensions import DoubleExtensionData, variant_of
    _check_fields(data, ("delta", "D", "delta_star", "G", "a0", "b0", "c0", "alpha", "lambda",
                         "lie_mode", "form_parity", "e_label", "d_label"), "data")
    lie = bool(data.get("lie_mode", False))
    return DoubleExtensionData(
        variant_of(form.parity, line_parity),
        *(_matrix(space, data.get(k), k) for k in ("delta", "D", "delta_star", "G")),
        *(_vector(space, data.get(k), k) for k in ("a0", "b0", "c0")),
        _scalar_field(data, "alpha", "data"), _scalar_field(data, "lambda", "data"), lie)


def _extend_double(args, alg, form, data, odd_line, rep):
    from ..extensions import double_extension
    form = _core_form(form, alg, data)
    dd = _double_data(alg.space, form, data, Parity(int(odd_line)))
    rep.verdicts["variant " + dd.variant] = True
    return double_extension((alg, form), dd, e_label=data.get("e_label", "e"),
                            d_label=data.get("d_label", "d"))


def cmd_extend(args, rep):
    alg, form = _load(args)
    data = _load_data(args, required=False)
    kind = args.kind
    try:
        if kind == "central":
            out = _extend_central(args, alg, form, data, rep)
        elif kind == "semidirect":
            out = _extend_semidirect(args, alg, form, data, rep)
        elif kind in ("t-star", "pi-t-star"):
            out = _extend_t_star(alg, data, kind == "pi-t-star")
        else:
            out = _extend_double(args, alg, form, data, kind == "double-odd", rep)
    except (ExtensionError, CocycleError, NotLeibniz) as exc:
        rep.verdicts["constructed"] = False
        rep.counterexamples.append({"check": kind, "equation": exc.equation,
                                    "labels": list(exc.witness) if exc.witness else [],
                                    "message": str(exc)})
        return False
    rep.verdicts["constructed"] = True
    if isinstance(out, DiSuperAlgebra):
        algebra, new_form = admissible_product(out), None
        rep.derived_tables.update(pair_tables(out.star, out.circ))
        rep.discrepancy_log.extend(out.discrepancies)
    else:
        algebra, new_form = out.algebra, out.form
        rep.verdicts.update(out.verdicts)
        rep.discrepancy_log.extend(out.discrepancies)
        if out.pair is not None:
            rep.derived_tables.update(pair_tables(out.pair.star, out.pair.circ))
    doc = document_from_algebra(algebra, new_form, name=f"{kind} extension of {args.source}",
                                metadata={"construction": kind})
    rep.derived_tables["algebra"] = doc
    if args.emit:
        _emit(args.emit, doc)
    return True


def _step_json(r) -> dict:
    core_alg, core_form = r.core
    d = r.data
    vec = {k: _json_value(getattr(d, k)) for k in ("a0", "b0", "c0")}
    maps = {k: (map_json(getattr(d, k)) if isinstance(getattr(d, k), LinearMap) else None)
            for k in ("delta", "D", "delta_star", "G")}
    return {
        "variant": r.variant,
        "e": _json_value(r.e_vector),
        "d": _json_value(r.d_vector),
        "core": document_from_algebra(core_alg, core_form, name="core"),
        "data": {**maps, **vec, "alpha": _json_value(to_scalar(d.alpha)),
                 "lambda": _json_value(to_scalar(d.lam)), "lie_mode": d.lie_mode},
        "change_of_basis": map_json(r.change_of_basis),
    }


def cmd_deconstruct(args, rep):
    from ..extensions import deconstruct_double_extension
    alg, form = _load(args)
    data = _load_data(args, required=False)
    _check_fields(data, ("e", "lie_mode"), "data")
    e = _vector(alg.space, data.get("e"), "e")
    try:
        r = deconstruct_double_extension(alg, _need_form(form), e=e,
                                         lie_mode=bool(data.get("lie_mode", False)))
    except (DeconstructionError, NotLeibniz) as exc:
        rep.verdicts["deconstructed"] = False
        rep.counterexamples.append({"check": "deconstruct", "equation": exc.equation,
                                    "labels": list(exc.witness or ()), "message": str(exc)})
        return False
    rep.verdicts["deconstructed"] = True
    seq = {"steps": [_step_json(r)]}
    rep.derived_tables["sequence"] = seq
    if args.emit:
        _emit(args.emit, seq)
    return True


def cmd_iterate_to_lie(args, rep):
    from ..extensions import iterate_to_lie
    alg, form = _load(args)
    try:
        steps = iterate_to_lie(alg, _need_form(form))
    except (DeconstructionError, NotLeibniz) as exc:
        rep.verdicts["reached lie"] = False
        rep.counterexamples.append({"check": "iterate-to-lie", "equation": exc.equation,
                                    "labels": list(exc.witness or ()), "message": str(exc)})
        return False
    final = steps[-1].core if steps else (alg, form)
    rep.verdicts["reached lie"] = check_identity(final[0], IdentityKind.LIE).holds
    seq = {"steps": [_step_json(r) for r in steps],
           "lie_core": document_from_algebra(final[0], final[1], name="lie core")}
    rep.derived_tables["sequence"] = seq
    if args.emit:
        _emit(args.emit, seq)
    return rep.verdicts["reached lie"]


def cmd_verify_pair(args, rep):
    alg, form = _load(args)
    pair = _load_pair(args, alg.space)
    r = verify_pair(alg, _need_form(form), pair.star, pair.circ)
    torsion = [v for v in r.violations if v.equation == "torsion"]
    rep.verdicts["torsion"] = not torsion
    rep.verdicts["compatibility"] = len(torsion) == len(r.violations)
    rep.verdicts["levi-civita"] = r.holds
    for v in r.violations:
        rep.fail(v)
    return r.holds


def cmd_verify_iso(args, rep):
    alg, form = _load(args)
    data = _load_data(args)
    _check_fields(data, ("target", "map"), "data")
    if "target" not in data or "map" not in data:
        raise InputError("data needs 'target' (an algebra document) and 'map'")
    talg, tform = algebra_from_document(data["target"])
    m = data["map"]
    if not isinstance(m, dict):
        raise InputError("map: expected {label: image vector}")
    images = {}
    for lab in alg.space.labels:
        images[lab] = _vector(talg.space, m.get(lab, {}), f"map[{lab}]")
    extra = sorted(set(m) - set(alg.space.labels))
    if extra:
        raise InputError(f"map: unknown source label(s) {extra}")
    phi = LinearMap.from_images(alg.space, talg.space, images, Parity.EVEN)
    r = verify_isometric_isomorphism((alg, _need_form(form)), (talg, _need_form(tform)), phi)
    rep.verdicts["isometric isomorphism"] = r.holds
    if not r.holds:
        rep.fail(r.counterexample)
    return r.holds


COMMANDS = {
    "validate": cmd_validate,
    "classify": cmd_classify,
    "levi-civita": cmd_levi_civita,
    "curvature": cmd_curvature,
    "flat": cmd_flat,
    "quadratic-report": cmd_quadratic_report,
    "extend": cmd_extend,
    "deconstruct": cmd_deconstruct,
    "iterate-to-lie": cmd_iterate_to_lie,
    "verify-pair": cmd_verify_pair,
    "verify-iso": cmd_verify_iso,
}


# ---------------------------------------------------------------------------
# entry point

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superleibniz",
                                description="Exact checks and constructions for Leibniz "
                                            "superalgebras with pseudo-Euclidean forms.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")
    for verb in VERBS:
        s = sub.add_parser(verb, help=COMMANDS[verb].__name__.replace("cmd_", "").replace("_", " "))
        if verb == "extend":
            s.add_argument("kind", choices=EXTEND_KINDS)
        s.add_argument("source", nargs="?", help="algebra document, or fixture name with --fixtures")
        s.add_argument("--emit", metavar="PATH", help="write the derived document here")
        s.add_argument("--data", metavar="PATH", help="construction or map data (JSON)")
        s.add_argument("--pair", metavar="PATH", help="(star, circ) pair document")
        s.add_argument("--json", action="store_true", default=True,
                       help="JSON report on stdout (the default and only format)")
        s.add_argument("--fixtures", action="store_true",
                       help="read SOURCE and --pair as built-in fixture names; "
                            "without SOURCE list the fixtures")
    return p


def parse_args(argv=None) -> argparse.Namespace:
    # argparse cannot intermix subparsers, so the verb's own parser does the work;
    # this lets an optional SOURCE follow flags (extend semidirect --fixtures example2)
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    if not argv or argv[0] not in VERBS:
        return parser.parse_args(argv)
    sub = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    args = sub.choices[argv[0]].parse_intermixed_args(argv[1:])
    args.verb = argv[0]
    return args


def _command_echo(args) -> dict:
    echo = {"verb": args.verb}
    if args.verb == "extend":
        echo["kind"] = args.kind
    for key in ("source", "pair", "data", "emit"):
        val = getattr(args, key)
        if val is not None:
            echo[key] = val
    echo["fixtures"] = bool(args.fixtures)
    return echo


def _fixture_listing(rep):
    rep.verdicts["fixtures"] = True
    rep.derived_tables["fixtures"] = {name: build() for name, build in FIXTURES.items()}
    rep.derived_tables["pair_fixtures"] = {name: build() for name, build in PAIR_FIXTURES.items()}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = parse_args(argv)
    rep = Report(_command_echo(args))
    try:
        if args.fixtures and args.source is None:
            _fixture_listing(rep)
            ok = True
        else:
            ok = COMMANDS[args.verb](args, rep)
    except (InputError, DocumentError) as exc:
        err.write(f"superleibniz: input error: {exc}\n")
        return 2
    except InternalInconsistency as exc:
        err.write(f"superleibniz: internal inconsistency: {exc}\n")
        return 2
    except SuperLeibnizError as exc:
        # parity violations, degenerate forms and similar rejections of the input
        err.write(f"superleibniz: {type(exc).__name__}: {exc}\n")
        return 2
    out.write(dumps(rep.document()))
    return 0 if ok else 1


def main(argv=None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:
        # argparse usage errors
        return 2 if exc.code not in (0, None) else 0


if __name__ == "__main__":
    sys.exit(main())
