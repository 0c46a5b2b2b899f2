"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (the error class name is
printed to stderr) or a negative ``equiv`` answer, 2 on usage errors.
"""
import argparse
import json
import sys

from . import classifier, constructor, core, enumerator, formats, geometry
from .errors import DirCritError, InvalidSignature


def _signature(text):
    try:
        return core.as_signature(text)
    except InvalidSignature as exc:
        raise argparse.ArgumentTypeError(f"{type(exc).__name__}: {exc}") from exc


def _labels(text):
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad label list {text!r}") from exc


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_seq(path):
    return core.parse_halfperiod(_read(path))


def _emit(text, out=None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _describe(seq):
    conj = core.is_centrally_symmetric(seq) if seq.n_points % 2 == 0 else None
    info = {
        "N": seq.n_points,
        "h": seq.h,
        "centrally_symmetric": conj is not None,
        "noncentral_general_position": core.is_noncentral_general_position(seq),
        "even_near_critical": core.is_even_near_critical(seq),
        "signature": None,
    }
    if conj is not None and core.crossing_moves(seq):
        info["signature"] = list(core.central_signature(seq).entries)
    return info


# -- commands -----------------------------------------------------------------

def cmd_generate(args):
    build = constructor.dc_inductive if args.method == "inductive" else constructor.dc_closed_form
    seq = build(args.signature)
    comments = []
    if args.with_center:
        comments.append(f"adding the center of symmetry gives {seq.n_points + 1} points "
                        f"with the same {seq.h} directions (odd-critical companion)")
    _emit(core.format_halfperiod(seq, comments), args.output)


def cmd_validate(args):
    seq = _load_seq(args.file)
    info = _describe(seq)
    print(f"valid: N={info['N']} h={info['h']}")
    for key in ("centrally_symmetric", "noncentral_general_position", "even_near_critical"):
        print(f"{key.replace('_', ' ')}: {'yes' if info[key] else 'no'}")


def cmd_signature(args):
    seq = _load_seq(args.file)
    core.conjugation(seq)
    info = _describe(seq)
    if args.json:
        print(json.dumps(info, sort_keys=True))
    else:
        print(",".join(map(str, info["signature"])))


def cmd_path(args):
    seq = _load_seq(args.file)
    print(core.point_path(seq, args.point))


def cmd_induce(args):
    seq = _load_seq(args.file)
    if args.keep is not None:
        keep = set(args.keep)
    else:
        keep = set(seq.labels) - set(args.drop)
    _emit(core.format_halfperiod(core.induce(seq, keep)), args.output)


def cmd_equiv(args):
    a, b = _load_seq(args.a), _load_seq(args.b)
    w = core.equivalent(a, b, group=args.group)
    if w is None:
        print("not equivalent")
        return 1
    print(f"equivalent: {w}")
    return 0


def cmd_classify(args):
    v = classifier.classify(args.signature)
    if args.json:
        doc = v.as_dict()
        doc["signature"] = list(args.signature.entries)
        print(json.dumps(doc, sort_keys=True))
    else:
        print(v)


def cmd_realize(args):
    v = classifier.classify(args.signature)
    seq = classifier.witness_sequence(args.signature)
    w = core.equivalent(seq, constructor.dc_closed_form(args.signature)) \
        if seq.n_points == 2 * args.signature.n else None
    print(f"witness: {v.witness}")
    if args.config_out:
        cfg = geometry.gen_family(v.witness)
        if isinstance(cfg, geometry.RegularPolygon):
            print("note: regular polygons have no single-field coordinates; no config written")
        else:
            _emit(formats.dump_config(cfg), args.config_out)
    sys.stdout.write(core.format_halfperiod(seq))
    if w is None:
        print("witness sweep is NOT equivalent to the constructed sequence")
        return 1
    print(f"equivalent: {w}")
    return 0


def cmd_sweep(args):
    cfg = formats.load_config(_read(args.config))
    _emit(core.format_halfperiod(geometry.circular_sequence(cfg)), args.output)


def cmd_enumerate(args):
    res = enumerator.enumerate_dc(args.signature, node_limit=args.node_limit)
    for i, rep in enumerate(res.classes):
        sys.stdout.write(core.format_halfperiod(rep, [f"class {i + 1}"]))
    print(f"# {res.summary()}")


def cmd_render(args):
    cfg = formats.load_config(_read(args.config))
    _emit(formats.render_svg(cfg), args.output)


def build_parser():
    p = argparse.ArgumentParser(prog="dircrit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build the sequence with a given signature")
    g.add_argument("--signature", type=_signature, required=True)
    g.add_argument("--method", choices=("closed", "inductive"), default="closed")
    g.add_argument("--with-center", action="store_true",
                   help="annotate the odd-critical companion obtained by adding the center")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("validate", help="check the allowable-sequence axioms")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    s = sub.add_parser("signature", help="central signature of a sequence")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_signature)

    pa = sub.add_parser("path", help="C/P/R/L path word of one point")
    pa.add_argument("file")
    pa.add_argument("--point", type=int, required=True)
    pa.set_defaults(func=cmd_path)

    i = sub.add_parser("induce", help="subsequence on a set of labels")
    i.add_argument("file")
    grp = i.add_mutually_exclusive_group(required=True)
    grp.add_argument("--keep", type=_labels)
    grp.add_argument("--drop", type=_labels)
    i.add_argument("-o", "--output")
    i.set_defaults(func=cmd_induce)

    e = sub.add_parser("equiv", help="search for a combinatorial equivalence")
    e.add_argument("a")
    e.add_argument("b")
    e.add_argument("--group", choices=("full", "shift"), default="full")
    e.set_defaults(func=cmd_equiv)

    c = sub.add_parser("classify", help="geometric realizability verdict")
    c.add_argument("--signature", type=_signature, required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser("realize", help="sweep the witness configuration and compare")
    r.add_argument("--signature", type=_signature, required=True)
    r.add_argument("--config-out", help="write the witness configuration here")
    r.set_defaults(func=cmd_realize)

    sw = sub.add_parser("sweep", help="circular sequence of a configuration file")
    sw.add_argument("config")
    sw.add_argument("-o", "--output")
    sw.set_defaults(func=cmd_sweep)

    en = sub.add_parser("enumerate", help="exhaustive search (small signatures)")
    en.add_argument("--signature", type=_signature, required=True)
    en.add_argument("--node-limit", type=int, default=enumerator.DEFAULT_NODE_LIMIT)
    en.set_defaults(func=cmd_enumerate)

    rd = sub.add_parser("render", help="SVG drawing of a configuration file")
    rd.add_argument("config")
    rd.add_argument("-o", "--output", required=True)
    rd.set_defaults(func=cmd_render)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        status = args.func(args)
    except DirCritError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
