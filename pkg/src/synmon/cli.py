"""``synmon`` command-line interface.

Exit codes: 0 success, 1 computation error (including a failed
``--expect-count``), 2 usage or input error, 3 a failing ``reproduce`` run.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .automata import Alphabet, Dfa, Morphism
from .commutative import CLOSURE_OPS, decompose_commutative, lattice_closure
from .downset import downset_monoid, downsets
from .errors import AlphabetMismatch, MorphismKindError, RegexSyntaxError, SynmonError
from .ineq import MAX_VARIABLES, check, parse_inequality, stamp_domain
from .languages import inverse_morphism, rename_image, shuffle, to_regex
from .monoid import OrderedMonoid, Stamp, monoid_props, syntactic_monoid
from .numsemigroup import DEFAULT_M_BOUND, build_LS, generate, vs_characterization
from .regex import compile_regex


class UsageError(Exception):
    """Bad arguments or unreadable input; maps to exit code 2."""


# input helpers ------------------------------------------------------------

def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _language(regex: str | None, alphabet: str | None, dfa_path: str | None = None) -> Dfa:
    if dfa_path is not None:
        if regex is not None:
            raise UsageError("give either --regex or --dfa, not both")
        try:
            return Dfa.from_json(_read_json(dfa_path))
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"{dfa_path}: not a DFA document ({exc})") from exc
    if regex is None:
        raise UsageError("a language is required (--regex with --alphabet, or --dfa)")
    if alphabet is None:
        raise UsageError("--regex needs --alphabet")
    try:
        return compile_regex(regex, Alphabet(alphabet))
    except RegexSyntaxError as exc:
        raise UsageError(f"bad regex {regex!r}: {exc}") from exc
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _monoid_and_stamp(args) -> tuple[OrderedMonoid, Stamp | None]:
    if getattr(args, "monoid", None) is not None:
        if args.regex is not None or getattr(args, "dfa", None) is not None:
            raise UsageError("give either --monoid or a language, not both")
        try:
            return OrderedMonoid.from_json(_read_json(args.monoid)), None
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"{args.monoid}: not a valid ordered monoid ({exc})") from exc
    data = syntactic_monoid(_language(args.regex, args.alphabet, getattr(args, "dfa", None)))
    return data.monoid, data.stamp


def _letter_map(text: str) -> dict[str, str]:
    images = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        if "=" not in item:
            raise UsageError(f"map entries look like a=xy, got {item!r}")
        letter, image = (s.strip() for s in item.split("=", 1))
        if len(letter) != 1:
            raise UsageError(f"map keys must be single letters, got {letter!r}")
        images[letter] = image
    return images


def _emit_language(d: Dfa, args) -> str:
    if args.json:
        return json.dumps(d.to_json())
    if args.dot:
        return d.to_dot().rstrip("\n")
    return to_regex(d)


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


# commands -----------------------------------------------------------------

def cmd_syn(args) -> str:
    data = syntactic_monoid(_language(args.regex, args.alphabet, args.dfa))
    m = data.monoid
    if args.json:
        return _dump(m.to_json())
    if args.dot:
        return m.to_dot().rstrip("\n")
    names = m.names
    width = max(len(s) for s in names)
    lines = [f"elements: {m.n}"]
    header = " " * (width + 2) + " ".join(s.rjust(width) for s in names)
    lines.append(header)
    for i, row in enumerate(m.mult.tolist()):
        lines.append(names[i].rjust(width) + "  " + " ".join(names[j].rjust(width) for j in row))
    props = monoid_props(m)
    lines.append("idempotents: " + ", ".join(names[e] for e in sorted(props.idempotents)))
    lines.append(f"commutative: {str(props.commutative).lower()}  aperiodic: {str(props.aperiodic).lower()}")
    lines.append("accepting: " + ", ".join(names[x] for x in sorted(data.image)))
    lines.append("order (covers): " + (", ".join(f"{names[x]} < {names[y]}" for x, y in sorted(m.covers()))
                                       or "equality"))
    return "\n".join(lines)


def cmd_order(args) -> str:
    m, _ = _monoid_and_stamp(args)
    if args.json:
        return _dump({"covers": sorted(m.covers()), "strict": sorted(m.strict_pairs()),
                      "names": list(m.names)})
    if args.dot:
        return m.to_dot().rstrip("\n")
    pairs = sorted(m.covers() if not args.all else m.strict_pairs())
    if not pairs:
        return "equality"
    return "\n".join(f"{m.names[x]} < {m.names[y]}" for x, y in pairs)


def cmd_downset(args) -> str:
    base, _ = _monoid_and_stamp(args)
    p = downset_monoid(base, include_empty=args.with_empty)
    masks = downsets(base, args.with_empty)
    if args.json:
        return _dump({"monoid": p.to_json(),
                      "downsets": [[x for x in range(base.n) if mask >> x & 1] for mask in masks]})
    if args.dot:
        return p.to_dot().rstrip("\n")
    props = monoid_props(p)
    lines = [f"elements: {p.n}", f"identity: {p.names[p.identity]}",
             f"commutative: {str(props.commutative).lower()}"]
    lines += [f"  {i}: {name}" for i, name in enumerate(p.names)]
    return "\n".join(lines)


def cmd_check(args) -> tuple[str, int]:
    m, stamp = _monoid_and_stamp(args)
    if args.mode != "monoid" and stamp is None:
        raise UsageError(f"--mode {args.mode} needs a language (--regex or --dfa), not --monoid")
    domain = None if stamp is None else stamp_domain(stamp, args.mode)
    results = []
    for text in args.ineq:
        try:
            ineq = parse_inequality(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if len(ineq.variables()) > MAX_VARIABLES:
            raise UsageError(f"at most {MAX_VARIABLES} variables are supported")
        verdict = check(m, ineq, domain)
        witness = None
        if verdict.counterexample is not None:
            witness = {v: m.names[x] for v, x in verdict.counterexample.items()}
        results.append({"inequality": str(ineq), "holds": verdict.holds, "counterexample": witness})
    if args.json:
        return _dump({"mode": args.mode, "results": results}), 0
    lines = []
    for r in results:
        line = f"{r['inequality']}: {str(r['holds']).lower()}"
        if r["counterexample"]:
            line += "  counterexample " + ", ".join(f"{v}={x}" for v, x in r["counterexample"].items())
        lines.append(line)
    return "\n".join(lines), 0


def cmd_closure(args) -> tuple[str, int]:
    if not args.regex:
        raise UsageError("closure needs at least one --regex")
    gens = [_language(r, args.alphabet) for r in args.regex]
    ops = [s.strip() for s in args.ops.split(",") if s.strip()]
    try:
        family = lattice_closure(gens, ops)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    texts = sorted((to_regex(d) for d in family), key=lambda s: (len(s), s))
    if args.json:
        out = _dump({"alphabet": list(gens[0].alphabet), "ops": list(family.ops),
                     "count": len(texts), "languages": texts})
    else:
        out = "\n".join(texts + [f"count: {len(texts)}"])
    status = 0
    if args.expect_count is not None and args.expect_count != len(texts):
        print(f"expected {args.expect_count} languages, found {len(texts)}", file=sys.stderr)
        status = 1
    return out, status


def cmd_shuffle(args) -> str:
    if len(args.regex) != 2:
        raise UsageError("shuffle takes exactly two --regex arguments")
    alphabets = args.alphabet or []
    if len(alphabets) == 1:
        alphabets = alphabets * 2
    if len(alphabets) != 2:
        raise UsageError("give one --alphabet for both languages or one per --regex")
    d1, d2 = (_language(r, a) for r, a in zip(args.regex, alphabets))
    return _emit_language(shuffle(d1, d2), args)


def _morphism(source: str, target: str | None, mapping: str) -> Morphism:
    images = _letter_map(mapping)
    if target is None:
        target = "".join(sorted({c for w in images.values() for c in w}))
    try:
        return Morphism(Alphabet(source), Alphabet(target), images)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_rename(args) -> str:
    d = _language(args.regex, args.alphabet, args.dfa)
    phi = _morphism("".join(d.alphabet), args.target, args.map)
    return _emit_language(rename_image(d, phi), args)


def cmd_invhom(args) -> str:
    d = _language(args.regex, args.alphabet, args.dfa)
    phi = _morphism(args.source, "".join(d.alphabet), args.map)
    return _emit_language(inverse_morphism(d, phi), args)


def cmd_decompose(args) -> str:
    d = _language(args.regex, args.alphabet, args.dfa)
    terms = decompose_commutative(d)
    if args.json:
        return _dump({"alphabet": list(d.alphabet), "terms": [
            {a: {"exceptions": sorted(e.exceptions), "threshold": e.threshold, "period": e.period,
                 "residues": sorted(e.residues), "text": e.to_text(a)}
             for a, e in zip(t.alphabet, t.components)} for t in terms]})
    if not terms:
        return "empty language: no terms"
    return "\n".join(t.to_text() for t in terms)


def cmd_numsg(args) -> str:
    try:
        gens = sorted({int(s) for s in args.gens.split(",") if s.strip()})
    except ValueError as exc:
        raise UsageError(f"--gens takes comma-separated natural numbers, got {args.gens!r}") from exc
    if any(g < 0 for g in gens):
        raise UsageError("generators must be natural numbers")
    bound = args.check_ineq if args.check_ineq is not None else args.upto
    if bound < 1:
        raise UsageError("the bound must be at least 1")
    sg = generate(gens)
    verdicts = dict(vs_characterization(gens, bound)) if args.check_ineq is not None else {}
    rows = [{"m": m, "member": m in sg, "holds": verdicts.get(m)} for m in range(bound + 1)]
    language = to_regex(build_LS(gens))
    if args.json:
        return _dump({"generators": gens, "minimal_generators": sorted(sg.minimal_generators),
                      "gcd": sg.gcd, "conductor": sg.conductor, "language": language, "rows": rows})
    lines = [f"generators: {gens}", f"minimal generators: {sorted(sg.minimal_generators)}",
             f"gcd: {sg.gcd}", f"conductor: {'none' if sg.conductor is None else sg.conductor}",
             f"L_S: {language}"]
    head = "m    in <S>"
    if verdicts:
        head += "   x <= x^(m+1)"
    lines.append(head)
    for r in rows:
        line = f"{r['m']:<4} {str(r['member']).lower():<8}"
        if verdicts:
            line += f" {str(r['holds']).lower()}"
        lines.append(line.rstrip())
    return "\n".join(lines)


def cmd_reproduce(args) -> tuple[str, int]:
    from .reproduce import CRITERIA, run

    known = {i for i, _, _ in CRITERIA}
    ids = None
    if args.only:
        try:
            ids = [int(s) for s in args.only.split(",") if s.strip()]
        except ValueError as exc:
            raise UsageError(f"--only takes comma-separated criterion numbers, got {args.only!r}") from exc
        unknown = sorted(set(ids) - known)
        if unknown:
            raise UsageError(f"unknown criteria {unknown}; choose from {sorted(known)}")
    results = run(ids)
    passed = all(c.passed for c in results)
    if args.json:
        out = _dump({"passed": passed, "criteria": [c.to_json() for c in results]})
    else:
        lines = []
        for c in results:
            lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.id:>2}. {c.title}")
            if args.verbose or not c.passed:
                lines += [f"         {'ok  ' if k.passed else 'FAIL'} {k.label}" for k in c.checks]
        lines.append(f"{sum(c.passed for c in results)}/{len(results)} criteria passed")
        out = "\n".join(lines)
    return out, 0 if passed else 3


# parser -------------------------------------------------------------------

def _add_language(p: argparse.ArgumentParser, dfa: bool = True) -> None:
    p.add_argument("--regex", help="regular expression: + union, * star, ^k power, 0 empty, 1 empty word")
    p.add_argument("--alphabet", help="letters of the alphabet, e.g. ab")
    if dfa:
        p.add_argument("--dfa", help="DFA JSON file instead of --regex")


def _add_output(p: argparse.ArgumentParser, dot: bool = True) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit JSON")
    if dot:
        group.add_argument("--dot", action="store_true", help="emit Graphviz DOT")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="synmon", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"synmon {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("syn", help="ordered syntactic monoid of a language")
    _add_language(p)
    _add_output(p)
    p.set_defaults(func=cmd_syn)

    p = sub.add_parser("order", help="syntactic order: covering pairs or Hasse diagram")
    _add_language(p)
    p.add_argument("--monoid", help="ordered monoid JSON file")
    p.add_argument("--all", action="store_true", help="list every strict pair, not just covers")
    _add_output(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("downset", help="monoid of nonempty (or all) downsets")
    _add_language(p)
    p.add_argument("--monoid", help="ordered monoid JSON file")
    p.add_argument("--with-empty", action="store_true", help="include the empty downset")
    _add_output(p)
    p.set_defaults(func=cmd_downset)

    p = sub.add_parser("check", help="check inequalities such as 'xy = yx' or 'x^w <= x^(w+1)'")
    _add_language(p)
    p.add_argument("--monoid", help="ordered monoid JSON file")
    p.add_argument("--ineq", action="append", required=True, help="inequality (repeatable)")
    p.add_argument("--mode", choices=["monoid", "lp", "ld"], default="monoid",
                   help="range of the variables: all elements, letter images, or letter images and 1")
    _add_output(p, dot=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("closure", help="lattice closure of a finite family of languages")
    p.add_argument("--regex", action="append", help="generator (repeatable)")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--ops", default="union,intersect,quotients",
                   help=f"comma list from {', '.join(CLOSURE_OPS)}, 'quotients', 'lattice'")
    p.add_argument("--expect-count", type=int, help="exit 1 unless the family has this many members")
    _add_output(p, dot=False)
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("shuffle", help="shuffle product of two languages")
    p.add_argument("--regex", action="append", default=[], help="give twice")
    p.add_argument("--alphabet", action="append", help="once for both, or once per --regex")
    _add_output(p)
    p.set_defaults(func=cmd_shuffle)

    p = sub.add_parser("rename", help="image under a length-preserving letter map")
    _add_language(p)
    p.add_argument("--map", required=True, help="letter images, e.g. a=c,b=c")
    p.add_argument("--target", help="target alphabet (default: letters used by --map)")
    _add_output(p)
    p.set_defaults(func=cmd_rename)

    p = sub.add_parser("invhom", help="preimage under a morphism")
    _add_language(p)
    p.add_argument("--source", required=True, help="source alphabet of the morphism")
    p.add_argument("--map", required=True, help="images of source letters, e.g. x=ab,y=")
    _add_output(p)
    p.set_defaults(func=cmd_invhom)

    p = sub.add_parser("decompose", help="commutative language as a union of shuffles of one-letter languages")
    _add_language(p)
    _add_output(p, dot=False)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("numsg", help="numerical semigroup <S> and the inequalities x <= x^(m+1)")
    p.add_argument("--gens", required=True, help="comma-separated generators, e.g. 3,5")
    p.add_argument("--check-ineq", type=int, metavar="M",
                   help="check x <= x^(m+1) on the syntactic monoid of L_S for m = 0..M")
    p.add_argument("--upto", type=int, default=DEFAULT_M_BOUND, help="membership table length")
    _add_output(p, dot=False)
    p.set_defaults(func=cmd_numsg)

    p = sub.add_parser("reproduce", help="run the golden checks and report per criterion")
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.add_argument("--verbose", "-v", action="store_true", help="list every sub-check")
    _add_output(p, dot=False)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except (UsageError, AlphabetMismatch, MorphismKindError) as exc:
        print(f"synmon {args.command}: {exc}", file=sys.stderr)
        return 2
    except (SynmonError, AssertionError) as exc:
        print(f"synmon {args.command}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"synmon {args.command}: {exc}", file=sys.stderr)
        return 2
    out, status = result if isinstance(result, tuple) else (result, 0)
    print(out)
    return status


def run(argv: list[str]) -> int:
    """Entry point for embedding: same as the console script without SystemExit on bad flags."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
