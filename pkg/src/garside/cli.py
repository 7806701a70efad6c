"""
Command-line front end.

    garside nf braid:3 "a1 a2 a1"
    garside conj braid:3 a1 a2
    garside root gn:braid:3:2 "d^1 [ a1 | ]" 2
    garside --json classes braid:3 --max-t 1

Words are whitespace separated terms ``gen`` or ``gen^k``.  Generators are
``a<i>`` (braids), ``x<i>`` (torus groups), ``d`` (δ) and ``D`` (Δ); braid
simples may also be written as permutations ``<2,1,3>``; ``.`` is ignored so
printed normal forms parse back.  In ``G(n)`` a term ``d^k [ w1 | … | wn ]``
is ``δ^k(w1, …, wn)`` with each ``wi`` a word of the base group.

Exit codes: 0 success, 1 negative answer (not conjugate, no root), 2 usage or
parse error, 3 undecided classes, 4 resource cap hit, 5 internal
verification failure.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import re
import shlex
import sys
from fractions import Fraction

from .conjugacy import MEMBER_CAP, Conjugate, are_conjugate, summit_set
from .core import (Element, GarsideStructure, delta_power, element_text,
                   geodesic_length, identity, multiply, power, simple_element)
from .errors import InputError, ResourceError, VerificationError
from .instances import BraidStructure, CyclicStructure, TorusStructure
from .instances import braid_structure, cyclic_structure, torus_structure
from .oracle import bfs_word_length, brute_conjugacy, brute_left_divisors
from .powers import ENUMERATION_CAP, classes_below, translation_bounds
from .product import GN_SIMPLE_CAP, GnStructure, gn_make, gn_structure
from .roots import Root, nth_root

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_UNDECIDED, EXIT_RESOURCE, EXIT_INTERNAL = range(6)


class ParseError(InputError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at column {position + 1}")
        self.position = position


# -- group specifiers ----------------------------------------------------


def parse_group(spec: str, gn_cap: int = GN_SIMPLE_CAP) -> GarsideStructure:
    """``braid:n``, ``torus:p1,p2,…``, ``z`` or ``gn:<base>:<n>``."""
    spec = spec.strip()
    try:
        if spec == "z":
            return cyclic_structure()
        if spec.startswith("braid:"):
            return braid_structure(int(spec[6:]))
        if spec.startswith("torus:"):
            return torus_structure(int(p) for p in spec[6:].split(","))
        if spec.startswith("gn:"):
            base, _, n = spec[3:].rpartition(":")
            return gn_structure(parse_group(base, gn_cap), int(n), gn_cap)
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad group specifier {spec!r}") from None
    raise InputError(f"unknown group specifier {spec!r}")


# -- element words -------------------------------------------------------

_NAME = re.compile(r"([A-Za-z])(\d*)")
_EXP = re.compile(r"\^\s*(-?\d+)")


class _WordParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t.":
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def exponent(self) -> int:
        m = _EXP.match(self.text, self.pos)
        if not m:
            return 1
        self.pos = m.end()
        return int(m.group(1))

    def word(self, st: GarsideStructure, stop: str = "") -> Element:
        out = identity(st)
        while True:
            c = self.peek()
            if not c or c in stop:
                return out
            out = multiply(out, self.term(st))

    def term(self, st: GarsideStructure) -> Element:
        start = self.pos
        if self.text[start] == "<":
            end = self.text.find(">", start)
            if end < 0:
                raise self.error("unterminated permutation literal")
            if not isinstance(st, BraidStructure):
                raise self.error(f"permutation literals need a braid group, not {st.name}")
            try:
                s = st.parse_simple(self.text[start:end + 1])
            except InputError as exc:
                raise self.error(str(exc), start) from None
            self.pos = end + 1
            return power(simple_element(st, s), self.exponent())
        m = _NAME.match(self.text, start)
        if not m:
            raise self.error(f"unexpected character {self.text[start]!r}")
        self.pos = m.end()
        letter, index = m.group(1), m.group(2)
        k = self.exponent()
        if letter == "D" and not index:
            return delta_power(st, k)
        if letter == "d" and not index:
            if isinstance(st, GnStructure):
                return self.gn_term(st, k)
            if isinstance(st, CyclicStructure):
                return delta_power(st, k)
        if index and (letter == "a" and isinstance(st, BraidStructure)
                      or letter == "x" and isinstance(st, TorusStructure)):
            try:
                atom = st.generator(int(index))
            except InputError as exc:
                raise self.error(str(exc), start) from None
            return power(simple_element(st, atom), k)
        raise self.error(f"unknown generator {m.group(0)!r} for {st.name}", start)

    def gn_term(self, st: GnStructure, k: int) -> Element:
        base = st.base
        if self.peek() != "[":
            return gn_make(st, k, (identity(base),) * st.n)
        open_at = self.pos
        self.pos += 1
        comps = [self.word(base, "|]")]
        while self.peek() == "|":
            self.pos += 1
            comps.append(self.word(base, "|]"))
        if self.peek() != "]":
            raise self.error("expected ']'")
        self.pos += 1
        if len(comps) != st.n:
            raise self.error(f"G({st.n}) brackets need {st.n} components, got {len(comps)}", open_at)
        return gn_make(st, k, comps)


def parse_element(group: GarsideStructure | str, word: str) -> Element:
    st = parse_group(group) if isinstance(group, str) else group
    p = _WordParser(word)
    out = p.word(st)
    if p.peek():
        raise p.error(f"unexpected {p.peek()!r}")
    return out


# -- commands ------------------------------------------------------------


def _rational(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def _caps(args) -> dict:
    if args.cap is None:
        return {"member": MEMBER_CAP, "gn": GN_SIMPLE_CAP, "enum": ENUMERATION_CAP}
    return {"member": args.cap, "gn": args.cap, "enum": args.cap}


def _cmd_nf(args, st, caps):
    a = parse_element(st, args.word)
    result = {"normal_form": element_text(a), "inf": a.inf, "sup": a.sup,
              "len": a.canonical_length, "geodesic_length": geodesic_length(a)}
    text = [element_text(a), f"inf={a.inf} sup={a.sup} len={a.canonical_length}"]
    return EXIT_OK, result, [], text


def _cmd_conj(args, st, caps):
    a, b = parse_element(st, args.g), parse_element(st, args.h)
    cert = are_conjugate(a, b, args.kind, caps["member"])
    if isinstance(cert, Conjugate):
        u = element_text(cert.conjugator)
        return EXIT_OK, "conjugate", [{"type": "conjugator", "value": u}], ["conjugate", f"conjugator: {u}"]
    certs = [{"type": "summit-fingerprints", "a": list(cert.fingerprint_a), "b": list(cert.fingerprint_b)}]
    return EXIT_NEGATIVE, "not-conjugate", certs, ["not-conjugate"]


def _summit(kind):
    def run(args, st, caps):
        s = summit_set(parse_element(st, args.g), kind, caps["member"])
        members = [{"member": element_text(m), "conjugator": element_text(s.conjugators[m])}
                   for m in s.sorted_members()]
        result = {"kind": kind, "inf_s": s.inf_s, "sup_s": s.sup_s, "size": len(s), "members": members}
        text = [f"{kind} summit set: {len(s)} members, inf_s={s.inf_s} sup_s={s.sup_s}"]
        text += [f"{m['member']}\t{m['conjugator']}" for m in members]
        return EXIT_OK, result, [], text
    return run


def _cmd_root(args, st, caps):
    g = parse_element(st, args.g)
    r = nth_root(g, args.n, caps["member"], caps["gn"])
    if isinstance(r, Root):
        x = element_text(r.x)
        certs = [{"type": "diagonal", "value": element_text(r.diagonal)},
                 {"type": "conjugator", "value": element_text(r.conjugator)}]
        return EXIT_OK, {"found": True, "root": x}, certs, [x]
    result = {"found": False, "uss_size": r.uss_size}
    return EXIT_NEGATIVE, result, [], [f"no-root (ultra summit set size {r.uss_size})"]


def _cmd_tnum(args, st, caps):
    tb = translation_bounds(parse_element(st, args.g), args.power)
    result = {"lower": _rational(tb.lower), "upper": _rational(tb.upper),
              "lower_strict": tb.lower_strict, "witness_power": tb.witness_power}
    bracket = "(" if tb.lower_strict else "["
    return EXIT_OK, result, [], [f"t in {bracket}{tb.lower}, {tb.upper}] (N={tb.witness_power})"]


def _cmd_classes(args, st, caps):
    try:
        r = Fraction(args.max_t)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational {args.max_t!r}") from None
    found = classes_below(st, r, args.n_max, caps["enum"], caps["member"])
    rows = [{"representative": element_text(c.representative), "status": c.status,
             "summit_size": c.summit_size} for c in found]
    code = EXIT_UNDECIDED if any(c.status == "undecided" for c in found) else EXIT_OK
    text = [f"{row['status']}\t{row['representative']}" for row in rows]
    return code, {"max_t": _rational(r), "classes": rows}, [], text


def _cmd_oracle(args, st, caps):
    a = parse_element(st, args.g)
    if args.oracle == "bfs":
        n = bfs_word_length(st, a, args.radius)
        return EXIT_OK, n, [], ["exceeded" if n is None else str(n)]
    if args.oracle == "divisors":
        divs = sorted(map(element_text, brute_left_divisors(a)))
        return EXIT_OK, divs, [], divs
    found = brute_conjugacy(a, parse_element(st, args.h), args.length)
    label = "true" if found else "unknown"
    return EXIT_OK, found, [], [label]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="garside", description="Garside group computations.")
    p.add_argument("--json", action="store_true", help="emit one JSON record per command")
    p.add_argument("--batch", metavar="FILE", help="run one command per line; JSON records out")
    p.add_argument("--cap", type=int, help="override every resource cap")
    sub = p.add_subparsers(dest="command")

    def cmd(name, fn, *positional, help=None):
        q = sub.add_parser(name, help=help)
        q.add_argument("group")
        for arg in positional:
            q.add_argument(arg)
        q.set_defaults(fn=fn)
        return q

    cmd("nf", _cmd_nf, "word", help="normal form")
    q = cmd("conj", _cmd_conj, "g", "h", help="conjugacy with certificate")
    q.add_argument("--kind", choices=("super", "ultra"), default="ultra")
    cmd("sss", _summit("super"), "g", help="super summit set")
    cmd("uss", _summit("ultra"), "g", help="ultra summit set")
    q = cmd("root", _cmd_root, "g", help="n-th root via G(n)")
    q.add_argument("n", type=int)
    q = cmd("tnum", _cmd_tnum, "g", help="translation number interval")
    q.add_argument("--power", type=int, default=16)
    q = cmd("classes", _cmd_classes, help="conjugacy classes with small translation number")
    q.add_argument("--max-t", required=True)
    q.add_argument("--n-max", type=int, default=64)

    oracle = sub.add_parser("oracle", help="brute-force validators")
    osub = oracle.add_subparsers(dest="oracle", required=True)
    q = osub.add_parser("bfs")
    q.add_argument("group"), q.add_argument("g"), q.add_argument("--radius", type=int, default=4)
    q = osub.add_parser("divisors")
    q.add_argument("group"), q.add_argument("g")
    q = osub.add_parser("conj")
    q.add_argument("group"), q.add_argument("g"), q.add_argument("h")
    q.add_argument("--length", type=int, default=4)
    oracle.set_defaults(fn=_cmd_oracle)
    return p


def _query(args) -> dict:
    skip = {"fn", "json", "batch", "cap", "group"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def _execute(args) -> tuple[int, dict, list[str]]:
    caps = _caps(args)
    record = {"group": args.group, "query": _query(args), "result": None, "certificates": []}
    try:
        st = parse_group(args.group, caps["gn"])
        code, result, certs, text = args.fn(args, st, caps)
        record.update(result=result, certificates=certs)
    except ResourceError as exc:
        code, text = EXIT_RESOURCE, [f"error: {exc}"]
        record["error"] = str(exc)
    except VerificationError as exc:
        code, text = EXIT_INTERNAL, [f"internal error: {exc}"]
        record["error"] = str(exc)
    except InputError as exc:
        code, text = EXIT_USAGE, [f"error: {exc}"]
        record["error"] = str(exc)
    except ValueError as exc:  # domain errors from the library
        code, text = EXIT_USAGE, [f"error: {exc}"]
        record["error"] = str(exc)
    record["exit"] = code
    return code, record, text


def _dump(record: dict) -> str:
    return json.dumps(record, sort_keys=True, ensure_ascii=False)


def _run_batch(parser, path: str, out) -> int:
    worst = EXIT_OK
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            err = io.StringIO()
            try:
                with contextlib.redirect_stderr(err):
                    args = parser.parse_args(shlex.split(line))
                if args.command is None:
                    raise SystemExit(EXIT_USAGE)
                args.cap = getattr(args, "cap", None)
                code, record, _ = _execute(args)
            except (SystemExit, ValueError):
                code = EXIT_USAGE
                record = {"group": None, "query": {"line": line}, "result": None,
                          "certificates": [], "error": err.getvalue().strip() or "usage error",
                          "exit": code}
            print(_dump(record), file=out, flush=True)
            worst = max(worst, code)
    return worst


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.batch:
        try:
            return _run_batch(parser, args.batch, out)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    code, record, text = _execute(args)
    if args.json:
        print(_dump(record), file=out)
    else:
        stream = sys.stderr if "error" in record else out
        for line in text:
            print(line, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
