"""Command-line front end.

Exit codes are shared by every command: 0 for success or an affirmative
verdict, 1 for a negative verdict or a domain failure, 2 for usage and parse
errors. ``--format json`` prints one JSON document on stdout; diagnostics go to
stderr.
"""

import argparse
import json
import os
import sys
import time

from . import __version__
from ._accel import BACKEND
from .construct import EXCEPTIONAL_LENGTHS, NotRepresentable, construct_word
from .enumeration import (
    ISOMORPHISM,
    MAX_ENUMERATION_LENGTH,
    ROTATION,
    count_circular,
    enumerate_circular,
    minimal_square_codewords,
)
from .k33 import codeword_to_walk, is_closed, simple_cycles, walk_to_codeword, walk_weight
from .pansiot import BinaryCodeword, decode_circular, decode_linear, encode_circular, encode_linear
from .words import CircularWord, find_circular_square, find_square

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

UNIQUENESS_LENGTHS = [1, 2, 3, 4, 6, 8, 11, 12, 13, 15, 16, 21]


class UsageError(Exception):
    pass


class Result:
    def __init__(self, status="ok", code=EXIT_OK, **payload):
        self.status = status
        self.code = code
        self.payload = payload


def _style(text, ok):
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return f"\033[{32 if ok else 31}m{text}\033[0m"


def _text_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    if isinstance(v, (list, tuple)):
        return " ".join(_text_value(x) for x in v)
    if isinstance(v, dict):
        return " ".join(f"{k}={_text_value(x)}" for k, x in v.items())
    return str(v)


def _emit(command, args, result, fmt, out):
    if fmt == "json":
        doc = {"command": command, "args": args, "status": result.status, "payload": result.payload}
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    out.write(f"status: {_style(result.status, result.code == EXIT_OK)}\n")
    for key, value in result.payload.items():
        if key == "claims":
            for claim in value:
                mark = _style("PASS" if claim["passed"] else "FAIL", claim["passed"])
                out.write(f"[{mark}] {claim['name']}: {claim['detail']}\n")
        else:
            out.write(f"{key}: {_text_value(value)}\n")


# -- parsing helpers --------------------------------------------------------

def _split_circular(text):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        return text[1:-1], True
    return text, False


def _kind(body):
    if body and set(body) <= {"0", "1"}:
        return "binary"
    if set(body) <= set("abc"):
        return "ternary"
    raise UsageError(f"cannot parse {body!r}: expected letters a-c or bits 0/1")


def _seed(text):
    if len(text) != 2 or text[0] == text[1] or set(text) - set("abc"):
        raise UsageError(f"seed must be two distinct letters from a-c, got {text!r}")
    return text[0], text[1]


# -- commands ---------------------------------------------------------------

def cmd_construct(a):
    if a.length < 1:
        raise UsageError("length must be at least 1")
    try:
        cw = construct_word(a.length)
    except NotRepresentable:
        return Result("not-representable", EXIT_NEGATIVE, length=a.length,
                      reason="no square-free circular ternary word of this length")
    payload = {"length": a.length, "word": str(cw)}
    if a.codeword:
        payload["codeword"] = str(encode_circular(cw)) if a.length >= 3 else None
    return Result(**payload)


def cmd_verify(a):
    body, circular = _split_circular(a.input)
    circular = circular or a.circular
    kind = _kind(body) if body else "ternary"
    payload = {"input": a.input, "kind": kind, "circular": circular}
    if kind == "binary":
        c = BinaryCodeword(body, circular=circular)
        if circular:
            if len(c) < 3:
                raise UsageError("circular codewords need length at least 3")
            cw = decode_circular(c)
            if cw is None:
                payload.update(square_free=False, reason="not a valid circular codeword", witness=None)
                return Result("ok", EXIT_NEGATIVE, **payload)
            word = cw
        else:
            word = decode_linear(c)
        payload["decoded"] = str(word)
    else:
        if circular:
            if not body:
                raise UsageError("circular words are nonempty")
            word = CircularWord(body)
        else:
            word = body
    witness = find_circular_square(word) if circular else find_square(word)
    payload["square_free"] = witness is None
    payload["witness"] = None if witness is None else {"position": witness[0], "period": witness[1]}
    return Result("ok", EXIT_OK if witness is None else EXIT_NEGATIVE, **payload)


def cmd_encode(a):
    body, circular = _split_circular(a.input)
    if _kind(body) != "ternary":
        raise UsageError("encode expects a word over a, b, c")
    try:
        code = encode_circular(CircularWord(body)) if circular else encode_linear(body)
    except ValueError as e:
        raise UsageError(str(e))
    return Result(input=a.input, codeword=str(code))


def cmd_decode(a):
    body, circular = _split_circular(a.input)
    if not body or _kind(body) != "binary":
        raise UsageError("decode expects a binary codeword")
    if circular:
        if len(body) < 3:
            raise UsageError("circular codewords need length at least 3")
        cw = decode_circular(BinaryCodeword(body, circular=True))
        if cw is None:
            return Result("error", EXIT_NEGATIVE, input=a.input, reason="not a valid circular codeword")
        return Result(input=a.input, word=str(cw))
    return Result(input=a.input, word=decode_linear(BinaryCodeword(body), _seed(a.seed)))


def cmd_enumerate(a):
    if not 1 <= a.length <= MAX_ENUMERATION_LENGTH:
        raise UsageError(f"length must lie in 1..{MAX_ENUMERATION_LENGTH}")
    dedup = ISOMORPHISM if a.iso else ROTATION
    words = enumerate_circular(a.length, dedup)
    payload = {"length": a.length, "dedup": dedup, "count": len(words)}
    if not a.count_only:
        shown = words if a.max is None else words[: a.max]
        payload["words"] = [str(w) for w in shown]
        payload["truncated"] = len(shown) < len(words)
    return Result(**payload)


def cmd_walks(a):
    if a.action == "from-codeword":
        body, _ = _split_circular(a.input)
        if not body or set(body) - {"0", "1"}:
            raise UsageError("expected a binary circular codeword")
        label = codeword_to_walk(BinaryCodeword(body, circular=True))
        if label is None:
            return Result("error", EXIT_NEGATIVE, input=a.input, reason="codeword does not spell a walk")
        closed = is_closed(label)
        return Result("ok", EXIT_OK if closed else EXIT_NEGATIVE, input=a.input, label=f"({label})",
                      closed=closed, weight=walk_weight(label))
    label, _ = _split_circular(a.input)
    if not label or set(label) - set("123"):
        raise UsageError("walk labels are strings over 1, 2, 3")
    closed = is_closed(label)
    if a.action == "check":
        return Result("ok", EXIT_OK if closed else EXIT_NEGATIVE, label=label, closed=closed,
                      weight=walk_weight(label) if closed else None)
    if not closed:
        return Result("error", EXIT_NEGATIVE, label=label, closed=False, reason="walk is not closed")
    return Result(label=label, codeword=str(walk_to_codeword(label)), weight=walk_weight(label))


# -- self test --------------------------------------------------------------

def _claims(max_length, construct_max):
    counts = {l: count_circular(l) for l in range(1, max_length + 1)}

    def short_codewords():
        want = {4: {"0101"}, 5: set(), 6: {"011011"}, 7: set(), 8: {"01110111"}}
        for l, expect in want.items():
            if l > max_length:
                continue
            got = {encode_circular(cw).bits for cw in enumerate_circular(l)}
            if got != expect:
                return False, f"length {l}: got {sorted(got)}"
        return True, "lengths 4..8 give (0101), -, (011011), -, (01110111)"

    def cycle_table():
        simple_cycles()
        return True, "11 simple cycles closed, codewords and weights match, all square-free"

    def lengths_14_to_20():
        from .construct import small_length_walk
        from .pansiot import is_square_free_codeword
        for l in (16, 19, 20):
            if not is_square_free_codeword(walk_to_codeword(small_length_walk(l))):
                return False, f"witness walk for {l} fails"
        for l in (14, 17):
            if l <= max_length and counts[l].raw_count:
                return False, f"brute force finds words of length {l}"
        return True, "walks 122122, 123313, 133133 verify; none at 14, 17"

    def exceptional_set():
        failed = []
        for l in range(1, construct_max + 1):
            try:
                construct_word(l)
            except NotRepresentable:
                failed.append(l)
        ok = set(failed) == {l for l in EXCEPTIONAL_LENGTHS if l <= construct_max}
        return ok, f"construction fails exactly at {failed} within 1..{construct_max}"

    def oracle_agreement():
        for l, r in counts.items():
            try:
                construct_word(l)
                built = True
            except NotRepresentable:
                built = False
            if built != (r.raw_count > 0):
                return False, f"length {l}: construction {built}, brute force count {r.raw_count}"
        return True, f"construction and brute force agree on 1..{max_length}"

    def uniqueness():
        got = [l for l, r in counts.items() if r.iso_count == 1]
        expect = [l for l in UNIQUENESS_LENGTHS if l <= max_length]
        return got == expect, "unique lengths " + ",".join(map(str, got))

    def minimal_squares():
        want = {2: {"00"}, 3: {"1111"}, 4: {"010101", "101010"},
                6: {"0110110110", "1101101101", "1011011011"}, 5: set(), 7: set()}
        for p, expect in want.items():
            got = minimal_square_codewords(p)
            if got != expect:
                return False, f"period {p}: {sorted(got)}"
        return True, "periods 2,3,4,6 match; 5 and 7 empty"

    return [
        ("short-length codewords", short_codewords),
        ("simple-cycle table", cycle_table),
        ("lengths 14..20", lengths_14_to_20),
        ("exceptional lengths", exceptional_set),
        ("oracle agreement", oracle_agreement),
        ("uniqueness list", uniqueness),
        ("minimal-square codewords", minimal_squares),
    ]


def cmd_selftest(a):
    if a.max_length < 1 or a.max_length > MAX_ENUMERATION_LENGTH or a.construct_max < 1:
        raise UsageError(f"--max-length must lie in 1..{MAX_ENUMERATION_LENGTH}")
    t0 = time.perf_counter()
    claims = []
    for name, check in _claims(a.max_length, a.construct_max):
        try:
            passed, detail = check()
        except Exception as e:  # a crashing check is a failed claim
            passed, detail = False, f"{type(e).__name__}: {e}"
        claims.append({"name": name, "passed": passed, "detail": detail})
    ok = all(c["passed"] for c in claims)
    payload = {"backend": BACKEND, "claims": claims, "seconds": round(time.perf_counter() - t0, 2)}
    if not ok:
        first = next(c for c in claims if not c["passed"])
        payload["counterexample"] = f"{first['name']}: {first['detail']}"
    return Result("ok" if ok else "error", EXIT_OK if ok else EXIT_NEGATIVE, **payload)


# -- entry point ------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write the output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="circsqf", description="Square-free circular ternary words.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("construct", parents=[common], help="build a square-free circular word")
    s.add_argument("length", type=int)
    s.add_argument("--codeword", action="store_true", help="also print the binary codeword")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("verify", parents=[common], help="check square-freeness")
    s.add_argument("input", help="word, (circular word), or binary codeword")
    s.add_argument("--circular", action="store_true", help="read a bare input as circular")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("encode", parents=[common], help="Pansiot-encode a word")
    s.add_argument("input")
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("decode", parents=[common], help="decode a binary codeword")
    s.add_argument("input")
    s.add_argument("--seed", default="ab", help="first two letters of a linear decoding")
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("enumerate", parents=[common], help="list or count square-free circular words")
    s.add_argument("length", type=int)
    s.add_argument("--iso", action="store_true", help="one word per isomorphism class")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--max", type=int, default=None, help="cap on listed words")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("walks", parents=[common], help="closed walks in the jump graph")
    s.add_argument("action", choices=("check", "to-codeword", "from-codeword"))
    s.add_argument("input")
    s.set_defaults(func=cmd_walks)

    s = sub.add_parser("selftest", parents=[common], help="re-check the small-length facts by brute force")
    s.add_argument("--max-length", type=int, default=30, help="enumeration bound")
    s.add_argument("--construct-max", type=int, default=500, help="construction bound")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    echo = {k: v for k, v in vars(args).items() if k not in ("func", "command", "format", "out")}
    try:
        result = args.func(args)
    except (UsageError, ValueError) as e:
        print(f"circsqf {args.command}: {e}", file=sys.stderr)
        result = Result("error", EXIT_USAGE, reason=str(e))
    if args.out:
        with open(args.out, "w") as fh:
            _emit(args.command, echo, result, args.format, fh)
    else:
        _emit(args.command, echo, result, args.format, sys.stdout)
    return result.code


if __name__ == "__main__":
    sys.exit(main())
