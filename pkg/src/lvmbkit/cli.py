"""Command-line entry point: ``lvmb-kit <command> [options]``."""

import argparse
import logging
import os
import sys

from .errors import LvmbError, MalformedInput
from .generators import EXAMPLES, by_name
from .jsonio import configuration_to_json, dumps, load_json, parse_configuration, parse_gale
from .report import Analysis

log = logging.getLogger("lvmbkit")

COMMANDS = {
    "validate": Analysis.validation,
    "gale": Analysis.gale_fragment,
    "cohomology": Analysis.cohomology,
    "char-class": Analysis.char_class,
    "chern": Analysis.chern,
    "invariants": Analysis.invariants,
    "balanced-check": Analysis.balanced,
    "skt-check": Analysis.skt,
    "report": Analysis.report,
}


def _parser():
    p = argparse.ArgumentParser(prog="lvmb-kit",
                                description="Invariants of LVMB manifolds from fan data.")
    p.add_argument("command", choices=sorted(list(COMMANDS) + ["examples"]))
    p.add_argument("params", nargs="*", help="for examples: generator name and integers")
    p.add_argument("--input", default="-", help="configuration JSON path, or - for stdin")
    p.add_argument("--gale", help="Gale datum JSON overriding the generated one")
    p.add_argument("--period", default="std", help="std, or a JSON m x 2m matrix")
    p.add_argument("--output", default="-", help="output path, or - for stdout")
    p.add_argument("--pretty", action="store_true", help="indent the JSON output")
    return p


def _read(path, stdin):
    if path == "-":
        data = stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read().encode()
        return data
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise MalformedInput("cannot read input", path=path, reason=exc.strerror) from None


def _examples(params):
    if not params:
        raise MalformedInput("examples needs a generator name", available=sorted(EXAMPLES))
    name, rest = params[0], params[1:]
    try:
        ints = [int(x) for x in rest]
    except ValueError:
        raise MalformedInput("generator parameters must be integers") from None
    try:
        cfg, gd = by_name(name, ints)
    except KeyError:
        raise MalformedInput("unknown generator", name=name, available=sorted(EXAMPLES)) from None
    except ValueError as exc:
        raise MalformedInput(str(exc)) from None
    return configuration_to_json(cfg, gd)


def _configure_logging():
    level = os.environ.get("LVMB_KIT_LOG", "").upper()
    if not level:
        return
    if level.isdigit():
        lvl = int(level)
    else:
        lvl = getattr(logging, level, logging.INFO)
    logging.basicConfig(stream=sys.stderr, level=lvl,
                        format="%(levelname)s %(name)s: %(message)s")


def run(argv, stdin=None, stdout=None):
    """Execute one command; returns the process exit code."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    args = _parser().parse_args(argv)
    try:
        if args.command == "examples":
            result = _examples(args.params)
        else:
            raw = _read(args.input, stdin)
            doc = load_json(raw.decode("utf-8", errors="replace"))
            cfg = parse_configuration(doc)
            gale = None
            if args.gale:
                gale = parse_gale(load_json(_read(args.gale, stdin).decode()))
            elif isinstance(doc, dict) and "gale" in doc:
                gale = parse_gale(doc["gale"])
            log.info("command %s on n=%d d=%d k=%d", args.command, cfg.n, cfg.dim, cfg.k)
            result = COMMANDS[args.command](Analysis(cfg, gale, args.period, raw))
        code = 0
    except LvmbError as exc:
        log.info("domain error %s: %s", exc.code, exc.message)
        result = {"error": exc.to_json()}
        code = exc.exit_code
    text = dumps(result, args.pretty) + "\n"
    if args.output == "-" or code != 0:
        stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return code


def main(argv=None):
    _configure_logging()
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
