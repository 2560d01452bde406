"""Command-line interface.

Examples::

    frameorbit generate random --count 8 --dim 4 --seed 1 --condition 10 \\
        | frameorbit parsevalize - | frameorbit analyze -
    frameorbit factorize frame.json
    frameorbit equiv --unitary-only a.json b.json

Exit codes: 0 success, 2 usage or input error, 3 not a frame,
4 not connected / not equivalent, 5 numerical failure.
"""

import argparse
import hashlib
import json
import sys

import numpy as np

from . import __version__
from .exceptions import FrameError, NotConnected, NotParseval
from .frames import canonical_dual, frame_bounds, parsevalize
from .generators import (
    cos_sin_frame,
    exponential_frame,
    msigma_frame,
    random_frame,
    random_unitary,
    standard_basis,
    tensor_frame,
    uniform_grid,
)
from .io import complex_to_pairs, emit_frame_file, frame_to_dict, parse_frame_file
from .orbit import connecting_operator, factorize, unitary_equivalent

__all__ = ["run", "main", "build_parser"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_EQUIVALENT = 4


class _Streams:
    def __init__(self, stdin=None, stdout=None, stderr=None):
        self.stdin = stdin if stdin is not None else sys.stdin.buffer
        self.stdout = stdout if stdout is not None else sys.stdout.buffer
        self.stderr = stderr if stderr is not None else sys.stderr


def _add_globals(p, suppress):
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--tol", type=float, default=default,
                   help="override the default tolerance")
    p.add_argument("--quiet", action="store_true",
                   default=argparse.SUPPRESS if suppress else False,
                   help="print nothing; report through the exit code only")


def build_parser():
    parser = argparse.ArgumentParser(prog="frameorbit", description=__doc__.splitlines()[0])
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help):
        p = sub.add_parser(name, help=help)
        _add_globals(p, suppress=True)
        return p

    p = command("analyze", "frame bounds, singular values and Parseval flag")
    p.add_argument("file", nargs="?", default="-")

    for name, help in (("parsevalize", "write the Parsevalized frame"),
                       ("dual", "write the canonical dual frame")):
        p = command(name, help)
        p.add_argument("file", nargs="?", default="-")
        p.add_argument("-o", "--output", default="-")

    p = command("factorize", "positive, unitary and canonical Parseval factors")
    p.add_argument("file", nargs="?", default="-")

    p = command("equiv", "find the operator connecting two frames")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--unitary-only", action="store_true",
                   help="require both frames Parseval and the operator unitary")

    p = command("generate", "write an example frame")
    p.add_argument("kind", choices=["exp", "cossin", "tensor", "msigma", "random"])
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--count", type=int, default=None,
                   help="number of vectors (msigma, random); default 2*dim")
    p.add_argument("--nodes-per-unit", type=int, default=8)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--condition", type=float, default=1.0)
    p.add_argument("-o", "--output", default="-")
    return parser


def _read(path, streams):
    if path == "-":
        return streams.stdin.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(path, data, streams):
    if path == "-":
        streams.stdout.write(data)
        streams.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _digest(*blobs):
    if len(blobs) == 1:
        return hashlib.sha256(blobs[0]).hexdigest()
    # several inputs: hash of the concatenated per-file digests
    return hashlib.sha256(b"".join(hashlib.sha256(b).digest() for b in blobs)).hexdigest()


def _report(command, digest, f, tol):
    report = {"command": command, "input_digest": digest}
    report.update(frame_bounds(f, tol).as_dict())
    return report


def _emit_report(report, args, streams):
    if args.quiet:
        return
    report["tool_version"] = __version__
    streams.stdout.write((json.dumps(report, indent=2) + "\n").encode("utf-8"))
    streams.stdout.flush()


def _generate(args):
    m = args.dim
    rng = np.random.default_rng(args.seed)
    count = 2 * m if args.count is None else args.count

    def basis():
        return standard_basis(m) if args.seed is None else random_unitary(m, rng)

    if args.kind == "exp":
        return exponential_frame(basis(), uniform_grid(m, args.nodes_per_unit))
    if args.kind == "cossin":
        return cos_sin_frame(basis(), basis(), uniform_grid(m, args.nodes_per_unit))
    if args.kind == "tensor":
        grid = uniform_grid(m, args.nodes_per_unit)
        F = exponential_frame(basis(), grid)
        G = cos_sin_frame(basis(), basis(), grid)
        y = uniform_grid(1, args.nodes_per_unit)
        alpha = np.array([np.cos(2 * np.pi * y.nodes), 1j * np.sin(2 * np.pi * y.nodes)])
        return tensor_frame([F, G], alpha, y.nodes, y.weights)
    if args.kind == "msigma":
        phases = None if args.seed is None else np.exp(2j * np.pi * rng.random(count))
        return msigma_frame([i % m for i in range(count)], count, m, phases=phases)
    return random_frame(count, m, seed=args.seed, condition_target=args.condition)


def _dispatch(args, streams):
    cmd = args.command
    if cmd == "generate":
        _write(args.output, emit_frame_file(_generate(args)), streams)
        return EXIT_OK

    if cmd == "equiv":
        raw_a, raw_b = _read(args.file_a, streams), _read(args.file_b, streams)
        f, g = parse_frame_file(raw_a), parse_frame_file(raw_b)
        report = _report(cmd, _digest(raw_a, raw_b), f, args.tol)
        block = {"mode": "unitary" if args.unitary_only else "linear"}
        code = EXIT_OK
        try:
            if args.unitary_only:
                op = unitary_equivalent(f, g, tol=args.tol)
                block["status"] = "Equivalent"
            else:
                kwargs = {} if args.tol is None else {"tol": args.tol}
                op = connecting_operator(f, g, **kwargs)
                block["status"] = "Connected"
            block["operator"] = complex_to_pairs(op)
        except (NotConnected, NotParseval) as exc:
            block["status"] = type(exc).__name__
            block["operator"] = None
            block["detail"] = str(exc)
            code = EXIT_NOT_EQUIVALENT
        report["equivalence"] = block
        _emit_report(report, args, streams)
        return code

    raw = _read(args.file, streams)
    f = parse_frame_file(raw)
    digest = _digest(raw)

    if cmd == "analyze":
        _emit_report(_report(cmd, digest, f, args.tol), args, streams)
    elif cmd in ("parsevalize", "dual"):
        out = parsevalize(f) if cmd == "parsevalize" else canonical_dual(f)
        _write(args.output, emit_frame_file(out), streams)
        if args.output != "-":
            _emit_report(_report(cmd, digest, out, args.tol), args, streams)
    elif cmd == "factorize":
        fac = factorize(f, tol=args.tol)
        report = _report(cmd, digest, f, args.tol)
        report["factorization"] = {
            "positive_part": complex_to_pairs(fac.positive_part),
            "unitary_part": complex_to_pairs(fac.unitary_part),
            "transversal": frame_to_dict(fac.transversal),
        }
        _emit_report(report, args, streams)
    return EXIT_OK


def run(argv=None, stdin=None, stdout=None, stderr=None):
    """Run the CLI and return the exit code.

    ``stdin`` and ``stdout`` are binary streams; ``stderr`` is a text stream.
    """
    streams = _Streams(stdin, stdout, stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "equiv" and args.file_a == "-" and args.file_b == "-":
        print("frameorbit: error: only one input may be read from standard input",
              file=streams.stderr)
        return EXIT_USAGE
    try:
        return _dispatch(args, streams)
    except FrameError as exc:
        print(f"frameorbit: {type(exc).__name__}: {exc}", file=streams.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"frameorbit: error: {exc}", file=streams.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
