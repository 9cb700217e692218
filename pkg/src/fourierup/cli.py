"""Command-line front end.

    fourierup upsample --variant padding|area|corner|bilinear --in IMG --out IMG
                       [--combine avg|none] [--mixer identity|PATH]
    fourierup verify   --theorem 1|2|3|grad|all [--seed N]
    fourierup bench    [--sizes 64,128,256]
    fourierup psnr     A B
    fourierup roundtrip --in IMG [--mixer identity|PATH]

Every subcommand also takes ``--config PATH``: a file of ``key=value`` lines
(keys are flag names without dashes) that replace the defaults; explicit
flags win. Exit codes: 0 ok, 1 I/O or input error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

import numpy as np

from .imaging import downscale2x, nearest_upsample2x, psnr, upsample_image
from .netpbm import PnmError, load_pnm, save_pnm
from .pipelines import ChannelMixer
from .spectral import dft2_oracle, fast_path_available, fft2
from .verification import run_all

EXIT_OK, EXIT_IO, EXIT_USAGE = 0, 1, 2
ORACLE_BENCH_CAP = 64
COMBINE_FLAGS = {"avg": "average_with_bilinear", "none": "fourier_only"}
THEOREMS = ("1", "2", "3", "grad")


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


def _build_parser():
    parser = argparse.ArgumentParser(prog="fourierup", description="Fourier-domain 2x up-sampling")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    subs = {}

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--config", metavar="PATH", help="key=value defaults file")
        subs[name] = p
        return p

    p = add("upsample", "2x up-sample a Netpbm image")
    p.add_argument("--variant", default="padding", help="padding | area | corner | bilinear")
    p.add_argument("--in", dest="input", metavar="PATH")
    p.add_argument("--out", dest="output", metavar="PATH")
    p.add_argument("--combine", default="none", help="avg | none")
    p.add_argument("--mixer", default="identity", help="identity | PATH")

    p = add("verify", "run the theorem checkers")
    p.add_argument("--theorem", default="all", help="1 | 2 | 3 | grad | all")
    p.add_argument("--seed", type=int, default=0)

    p = add("bench", "time fft2 against the direct-sum oracle")
    p.add_argument("--sizes", default="64,128,256", help="comma-separated square sizes")

    p = add("psnr", "PSNR between two images")
    p.add_argument("a")
    p.add_argument("b")

    p = add("roundtrip", "downscale 2x, up-sample with every method, report PSNR")
    p.add_argument("--in", dest="input", metavar="PATH")
    p.add_argument("--mixer", default="identity", help="identity | PATH")
    return parser, subs


def _read_config(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read config {path}: {exc}") from exc
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        values[key.replace("-", "_")] = value
    return values


def _apply_config(subparser: argparse.ArgumentParser, config: dict) -> None:
    # "in" and "out" are stored under different dests
    aliases = {"in": "input", "out": "output"}
    known = {a.dest for a in subparser._actions}
    defaults = {}
    for key, value in config.items():
        dest = aliases.get(key, key)
        if dest not in known or dest in ("help", "config"):
            raise UsageError(f"unknown config key {key!r} for this command")
        defaults[dest] = value
    subparser.set_defaults(**defaults)


def _load_mixer(source: str, channels: int) -> ChannelMixer:
    if source == "identity":
        return ChannelMixer.identity(channels)
    try:
        mixer = ChannelMixer.from_text(Path(source).read_text())
    except OSError as exc:
        raise InputError(f"cannot read mixer {source}: {exc}") from exc
    except ValueError as exc:
        raise InputError(f"bad mixer file {source}: {exc}") from exc
    if mixer.channels != channels:
        raise InputError(f"mixer has {mixer.channels} channels, image has {channels}")
    return mixer


def _load_image(path: str):
    try:
        return load_pnm(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except PnmError as exc:
        raise InputError(f"{path}: {exc.code}: {exc}") from exc


def _cmd_upsample(args) -> int:
    if args.variant not in ("padding", "area", "corner", "bilinear"):
        raise UsageError(f"invalid --variant {args.variant!r}")
    if args.combine not in COMBINE_FLAGS:
        raise UsageError(f"invalid --combine {args.combine!r}")
    if not args.input or not args.output:
        raise UsageError("--in and --out are required")
    img = _load_image(args.input)
    mixer = _load_mixer(args.mixer, img.channels)
    out = upsample_image(img, args.variant, COMBINE_FLAGS[args.combine], mixer)
    try:
        save_pnm(args.output, out)
    except OSError as exc:
        raise InputError(f"cannot write {args.output}: {exc}") from exc
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.theorem == "all":
        theorems = THEOREMS
    elif args.theorem in THEOREMS:
        theorems = (args.theorem,)
    else:
        raise UsageError(f"invalid --theorem {args.theorem!r}")
    reports = run_all(seed=int(args.seed), theorems=theorems)
    for report in reports:
        for line in report.lines():
            print(line)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_IO


def _best_time(fn, arg, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(arg)
        best = min(best, time.perf_counter() - t0)
    return best


def _cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in str(args.sizes).split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"invalid --sizes {args.sizes!r}") from None
    if not sizes or any(s < 1 for s in sizes):
        raise UsageError("--sizes needs positive integers")
    rng = np.random.Generator(np.random.PCG64(0))
    print(f"{'method':<12} {'size':>11} {'path':>7} {'seconds':>12}")
    for n in sizes:
        g = rng.uniform(-1.0, 1.0, (n, n))
        path = "radix2" if fast_path_available(g.shape) else "oracle"
        print(f"{'fft2':<12} {f'{n}x{n}':>11} {path:>7} {_best_time(fft2, g, 3):>12.6f}")
        if n <= ORACLE_BENCH_CAP:
            print(f"{'dft2_oracle':<12} {f'{n}x{n}':>11} {'direct':>7} {_best_time(dft2_oracle, g, 1):>12.6f}")
    return EXIT_OK


def _cmd_psnr(args) -> int:
    a, b = _load_image(args.a), _load_image(args.b)
    try:
        value = psnr(a, b)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    print(f"{value:.6f}")
    return EXIT_OK


def _cmd_roundtrip(args) -> int:
    if not args.input:
        raise UsageError("--in is required")
    img = _load_image(args.input)
    if img.height % 2 or img.width % 2:
        raise InputError("round trip needs even image dimensions")
    low = downscale2x(img)
    mixer = _load_mixer(args.mixer, img.channels)
    print(f"{'method':<10} {'combine':<6} {'psnr_db':>10}")
    print(f"{'nearest':<10} {'-':<6} {psnr(nearest_upsample2x(low), img):>10.4f}")
    print(f"{'bilinear':<10} {'-':<6} {psnr(upsample_image(low, 'bilinear'), img):>10.4f}")
    for variant in ("padding", "area", "corner"):
        for flag, combine in COMBINE_FLAGS.items():
            value = psnr(upsample_image(low, variant, combine, mixer), img)
            print(f"{variant:<10} {flag:<6} {value:>10.4f}")
    return EXIT_OK


COMMANDS = {
    "upsample": _cmd_upsample,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
    "psnr": _cmd_psnr,
    "roundtrip": _cmd_roundtrip,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser, subs = _build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    pre_args, _ = pre.parse_known_args(argv)
    command = next((a for a in argv if a in subs), None)
    try:
        if pre_args.config and command:
            _apply_config(subs[command], _read_config(pre_args.config))
    except UsageError as exc:
        subs[command].print_usage(sys.stderr)
        print(f"fourierup: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"fourierup: error: {exc}", file=sys.stderr)
        return EXIT_IO

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK

    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        subs[args.command].print_usage(sys.stderr)
        print(f"fourierup: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"fourierup: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
