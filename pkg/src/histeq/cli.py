"""Batch command-line front end.

Verbs:
  enhance    one image in, one enhanced image out, metrics on stdout
  bench      run a method battery over a corpus directory, emit report tables
  histdump   per-level histogram/LUT CSV for plotting before/after charts
  gen-corpus write a seeded synthetic corpus for benchmarking without data

Exit codes: 0 ok, 2 I/O or parse failure, 3 bad usage. Flags may be kept
in a text file (one per line) and passed as @flags.txt.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from pathlib import Path

from . import metrics as mx
from .equalizers import METHOD_NAMES, MethodSpec, enhance_color, equalize
from .exceptions import HisteqError, PnmError
from .histogram import compute_histogram, to_pdf
from .image import ColorImage, GrayImage
from .pnm import load_pnm, save_pnm
from .synth import generate_corpus

DEFAULT_METHODS = ",".join(METHOD_NAMES)
IMAGE_SUFFIXES = (".pgm", ".ppm", ".pnm")


class _Parser(argparse.ArgumentParser):
    """argparse variant that exits 3 (not 2) on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(3)


def _fmt(value: float) -> str:
    if math.isinf(value):
        return "inf"
    return f"{value:.2f}"


def _load_image(path: Path):
    data = path.read_bytes()
    try:
        return load_pnm(data)
    except PnmError as exc:
        exc.args = (f"{path.name}: {exc.args[0]}",)
        raise


def _save_image(path: Path, img) -> None:
    fmt = "P6" if isinstance(img, ColorImage) else "P5"
    path.write_bytes(save_pnm(img, fmt))


def _metric_plane(img) -> GrayImage:
    return img.luma() if isinstance(img, ColorImage) else img


def _run_method(img, spec: MethodSpec, color_mode: str):
    """Enhance gray or color input; returns (output image, lut or None)."""
    if isinstance(img, ColorImage):
        return enhance_color(img, spec, color_mode), None
    out, lut = equalize(img, spec)
    return out, lut


def _print_metric_line(original, enhanced) -> None:
    rep = mx.report(_metric_plane(original), _metric_plane(enhanced))
    line = ",".join(
        _fmt(v) for v in (rep.ambe, rep.psnr, rep.ssim, rep.entropy_in, rep.entropy_out)
    )
    print(line)


def cmd_enhance(args) -> int:
    spec = MethodSpec.from_name(args.method, r=args.r, beta=args.beta)
    img = _load_image(Path(args.input))
    out, _ = _run_method(img, spec, args.color)
    out_path = Path(args.output)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    _save_image(out_path, out)
    _print_metric_line(img, out)
    return 0


def _corpus_files(corpus_dir: Path) -> list:
    return sorted(
        p for p in corpus_dir.iterdir()
        if p.is_file() and p.suffix.lower() in IMAGE_SUFFIXES
    )


def _write_table(path: Path, fmt: str, header: list, rows: list) -> None:
    if fmt == "csv":
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    else:
        lines = ["| " + " | ".join(header) + " |",
                 "|" + "|".join(" --- " for _ in header) + "|"]
        for row in rows:
            lines.append("| " + " | ".join(row) + " |")
        path.write_text("\n".join(lines) + "\n")


def _column_average(values: list) -> float:
    return sum(values) / len(values)


def cmd_bench(args) -> int:
    corpus_dir = Path(args.corpus)
    out_dir = Path(args.out)
    specs = [MethodSpec.from_name(name, r=args.r, beta=args.beta)
             for name in args.methods.split(",") if name]
    if not specs:
        print("error: empty method list", file=sys.stderr)
        return 3

    files = _corpus_files(corpus_dir)
    warnings = 0
    images = []
    for path in files:
        try:
            images.append((path.name, _load_image(path)))
        except (PnmError, OSError) as exc:
            warnings += 1
            print(f"warning: skipping {path.name}: {exc}", file=sys.stderr)
    if not images:
        print(f"error: no loadable images in {corpus_dir}", file=sys.stderr)
        return 2

    out_dir.mkdir(parents=True, exist_ok=True)
    # results[metric][label] = per-image column, image order = sorted filenames
    labels = [s.label for s in specs]
    results = {m: {lab: [] for lab in labels} for m in ("ambe", "psnr", "ssim", "entropy")}
    original_entropy = []
    names = []

    for name, img in images:
        names.append(name)
        ref = _metric_plane(img)
        original_entropy.append(mx.entropy(to_pdf(compute_histogram(ref))))
        for spec in specs:
            out, _ = _run_method(img, spec, args.color)
            method_dir = out_dir / spec.slug
            method_dir.mkdir(parents=True, exist_ok=True)
            _save_image(method_dir / name, out)
            rep = mx.report(ref, _metric_plane(out))
            results["ambe"][spec.label].append(rep.ambe)
            results["psnr"][spec.label].append(rep.psnr)
            results["ssim"][spec.label].append(rep.ssim)
            results["entropy"][spec.label].append(rep.entropy_out)

    formats = [f for f in args.format.split(",") if f]
    ext = {"csv": ".csv", "markdown": ".md"}
    for metric in ("ambe", "psnr", "ssim", "entropy"):
        with_original = metric == "entropy"
        header = ["Image"] + (["Original"] if with_original else []) + labels
        rows = []
        for i, name in enumerate(names):
            row = [name]
            if with_original:
                row.append(_fmt(original_entropy[i]))
            row += [_fmt(results[metric][lab][i]) for lab in labels]
            rows.append(row)
        avg = ["Average"]
        if with_original:
            avg.append(_fmt(_column_average(original_entropy)))
        avg += [_fmt(_column_average(results[metric][lab])) for lab in labels]
        rows.append(avg)
        for fmt in formats:
            _write_table(out_dir / f"{metric}{ext[fmt]}", fmt, header, rows)

    print(f"processed {len(names)} images, {warnings} warnings")
    return 0


def cmd_histdump(args) -> int:
    spec = MethodSpec.from_name(args.method, r=args.r, beta=args.beta)
    img = _metric_plane(_load_image(Path(args.input)))
    out, lut = equalize(img, spec)
    in_counts = compute_histogram(img)
    out_counts = compute_histogram(out)
    path = Path(args.out)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["level", "input_count", "output_count", "lut_value"])
        for k in range(img.levels):
            writer.writerow([k, int(in_counts[k]), int(out_counts[k]), int(lut[k])])
    return 0


def cmd_gen_corpus(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, img in generate_corpus(args.count, size=args.size, seed=args.seed):
        (out_dir / name).write_bytes(save_pnm(img, "P5"))
    print(f"wrote {args.count} images to {out_dir}")
    return 0


def _add_method_flags(p: _Parser) -> None:
    p.add_argument("--method", choices=METHOD_NAMES, default="he")
    p.add_argument("--r", type=int, default=2, help="recursion depth")
    p.add_argument("--beta", type=float, default=None, help="RSWHE weighting offset override")


def build_parser() -> _Parser:
    parser = _Parser(prog="histeq", fromfile_prefix_chars="@",
                     description="Histogram-equalization contrast enhancement toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enhance", help="enhance one image")
    p.add_argument("input")
    p.add_argument("output")
    _add_method_flags(p)
    p.add_argument("--color", choices=("per-channel", "luma"), default="per-channel")
    p.set_defaults(func=cmd_enhance)

    p = sub.add_parser("bench", help="benchmark methods over a corpus directory")
    p.add_argument("corpus")
    p.add_argument("--out", required=True, help="output directory for reports and images")
    p.add_argument("--methods", default=DEFAULT_METHODS,
                   help="comma-separated method list, report column order")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--color", choices=("per-channel", "luma"), default="per-channel")
    p.add_argument("--format", default="csv", help="comma subset of csv,markdown")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("histdump", help="dump per-level histogram/LUT CSV")
    p.add_argument("input")
    p.add_argument("--out", required=True)
    _add_method_flags(p)
    p.set_defaults(func=cmd_histdump)

    p = sub.add_parser("gen-corpus", help="write a seeded synthetic image corpus")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=24)
    p.add_argument("--size", type=int, default=64)
    p.set_defaults(func=cmd_gen_corpus)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 3
    try:
        return args.func(args)
    except (PnmError, FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HisteqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
