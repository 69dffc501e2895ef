"""Command-line interface.

Exit status is 0 on success, 1 on a domain error (rejected murchhana, bad
melody, out-of-range register) and 2 on a usage error.  Data goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .errors import SaptakError
from .murchhana import (
    enumerate_murchhanas,
    murchhana,
    murchhana_grid,
    outcome_dict,
    scale_change,
)
from .pitch import C4_HZ, shruti_table, shruti_table_csv, shruti_table_json
from .sargam import Melody, MelodyEvent, format_melody, note_token, parse_melody, transpose_melody
from .swara import SWARAS, Tonic, register_name, swara_frequency, western_name
from .synth import RenderConfig, render_melody, write_wav

REGISTER_MIN, REGISTER_MAX = -2, 3


def _tonic(text: str) -> Tonic:
    try:
        return Tonic.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _clamp(register: int) -> int:
    return max(REGISTER_MIN, min(REGISTER_MAX, register))


def _check_registers(m: Melody) -> None:
    for i, e in enumerate(m.events, start=1):
        if not e.is_rest and not REGISTER_MIN <= e.register <= REGISTER_MAX:
            raise SaptakError(
                f"event {i}: register {e.register} outside {REGISTER_MIN}..{REGISTER_MAX}"
            )


def _note_or_blank(t: Tonic, swara, register: int) -> str:
    try:
        return western_name(t, swara, register)
    except ValueError:
        return ""


def _table(header, rows, numeric=()) -> str:
    """Plain aligned text; numeric columns right-aligned."""
    cols = list(zip(header, *rows)) if rows else [(h,) for h in header]
    widths = [max(len(str(c)) for c in col) for col in cols]
    lines = []
    for row in [header, *rows]:
        cells = []
        for i, (cell, w) in enumerate(zip(row, widths)):
            cell = str(cell)
            cells.append(cell.rjust(w) if i in numeric else cell.ljust(w))
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_tune_table(args, out) -> int:
    base = args.base.sa_frequency
    if args.format == "csv":
        out.write(shruti_table_csv(base))
    elif args.format == "json":
        out.write(shruti_table_json(base) + "\n")
    else:
        rows = []
        for r in shruti_table(base):
            e = r.entry
            name = f"{e.name} ({e.swara_label})" if e.swara_label else e.name
            rows.append(
                (
                    name,
                    str(e.ratio),
                    f"{r.just_hz:.4f}",
                    e.western_note or "",
                    "" if r.ets_hz is None else f"{r.ets_hz:.4f}",
                    f"{r.deviation_cents:+.4f}",
                )
            )
        header = ("shruti", "ratio", "just_hz", "note", "ets_hz", "cents")
        out.write(_table(header, rows, numeric={1, 2, 4, 5}))
    return 0


def cmd_saptak(args, out) -> int:
    t = args.base
    lo, hi = _clamp(args.low), _clamp(args.high)
    records = []
    for register in range(lo, hi + 1):
        for s in SWARAS:
            records.append(
                {
                    "register": register_name(register),
                    "swara": str(s),
                    "token": note_token(s, register),
                    "hz": swara_frequency(t, s, register),
                    "western": _note_or_blank(t, s, register),
                }
            )
    header = ("western", "hz", "token", "swara", "register")
    rows = [(r["western"], f"{r['hz']:.4f}", r["token"], r["swara"], r["register"]) for r in records]
    if args.format == "json":
        out.write(json.dumps(records, indent=2) + "\n")
    elif args.format == "csv":
        out.write(_csv(header, rows))
    else:
        out.write(_table(header, rows, numeric={1}))
    return 0


def cmd_scale_change(args, out) -> int:
    old = args.base
    new = scale_change(old, args.steps)
    record = {
        "from_hz": old.sa_frequency,
        "from_note": _note_or_blank(old, SWARAS[0], 0),
        "steps": args.steps,
        "factor": new.sa_frequency / old.sa_frequency,
        "to_hz": new.sa_frequency,
        "to_note": _note_or_blank(new, SWARAS[0], 0),
    }
    if args.format == "json":
        out.write(json.dumps(record, indent=2) + "\n")
        return 0
    header = tuple(record)
    row = (
        f"{old.sa_frequency:.4f}",
        record["from_note"],
        str(args.steps),
        f"{record['factor']:.4f}",
        f"{new.sa_frequency:.4f}",
        record["to_note"],
    )
    if args.format == "csv":
        out.write(_csv(header, [row]))
    else:
        out.write(_table(header, [row], numeric={0, 2, 3, 4}))
    return 0


def _thaat_line(o) -> str:
    if not o.accepted:
        return f"shift {o.shift}: rejected, {o.reason}"
    tokens = " ".join(note_token(s) for s in o.degrees)
    vikrita = ", ".join(str(s) for s in o.vikrita) or "none"
    name = o.hindustani_name or "(unnamed)"
    carnatic = f" ({o.carnatic_name})" if o.carnatic_name else ""
    return f"shift {o.shift}: {name}{carnatic}  {tokens}  vikrita: {vikrita}"


def cmd_murchhana(args, out, err) -> int:
    if args.all:
        outcomes = enumerate_murchhanas()
    else:
        outcomes = [o for o in enumerate_murchhanas() if o.shift == args.shift]
    if args.format == "json":
        payload = [outcome_dict(o) for o in outcomes]
        out.write(json.dumps(payload if args.all else payload[0], indent=2) + "\n")
    elif args.format == "csv":
        header = ("shift", "accepted", "hindustani_name", "carnatic_name", "degrees", "vikrita", "rejection_reason")
        rows = []
        for o in outcomes:
            d = outcome_dict(o)
            rows.append(
                (
                    d["shift"],
                    str(d["accepted"]).lower(),
                    d["hindustani_name"] or "",
                    d["carnatic_name"] or "",
                    " ".join(note_token(s) for s in o.degrees) if o.accepted else "",
                    ";".join(d["vikrita"] or []),
                    d["rejection_reason"] or "",
                )
            )
        out.write(_csv(header, rows))
    else:
        if args.all:
            out.write(murchhana_grid(outcomes) + "\n")
        out.write("\n".join(_thaat_line(o) for o in outcomes) + "\n")
    if not args.all and not outcomes[0].accepted and not args.quiet:
        err.write(f"saptak: murchhana shift {args.shift} rejected: {outcomes[0].reason}\n")
        return 1
    return 0


def _read_melody(path: str) -> Melody:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_melody(text)


def _write_text(path: str, text: str, out) -> None:
    if path == "-":
        out.write(text)
    else:
        Path(path).write_text(text)


def cmd_transpose(args, out) -> int:
    m = _read_melody(args.infile)
    _check_registers(m)
    result = transpose_melody(m, args.mode, args.shift)
    _check_registers(result)
    _write_text(args.outfile, format_melody(result) + "\n", out)
    return 0


def cmd_synth(args, out) -> int:
    cfg = RenderConfig(sample_rate=args.rate, amplitude=args.amp, note_seconds=args.note_seconds)
    if args.infile:
        m = _read_melody(args.infile)
        if args.base_given:
            m = Melody(m.events, args.base)
    else:
        thaat = murchhana(args.shift)
        events = [MelodyEvent(s) for s in thaat.degrees] + [MelodyEvent(SWARAS[0], 1)]
        m = Melody(tuple(events), args.base)
    _check_registers(m)
    buf = render_melody(m, cfg)
    write_wav(buf, args.outfile, cfg.sample_rate)
    summary = {
        "path": str(args.outfile),
        "events": len(m.events),
        "samples": int(buf.size),
        "seconds": buf.size / cfg.sample_rate,
        "sample_rate": cfg.sample_rate,
        "melody": format_melody(m),
    }
    out.write(json.dumps(summary, indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="saptak",
        description="Shruti tables, saptak mapping, scale change, murchhana and sargam tools.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def fmt(sp):
        sp.add_argument("--format", choices=("table", "csv", "json"), default="table")

    sp = sub.add_parser("tune-table", help="the just-intonation shruti table")
    sp.add_argument("-b", "--base", type=_tonic, default=Tonic(C4_HZ), help="sa as Hz or pitch name")
    fmt(sp)

    sp = sub.add_parser("saptak", help="swaras of one or more saptaks with their frequencies")
    sp.add_argument("-b", "--base", type=_tonic, default=Tonic.parse("C4"))
    sp.add_argument("--low", type=int, default=-1, help="lowest register (clamped to -2)")
    sp.add_argument("--high", type=int, default=1, help="highest register (clamped to 3)")
    fmt(sp)

    sp = sub.add_parser("scale-change", help="move sa by a number of semitones")
    sp.add_argument("-b", "--base", "--from", dest="base", type=_tonic, default=Tonic.parse("C4"))
    sp.add_argument("--steps", type=int, required=True)
    fmt(sp)

    sp = sub.add_parser("murchhana", help="derive thaats by re-anchoring sa")
    which = sp.add_mutually_exclusive_group(required=True)
    which.add_argument("--shift", type=int, choices=range(7), metavar="{0..6}")
    which.add_argument("--all", action="store_true")
    sp.add_argument("-q", "--quiet", action="store_true", help="report a rejected shift without failing")
    fmt(sp)

    sp = sub.add_parser("transpose", help="transpose a sargam melody file")
    sp.add_argument("--in", dest="infile", default="-")
    sp.add_argument("--out", dest="outfile", default="-")
    sp.add_argument("--mode", choices=("scale-change", "murchhana"), required=True)
    sp.add_argument("--shift", type=int, required=True)

    sp = sub.add_parser("synth", help="render a melody or a thaat to WAV")
    sp.add_argument("--in", dest="infile", help="sargam melody file; default is the thaat of --shift")
    sp.add_argument("--out", dest="outfile", required=True)
    sp.add_argument("-b", "--base", type=_tonic, default=None, help="tonic (overrides the file header)")
    sp.add_argument("--shift", type=int, choices=range(7), default=0, metavar="{0..6}")
    sp.add_argument("--rate", type=int, default=44100)
    sp.add_argument("--amp", type=float, default=0.5)
    sp.add_argument("--note-seconds", type=float, default=0.5)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "tune-table":
            return cmd_tune_table(args, out)
        if args.command == "saptak":
            return cmd_saptak(args, out)
        if args.command == "scale-change":
            return cmd_scale_change(args, out)
        if args.command == "murchhana":
            return cmd_murchhana(args, out, err)
        if args.command == "transpose":
            if args.mode == "murchhana" and not 0 <= args.shift <= 6:
                parser.error("murchhana --shift must be in 0..6")
            return cmd_transpose(args, out)
        if args.command == "synth":
            args.base_given = args.base is not None
            if args.base is None:
                args.base = Tonic()
            return cmd_synth(args, out)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (SaptakError, ValueError, OSError) as exc:
        err.write(f"saptak: {exc}\n")
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())
