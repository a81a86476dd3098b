"""Command line front end.

    strongcyclic analyze   --input knot.txt
    strongcyclic coverings --input knot.txt --n 6 --cap 20
    strongcyclic lift      --input knot.txt --n 3 --monodromy 0,0 --expand
    strongcyclic selftest  --seed 42

Exit codes: 0 success (including "no covering exists"), 2 input error,
3 internal invariant violation or failed self test.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from .coverings import CoveringError, Monodromy, covering_report, enumerate_monodromies, CountExceedsLimit
from .intlinalg import AbelianGroup, IntMatrix, InvariantViolation
from .lift import InvalidMonodromy, LiftError, covering_homology, expand_relators, format_cyclic, lift_words
from .presentation import (
    KnotGroupPresentation,
    PresentationError,
    abelianize,
    homology_of_complement,
    parse_presentation,
)
from .selftest import corrupted_snf, run_selftest
from .words import format_word

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3
DEFAULT_CAP = 1000


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    text: str | None = None
    n: int | None = None
    monodromy: tuple[int, ...] | None = None
    index: int | None = None
    format: str = "text"
    cap: int = DEFAULT_CAP
    expand: bool = False
    seed: int = 42
    scale: int = 100
    corrupt_snf: bool = False

    def __post_init__(self):
        if self.command in ("coverings", "lift"):
            if self.n is None:
                raise InputError(f"{self.command} needs --n")
            if self.n < 2:
                raise InputError(f"--n must be at least 2, got {self.n}")
        if self.cap < 0:
            raise InputError("--cap must be nonnegative")


def _s(v: int) -> str:
    return str(v)


def _matrix(M: IntMatrix) -> list[list[str]]:
    return [[_s(v) for v in row] for row in M.data]


def _group(G: AbelianGroup) -> dict[str, Any]:
    return {"free_rank": _s(G.free_rank), "torsion": [_s(t) for t in G.torsion], "display": str(G)}


def load_presentation(cfg: RunConfig) -> KnotGroupPresentation:
    if cfg.text is not None:
        text = cfg.text
    elif cfg.input and cfg.input != "-":
        try:
            with open(cfg.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {cfg.input}: {exc.strerror}") from None
    else:
        text = sys.stdin.read()
    p = parse_presentation(text)
    if cfg.monodromy is not None and len(cfg.monodromy) != p.genus:
        raise InputError(f"--monodromy has {len(cfg.monodromy)} entries, genus is {p.genus}")
    return p


def cmd_analyze(cfg: RunConfig) -> dict[str, Any]:
    p = load_presentation(cfg)
    h = abelianize(p)
    return {
        "command": "analyze",
        "genus": _s(p.genus),
        "H": _matrix(h.H),
        "b": [_s(v) for v in h.b],
        "invariant_factors": [_s(v) for v in h.e],
        "invariant_factors_augmented": [_s(v) for v in h.eprime],
        "free_rank": _s(h.d),
        "torsion": [_s(t) for t in h.torsion],
        "homology_manifold": _group(h.homology_of_manifold()),
        "homology_complement": _group(homology_of_complement(p)),
    }


def cmd_coverings(cfg: RunConfig) -> dict[str, Any]:
    p = load_presentation(cfg)
    h = abelianize(p)
    rep = covering_report(h, cfg.n, cfg.cap)
    return {
        "command": "coverings",
        "genus": _s(p.genus),
        "n": _s(cfg.n),
        "exists": rep.exists,
        "count": _s(rep.count),
        "monodromies": [[_s(v) for v in m.x] for m in rep.monodromies],
        "truncated": rep.truncated,
    }


def _select_monodromy(cfg: RunConfig, p: KnotGroupPresentation) -> Monodromy:
    if cfg.monodromy is not None:
        return Monodromy.reduced(cfg.n, cfg.monodromy)
    index = cfg.index or 0
    h = abelianize(p)
    try:
        monos = enumerate_monodromies(h, cfg.n, index + 1)
    except CountExceedsLimit as exc:
        monos = exc.partial
    if not monos:
        raise InvalidMonodromy(f"no {cfg.n}-fold strongly-cyclic branched covering exists")
    if index >= len(monos):
        raise InputError(f"--index {index} out of range: only {len(monos)} coverings")
    return monos[index]


def cmd_lift(cfg: RunConfig) -> dict[str, Any]:
    p = load_presentation(cfg)
    mono = _select_monodromy(cfg, p)
    cp = lift_words(p, mono)
    out: dict[str, Any] = {
        "command": "lift",
        "m": _s(cp.m),
        "n": _s(cp.n),
        "monodromy": [_s(v) for v in mono.x],
        "words": [format_word(w) for w in cp.words],
        "notes": list(cp.notes),
        "homology": _group(covering_homology(cp)),
        "cyclic": format_cyclic(cp),
    }
    if cfg.expand:
        out["relators"] = [format_word(w) for w in expand_relators(cp)]
    return out


def cmd_selftest(cfg: RunConfig) -> dict[str, Any]:
    kwargs = {"snf": corrupted_snf} if cfg.corrupt_snf else {}
    results = run_selftest(cfg.seed, cfg.scale, **kwargs)
    return {
        "command": "selftest",
        "seed": _s(cfg.seed),
        "ok": all(r.ok for r in results),
        "suites": [
            {"name": r.name, "passed": _s(r.passed), "failed": _s(r.failed), "digest": r.digest}
            for r in results
        ],
    }


COMMANDS = {
    "analyze": cmd_analyze,
    "coverings": cmd_coverings,
    "lift": cmd_lift,
    "selftest": cmd_selftest,
}


def render_text(rep: dict[str, Any]) -> str:
    cmd = rep["command"]
    lines = []
    if cmd == "analyze":
        lines.append(f"genus: {rep['genus']}")
        lines.append("H:")
        lines.extend("  [" + ", ".join(row) + "]" for row in rep["H"])
        lines.append("b: (" + ", ".join(rep["b"]) + ")")
        lines.append("invariant factors e: (" + ", ".join(rep["invariant_factors"]) + ")")
        lines.append("invariant factors e': (" + ", ".join(rep["invariant_factors_augmented"]) + ")")
        lines.append(f"H_1(N) = {rep['homology_manifold']['display']}  (d={rep['free_rank']}, torsion=({', '.join(rep['torsion'])}))")
        lines.append(f"H_1(N-K) = {rep['homology_complement']['display']}")
    elif cmd == "coverings":
        lines.append(f"n: {rep['n']}")
        lines.append(f"exists: {'yes' if rep['exists'] else 'no'}")
        lines.append(f"count: {rep['count']}")
        for mono in rep["monodromies"]:
            lines.append("  (" + ", ".join(mono) + ")")
        if rep["truncated"]:
            lines.append(f"  ... truncated after {len(rep['monodromies'])} of {rep['count']}")
    elif cmd == "lift":
        lines.append(f"monodromy: ({', '.join(rep['monodromy'])})")
        lines.append(rep["cyclic"].rstrip("\n"))
        lines.extend(f"# {note}" for note in rep["notes"])
        if "relators" in rep:
            lines.append("relators:")
            lines.extend(f"  {r}" if r else "  (empty)" for r in rep["relators"])
        lines.append(f"H_1 of covering: {rep['homology']['display']}")
    elif cmd == "selftest":
        for s in rep["suites"]:
            status = "PASS" if s["failed"] == "0" else "FAIL"
            lines.append(f"{status} {s['name']}: {s['passed']} passed, {s['failed']} failed [{s['digest']}]")
    return "\n".join(lines) + "\n"


def _monodromy_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongcyclic", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--input", metavar="PATH", help="presentation file; stdin if omitted or '-'")
    source.add_argument("input_path", nargs="?", help=argparse.SUPPRESS)

    sub.add_parser("analyze", parents=[common, source], help="homology data of a presentation")
    p = sub.add_parser("coverings", parents=[common, source], help="existence, count and list of coverings")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max monodromies to list")
    p = sub.add_parser("lift", parents=[common, source], help="cyclic presentation of a covering group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--monodromy", type=_monodromy_arg, help="images of a1..ag, e.g. 0,2")
    p.add_argument("--index", type=int, help="pick the k-th covering (0-based, lexicographic)")
    p.add_argument("--expand", action="store_true", help="also print all m*n relators")
    p = sub.add_parser("selftest", parents=[common], help="run the seeded oracle suites")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--scale", type=int, default=100, help="cases per suite")
    p.add_argument("--corrupt-snf", action="store_true", help=argparse.SUPPRESS)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {"command": args.command, "format": args.format}
    path = getattr(args, "input", None) or getattr(args, "input_path", None)
    if path:
        fields["input"] = path
    for name in ("n", "monodromy", "index", "cap", "seed", "scale", "corrupt_snf"):
        value = getattr(args, name, None)
        if value is not None:
            fields[name] = value
    fields["expand"] = getattr(args, "expand", False)
    return RunConfig(**fields)


def run(cfg: RunConfig) -> tuple[dict[str, Any], int]:
    rep = COMMANDS[cfg.command](cfg)
    code = EXIT_INTERNAL if cfg.command == "selftest" and not rep["ok"] else EXIT_OK
    return rep, code


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        rep, code = run(cfg)
    except (InputError, PresentationError, LiftError, CoveringError) as exc:
        kind = type(exc).__name__
        if isinstance(exc, InvalidMonodromy) and exc.row is not None:
            kind += f" (row {exc.row})"
        print(f"error: {kind}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if cfg.format == "json":
        sys.stdout.write(json.dumps(rep, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(rep))
    return code


if __name__ == "__main__":
    sys.exit(main())
