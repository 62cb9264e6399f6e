"""Command-line front end: ``goeritz <command> ...``.

Results go to standard output as JSON (or DOT for ``export --format dot``).
Domain errors exit 1 with a JSON object on standard error; usage errors
exit 2.  ``GOERITZ_CONFIG`` may name a JSON file overriding the defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from . import curve_model, factor, gamma_complex, goeritz_action, reduction

__all__ = ["Config", "load_config", "run", "main"]


@dataclass(frozen=True)
class Config:
    n_max: int = 64
    ball_radius: int = 2
    n_range: int = 6
    vertex_cap: int = 100_000
    seed: int = 0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"config field {f.name} must be an integer")
            if f.name in ("n_max", "vertex_cap") and value <= 0:
                raise ValueError(f"config field {f.name} must be positive")
            if f.name in ("ball_radius", "n_range") and value < 0:
                raise ValueError(f"config field {f.name} must be non-negative")


def load_config(env=None) -> Config:
    env = os.environ if env is None else env
    path = env.get("GOERITZ_CONFIG")
    if not path:
        return Config()
    data = json.loads(Path(path).read_text())
    known = {f.name for f in fields(Config)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config fields: {sorted(unknown)}")
    return Config(**data)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


DOMAIN_ERRORS = (
    curve_model.CurveError, reduction.PreconditionError, reduction.NoQualifyingPair,
    factor.InconsistentImages, gamma_complex.ResourceLimit, gamma_complex.UnknownFormat,
    ValueError, OSError,
)


def _read_json(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return json.loads(text)


def _read_curve(path: str) -> curve_model.CurveDiagram:
    return curve_model.from_json(_read_json(path))


class _DomainFailure(Exception):
    def __init__(self, kind: str, message: str, detail=None):
        super().__init__(message)
        self.kind, self.detail = kind, detail


def _cmd_validate(args, cfg):
    report = curve_model.validate(_read_json(args.curve))
    if not report.ok:
        raise _DomainFailure("InvalidDiagram", "diagram failed validation", list(report.problems))
    return {"ok": True, "problems": []}


def _cmd_minimize(args, cfg):
    return curve_model.to_json(curve_model.minimize(_read_curve(args.curve)))


def _cmd_apply(args, cfg):
    return curve_model.to_json(goeritz_action.apply_word(args.word, _read_curve(args.curve)))


def _cmd_reduce(args, cfg):
    r, certificate = reduction.reduce_step(_read_curve(args.curve))
    return {"curve": curve_model.to_json(r), "certificate": certificate}


def _cmd_path(args, cfg):
    return {"word": factor.path_to_base(_read_curve(args.curve), cfg.n_max)}


def _cmd_factor(args, cfg):
    images = factor.CurveImages.from_json(_read_json(args.images))
    return {"word": factor.factorize(images, cfg.n_max)}


def _ball(args, cfg):
    radius = cfg.ball_radius if args.radius is None else args.radius
    n_range = cfg.n_range if args.n_range is None else args.n_range
    return gamma_complex.build_ball(radius, n_range, cfg.vertex_cap)


def _cmd_ball(args, cfg):
    ball = _ball(args, cfg)
    report = gamma_complex.verify_local_structure(ball)
    depths = [0] * (ball.radius + 1)
    for v in ball.vertices:
        depths[v.depth] += 1
    return {
        "radius": ball.radius, "n_range": ball.n_range,
        "vertices": len(ball.vertices), "by_depth": depths,
        "edges": len(ball.edges), "simplices": len(ball.simplices),
        "local_structure": {"ok": report.ok, "summary": report.summary(),
                            "bad_edges": [list(e) + [k] for e, k in report.bad_edges]},
    }


def _cmd_relcheck(args, cfg):
    seed = cfg.seed if args.seed is None else args.seed
    rng = random.Random(seed)
    sample = [goeritz_action.apply_word(goeritz_action.random_word(rng, args.length))
              for _ in range(args.samples)]
    report = goeritz_action.check_relations(sample)
    return {"ok": report.ok, "summary": report.summary(), "seed": seed,
            "failures": dict(report.failures)}


def _cmd_export(args, cfg):
    data = gamma_complex.export(_ball(args, cfg), args.format)
    if args.output:
        Path(args.output).write_bytes(data)
        return {"written": args.output, "bytes": len(data)}
    return data


def _parser() -> _Parser:
    p = _Parser(prog="goeritz", description="Exact computations with the genus-2 Goeritz group.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, what in (("validate", "check a curve diagram"),
                       ("minimize", "minimal-position form of a curve"),
                       ("reduce", "one descent step toward the base sphere"),
                       ("path", "word carrying the base sphere to a curve")):
        sub.add_parser(name, help=what).add_argument("curve", help="curve JSON file or -")
    s = sub.add_parser("apply", help="apply a generator word to a curve")
    s.add_argument("word")
    s.add_argument("curve")
    sub.add_parser("factor", help="factor a map given by reference images").add_argument("images")
    for name in ("ball", "export"):
        s = sub.add_parser(name, help="ball in the complex of reducing spheres"
                           if name == "ball" else "export a ball as DOT or JSON")
        s.add_argument("--radius", type=int)
        s.add_argument("--n-range", type=int)
    s.add_argument("--format", choices=("dot", "json"), default="json")
    s.add_argument("-o", "--output")
    s = sub.add_parser("relcheck", help="check the presentation relations on random curves")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--length", type=int, default=8)
    s.add_argument("--seed", type=int)
    return p


_COMMANDS = {
    "validate": _cmd_validate, "minimize": _cmd_minimize, "apply": _cmd_apply,
    "reduce": _cmd_reduce, "path": _cmd_path, "factor": _cmd_factor,
    "ball": _cmd_ball, "relcheck": _cmd_relcheck, "export": _cmd_export,
}


def _fail(kind: str, message: str, detail=None) -> None:
    payload = {"error": kind, "message": message}
    if detail is not None:
        payload["detail"] = detail
    print(json.dumps(payload), file=sys.stderr)


def run(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except _UsageError as exc:
        _fail("UsageError", str(exc))
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        cfg = load_config()
        result = _COMMANDS[args.command](args, cfg)
        if args.command in ("ball", "relcheck"):
            result["config"] = asdict(cfg)
    except _DomainFailure as exc:
        _fail(exc.kind, str(exc), exc.detail)
        return 1
    except json.JSONDecodeError as exc:
        _fail("MalformedJSON", str(exc))
        return 1
    except DOMAIN_ERRORS as exc:
        _fail(type(exc).__name__, str(exc))
        return 1
    if isinstance(result, bytes):
        sys.stdout.write(result.decode())
    else:
        print(json.dumps(result, indent=2))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
