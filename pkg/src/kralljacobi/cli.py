"""Command-line runner: config, subcommands, reports, operator caching.

Subcommands
    qpoly     emit the transformed family q_n (and weighted variants)
    algebra   emit the canonical basis of the eigenvalue algebra
    fit       fit and cache the commuting operator of each basis member
    verify    run named verification suites and report pass/fail
    mvbasis   emit the multivariate eigenbasis Q_{n,i,j}
    mvverify  run the multivariate eigen and orthogonality suites

All output is UTF-8 JSON with two-space indentation and sorted keys;
rationals travel as 'p/q' strings, never floats.  Reports are deterministic
for a fixed (config, seed) apart from the wall_time field.  Exit status is
0 only when every check in the run passed.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .checks import SUITES, check_multivariate_eigenbasis, check_sobolev_orthogonality, run_suite
from .darboux import DarbouxSpec, DegeneracyError, QFamily
from .krall import basis_up_to_degree
from .multivariate import q_multivariate, sigma_dim
from .ncalg import FitError, NCOp, fit_operator
from .rationals import as_fraction, parse_rat, rat_str

__all__ = ["RunConfig", "cache_roundtrip", "read_operator_cache", "write_operator_cache", "main"]


@dataclass
class RunConfig:
    alpha: int = 1
    beta: Fraction = Fraction(0)
    k: int = 1
    a: tuple = (Fraction(1),)
    d: int | None = None
    n_max: int = 8
    s_max: int = 4
    degree_max: int = 4
    seed: int = 0
    suite: str = "all"
    out: Path | None = None
    cache_dir: Path = field(default_factory=lambda: Path("opcache"))

    def __post_init__(self):
        self.beta = as_fraction(self.beta)
        self.a = tuple(as_fraction(x) for x in self.a)
        if self.k > self.alpha:
            raise ValueError(f"config violation: k={self.k} exceeds alpha={self.alpha}")
        if len(self.a) != self.k:
            raise ValueError(f"config violation: a has {len(self.a)} entries, need k={self.k}")
        for name in ("n_max", "s_max", "degree_max", "seed"):
            if getattr(self, name) < 0:
                raise ValueError(f"config violation: {name} must be nonnegative")

    @property
    def spec(self):
        return DarbouxSpec(self.alpha, self.beta, self.k, self.a)

    def require_dimension(self):
        """Multivariate commands need d with the matching weight parameter."""
        if self.d is None:
            raise ValueError("config violation: multivariate commands need d")
        if self.d < 2:
            raise ValueError(f"config violation: d={self.d} must be at least 2")
        want = Fraction(self.d, 2) - 1
        if self.beta != want:
            raise ValueError(
                f"config violation: beta={rat_str(self.beta)} but d={self.d} needs beta={rat_str(want)}"
            )

    def echo(self):
        """JSON-ready copy of the configuration, rationals as strings."""
        return {
            "alpha": self.alpha,
            "beta": rat_str(self.beta),
            "k": self.k,
            "a": [rat_str(x) for x in self.a],
            "d": self.d,
            "n_max": self.n_max,
            "s_max": self.s_max,
            "degree_max": self.degree_max,
            "seed": self.seed,
            "suite": self.suite,
            "cache_dir": str(self.cache_dir),
        }


_CONFIG_KEYS = ("alpha", "beta", "k", "a", "d", "n_max", "s_max", "degree_max", "seed", "suite", "out", "cache_dir")


def load_config(args):
    """Merge defaults, the optional JSON config file, and flag overrides."""
    data = {}
    if args.config is not None:
        raw = json.loads(Path(args.config).read_text(encoding="utf-8"))
        unknown = sorted(set(raw) - set(_CONFIG_KEYS))
        if unknown:
            raise ValueError(f"config violation: unknown keys in {args.config}: {unknown}")
        data.update(raw)
    for key in _CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            data[key] = value
    if isinstance(data.get("a"), str):
        data["a"] = [piece.strip() for piece in data["a"].split(",") if piece.strip()]
    for key in ("out", "cache_dir"):
        if data.get(key) is not None:
            data[key] = Path(data[key])
    return RunConfig(**data)


def _dump(payload):
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def emit(payload, out):
    text = _dump(payload)
    sys.stdout.write(text)
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")


def _poly_record(n, poly, s=None):
    rec = {"n": n, "coeffs": [rat_str(c) for c in poly.coeffs]}
    if s is not None:
        rec["s"] = s
    return rec


def _mpoly_terms(p):
    # [[exponent vector, 'p/q'], ...], lexicographically sorted
    return [[list(e), rat_str(c)] for e, c in sorted(p.terms.items())]


def _check_records(results):
    records = [
        {"name": r.name, "status": "pass" if r.passed else "fail", "witness": r.witness}
        for r in results
    ]
    records.sort(key=lambda rec: rec["name"])
    return records


# ---------------------------------------------------------------------------
# operator cache


def write_operator_cache(op, path):
    """Serialize one operator; the byte layout is canonical and stable."""
    payload = {
        "beta": rat_str(op.beta),
        "terms": [[i, j, rat_str(c)] for (i, j), c in sorted(op.terms.items())],
    }
    Path(path).write_text(_dump(payload), encoding="utf-8")


def read_operator_cache(path):
    """Parse a cached operator; malformed content is an error, never ignored."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"cache {path}: not valid JSON ({exc})") from None
    if not isinstance(data, dict) or set(data) != {"beta", "terms"}:
        raise ValueError(f"cache {path}: expected an object with keys beta, terms")
    try:
        beta = parse_rat(data["beta"])
    except ValueError:
        raise ValueError(f"cache {path}: malformed beta entry {data['beta']!r}") from None
    terms = {}
    for idx, entry in enumerate(data["terms"]):
        ok = (
            isinstance(entry, list)
            and len(entry) == 3
            and isinstance(entry[0], int)
            and isinstance(entry[1], int)
            and entry[0] >= 0
            and entry[1] >= 0
        )
        if ok:
            try:
                terms[(entry[0], entry[1])] = parse_rat(entry[2])
            except ValueError:
                ok = False
        if not ok:
            raise ValueError(f"cache {path}: malformed term entry {idx}: {entry!r}")
    return NCOp(beta, terms)


def cache_roundtrip(op, path):
    """Write op at path unless present, read it back, and insist they agree.

    An existing file is read, never overwritten: stale or foreign content
    surfaces as an error instead of being silently replaced.
    """
    path = Path(path)
    if not path.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
        write_operator_cache(op, path)
    cached = read_operator_cache(path)
    if cached != op:
        raise ValueError(f"cache {path}: stored operator differs from the computed one")
    return cached


def _cache_name(config, degree):
    a_token = "_".join(rat_str(x).replace("/", "r") for x in config.a)
    beta_token = rat_str(config.beta).replace("/", "r")
    return f"bf_alpha{config.alpha}_beta{beta_token}_k{config.k}_a{a_token}_deg{degree}.json"


# ---------------------------------------------------------------------------
# subcommands


def cmd_qpoly(config, args):
    qfam = QFamily(config.spec)
    if args.n is not None:
        indices = [args.n]
    else:
        indices = list(range(config.n_max + 1))
    family = [_poly_record(n, qfam.q(n)) for n in indices]
    shifted = [
        _poly_record(n, qfam.shifted(n, s), s)
        for s in range(1, config.s_max + 1)
        for n in indices
    ]
    payload = {
        "command": "qpoly",
        "config": config.echo(),
        "family": family,
        "shifted": shifted,
    }
    emit(payload, config.out)
    return 0


def cmd_algebra(config, args):
    basis = basis_up_to_degree(config.spec, config.degree_max)
    payload = {
        "command": "algebra",
        "config": config.echo(),
        "degree": config.degree_max,
        "basis": [[rat_str(c) for c in f.coeffs] for f in basis],
    }
    emit(payload, config.out)
    return 0


def cmd_fit(config, args):
    spec = config.spec
    qfam = QFamily(spec)
    operators = []
    for f in basis_up_to_degree(spec, config.degree_max):
        op = fit_operator(f, spec, qfam)
        path = Path(config.cache_dir) / _cache_name(config, f.degree)
        cache_roundtrip(op, path)
        operators.append(
            {
                "degree": f.degree,
                "profile": [rat_str(c) for c in f.coeffs],
                "beta": rat_str(op.beta),
                "terms": [[i, j, rat_str(c)] for (i, j), c in sorted(op.terms.items())],
                "cache_file": str(path),
            }
        )
    payload = {"command": "fit", "config": config.echo(), "operators": operators}
    emit(payload, config.out)
    return 0


def _report(command, config, results, started):
    payload = {
        "command": command,
        "config": config.echo(),
        "checks": _check_records(results),
        "wall_time": round(time.time() - started, 3),
    }
    emit(payload, config.out)
    return 0 if all(r.passed for r in results) else 1


def cmd_verify(config, args):
    started = time.time()
    try:
        results = run_suite(config.suite, config)
    except KeyError as exc:
        raise ValueError(str(exc.args[0])) from None
    return _report("verify", config, results, started)


def cmd_mvbasis(config, args):
    config.require_dimension()
    spec = config.spec
    members = []
    for n in range(config.n_max + 1):
        for i in range(n // 2 + 1):
            for j in range(1, sigma_dim(config.d, n - 2 * i) + 1):
                Q = q_multivariate(n, i, j, spec, config.d)
                members.append({"n": n, "i": i, "j": j, "terms": _mpoly_terms(Q)})
    payload = {"command": "mvbasis", "config": config.echo(), "members": members}
    emit(payload, config.out)
    return 0


def cmd_mvverify(config, args):
    config.require_dimension()
    started = time.time()
    results = [
        check_multivariate_eigenbasis(min(config.n_max, 6), (config.d,)),
        check_sobolev_orthogonality(min(config.degree_max, 5), config.d, (config.a[0],)),
    ]
    return _report("mvverify", config, results, started)


_COMMANDS = {
    "qpoly": cmd_qpoly,
    "algebra": cmd_algebra,
    "fit": cmd_fit,
    "verify": cmd_verify,
    "mvbasis": cmd_mvbasis,
    "mvverify": cmd_mvverify,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kralljacobi",
        description="Exact transformed Jacobi families, their operator algebras, and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "qpoly": "emit the transformed polynomials (and weighted variants) as JSON",
        "algebra": "emit the canonical algebra basis up to the configured degree",
        "fit": "fit the commuting operator of each basis member and cache the tables",
        "verify": "run verification suites (see --suite) and emit a report",
        "mvbasis": "emit the multivariate eigenbasis for the configured dimension",
        "mvverify": "run the multivariate eigen and orthogonality checks",
    }
    for name, desc in descriptions.items():
        p = sub.add_parser(name, help=desc, description=desc)
        p.add_argument("--config", type=Path, help="JSON config file; flags override its entries")
        p.add_argument("--alpha", type=int)
        p.add_argument("--beta", help="rational string, e.g. 1/2")
        p.add_argument("--k", type=int)
        p.add_argument("--a", help="comma-separated rational strings, e.g. 1,1")
        p.add_argument("--d", type=int, help="ambient dimension for multivariate commands")
        p.add_argument("--n-max", dest="n_max", type=int)
        p.add_argument("--s-max", dest="s_max", type=int)
        p.add_argument("--degree", dest="degree_max", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--suite", choices=("all", *sorted(SUITES)))
        p.add_argument("--out", type=Path, help="also write the JSON output to this path")
        p.add_argument("--cache-dir", dest="cache_dir", type=Path)
        if name == "qpoly":
            p.add_argument("--n", type=int, help="emit a single index instead of 0..n_max")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args)
        return _COMMANDS[args.command](config, args)
    except (ValueError, DegeneracyError, FitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
