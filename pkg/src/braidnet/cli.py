"""
Command-line surface: enumeration, invariant computation, sweeps, and
report emission.

Exit codes: 0 success, 1 input error, 2 resource guard.  The
``BRAIDNET_CAP`` environment variable overrides the default size cap.
Reports are written atomically (temp file + rename) so a failed run
never leaves a partial file behind.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import __version__, braid, constructions, invariants, survey
from .symmetric import (CapExceeded, enumerate_networks, format_network,
                        infer_n, is_sorting_network, num_crossings,
                        parse_network, stanley_count)

DEFAULT_CAP = 5_000_000

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAP = 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("BRAIDNET_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"BRAIDNET_CAP must be an integer, got {env!r}")
    return DEFAULT_CAP


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".braidnet-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _write_json(path: str, payload: dict) -> None:
    payload = {"version": __version__, **payload}
    _write_atomic(path, json.dumps(payload, indent=2, sort_keys=False) + "\n")


def _parse_network_arg(text: str) -> tuple[int, tuple[int, ...]]:
    word = parse_network(text)
    n = infer_n(word)
    if not is_sorting_network(n, word):
        raise InputError(f"{text!r} is not a sorting network")
    return n, word


def _parse_signature_arg(text: str, length: int) -> tuple[int, ...]:
    signs = constructions.parse_signature(text)
    if len(signs) != length:
        raise InputError(
            f"signature {text!r} has length {len(signs)}, expected {length}")
    return signs


# ---------------------------------------------------------------------------
# Subcommands

def cmd_enumerate(args) -> int:
    cap = _cap(args)
    if args.count_only:
        print(stanley_count(args.n))
        return EXIT_OK
    networks = enumerate_networks(args.n, cap=cap, workers=args.workers)
    for word in networks:
        print(format_network(args.n, word))
    return EXIT_OK


def cmd_invariants(args) -> int:
    if args.braid is not None:
        letters = braid.parse_signed_word(args.braid)
        if not letters:
            raise InputError("empty braid word")
        n = args.n if args.n else max(abs(l) for l in letters) + 1
        source = {"braid": braid.format_signed_word(letters)}
    elif args.dsb is not None:
        n, word = _parse_network_arg(args.dsb[0])
        signs = _parse_signature_arg(args.dsb[1], num_crossings(n))
        letters = constructions.dsb(n, word, signs)
        source = {"dsb": [format_network(n, word),
                          constructions.format_signature(signs)]}
    else:
        n, word = _parse_network_arg(args.asb[0])
        signs = _parse_signature_arg(args.asb[1], num_crossings(n))
        letters = constructions.asb(n, word, signs)
        source = {"asb": [format_network(n, word),
                          constructions.format_signature(signs)]}

    try:
        conjugators = braid.comb(n, letters)
    except braid.NotPureError as exc:
        raise InputError(str(exc))
    lk = {(i, j): invariants.magnus_count(conjugators[j], (i,))
          for i in range(1, n + 1) for j in range(i + 1, n + 1)}
    mu3 = invariants.mu3_vector(n, letters, conjugators)
    payload = {
        "version": __version__,
        "n": n,
        **source,
        "lk": invariants.lk_to_json(lk),
        "lk_l1": invariants.lk_l1(lk),
        "mu3": invariants.mu3_to_json(mu3),
        "mu3_l1": invariants.mu3_l1(mu3),
        "trivial": all(not a for a in conjugators.values()),
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def _survey_dsb(args, cap) -> None:
    n = args.n
    work = stanley_count(n) * 2 ** num_crossings(n)
    if work > cap:
        raise CapExceeded(f"DSB survey would cover {work} braids "
                          f"(cap {cap})", work)
    rows = []
    for word in enumerate_networks(n, cap=cap):
        for rec in survey.sweep_dsb(n, word):
            rows.append(vars(rec))
    _write_json(os.path.join(args.out, f"dsb_n{n}.json"),
                {"n": n, "records": rows})


def _survey_asb(args, cap) -> None:
    n = args.n
    work = stanley_count(n) * 2 ** num_crossings(n)
    if work > cap:
        raise CapExceeded(f"ASB survey would cover {work} braids "
                          f"(cap {cap})", work)
    rows = []
    for word in enumerate_networks(n, cap=cap):
        for rec in survey.sweep_asb(n, word):
            rows.append(vars(rec))
    _write_json(os.path.join(args.out, f"asb_n{n}.json"),
                {"n": n, "records": rows})


def _survey_loops(args, cap) -> None:
    n = args.n
    loops = survey.theorem_loops(n)
    results = []
    csv_lines = ["first,second,lk_l1,count"]
    for first, second in loops:
        row = survey.sweep_loop(n, first, second)
        results.append(dict(row, mean_lk_l1=survey.frac_str(row["mean_lk_l1"]),
                            histogram=[{"value": k, "count": c}
                                       for k, c in row["histogram"].items()]))
        for k, c in row["histogram"].items():
            csv_lines.append(f"{row['first']},{row['second']},{k},{c}")
    _write_json(os.path.join(args.out, f"loops_n{n}.json"),
                {"n": n, "loops": results})
    _write_atomic(os.path.join(args.out, f"loops_n{n}.csv"),
                  "\n".join(csv_lines) + "\n")


def _survey_slim(args, cap) -> None:
    n = args.n
    rows = []
    for word in enumerate_networks(n, cap=cap):
        weak, strong = survey.slim_check(n, word)
        rows.append({"network": format_network(n, word),
                     "slim_weak": weak, "slim_strong": strong})
    _write_json(os.path.join(args.out, f"slim_n{n}.json"),
                {"n": n, "networks": rows})


def _survey_fatness(args, cap) -> None:
    n = args.n
    rows = []
    for word in enumerate_networks(n, cap=cap):
        rows.append({"network": format_network(n, word),
                     "fatness": survey.fatness(n, word),
                     "fatness_over_unlinked":
                         survey.fatness_over_unlinked(n, word)})
    _write_json(os.path.join(args.out, f"fatness_n{n}.json"),
                {"n": n, "networks": rows})


def _survey_distribution(args, cap) -> None:
    from . import plotting
    n = args.n
    report = survey.distribution_report(n, workers=args.workers, cap=cap)
    _write_json(os.path.join(args.out, f"distribution_n{n}.json"), report)
    csv_lines = ["value,count"]
    for row in report["mean_histogram"]:
        csv_lines.append(f"{row['mean']},{row['count']}")
    _write_atomic(os.path.join(args.out, f"distribution_n{n}.csv"),
                  "\n".join(csv_lines) + "\n")
    plotting.save_mean_histogram(
        report["mean_histogram"],
        os.path.join(args.out, f"distribution_n{n}.svg"),
        title=f"n={n}: per-network mean |mu3| over unlinked DSB")


def _survey_theorems(args, cap) -> None:
    n = args.n
    report = survey.verify_theorems(n, workers=args.workers)
    _write_json(os.path.join(args.out, f"theorems_n{n}.json"), report)


def cmd_survey(args) -> int:
    cap = _cap(args)
    os.makedirs(args.out, exist_ok=True)
    handler = {
        "dsb": _survey_dsb,
        "asb": _survey_asb,
        "loops": _survey_loops,
        "slim": _survey_slim,
        "fatness": _survey_fatness,
        "distribution": _survey_distribution,
        "theorems": _survey_theorems,
    }[args.what]
    handler(args, cap)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = survey.verify_theorems(args.n, workers=args.workers)
    print(json.dumps({"version": __version__, **report}, indent=2))
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="braidnet",
                     description="Sorting networks, signed pure braids, "
                                 "and their Milnor invariants.")
    parser.add_argument("--version", action="version",
                        version=f"braidnet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list sorting networks")
    p.add_argument("n", type=int)
    p.add_argument("--count-only", action="store_true",
                   help="print the Stanley count instead of the networks")
    p.add_argument("--cap", type=int, default=None,
                   help="maximum number of networks to enumerate")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("invariants",
                       help="linking numbers, mu3 vector, and triviality")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--braid", metavar="WORD",
                       help='signed braid word, e.g. "1+ 2- 1+" or "1,-2,1"')
    group.add_argument("--dsb", nargs=2, metavar=("NETWORK", "SIGNATURE"))
    group.add_argument("--asb", nargs=2, metavar=("NETWORK", "SIGNATURE"))
    p.add_argument("-n", type=int, default=None,
                   help="strand count (inferred from the word by default)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("survey", help="exhaustive sweeps and reports")
    p.add_argument("n", type=int)
    p.add_argument("--what", required=True,
                   choices=["dsb", "asb", "loops", "slim", "fatness",
                            "distribution", "theorems"])
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--workers", type=int,
                   default=max(1, os.cpu_count() or 1))
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify", help="run the theorem checks, print JSON")
    p.add_argument("n", type=int)
    p.add_argument("--workers", type=int,
                   default=max(1, os.cpu_count() or 1))
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"braidnet: cap exceeded: {exc} (would produce {exc.count})",
              file=sys.stderr)
        return EXIT_CAP
    except (InputError, ValueError, braid.NotPureError) as exc:
        print(f"braidnet: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
