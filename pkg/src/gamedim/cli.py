"""Command-line front end: proof replay, coalition queries, and exports."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import certificates, cover, eu, separation
from .games import Coalition

EXIT_OK = 0
EXIT_STEP_FAILED = 1
EXIT_USAGE = 2


@dataclass
class Step:
    name: str
    status: str
    detail: str


@dataclass
class ProofTranscript:
    notes: list[str]
    steps: list[Step]
    conclusion: str

    @property
    def verified(self) -> bool:
        return bool(self.steps) and all(s.status == "PASS" for s in self.steps)

    def to_text(self) -> str:
        lines = ["council voting rule, dimension lower bound"]
        lines += [f"note: {n}" for n in self.notes]
        lines.append("")
        width = max((len(s.name) for s in self.steps), default=0)
        for i, s in enumerate(self.steps, start=1):
            lines.append(f"step {i}  {s.name:<{width}}  {s.status:<4}  {s.detail}")
        lines.append("")
        lines.append(f"conclusion: {self.conclusion}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "notes": list(self.notes),
            "steps": [{"name": s.name, "status": s.status, "detail": s.detail}
                      for s in self.steps],
            "conclusion": self.conclusion,
        }


def _labels(parts, sep=" ") -> str:
    return sep.join("{" + ",".join(f"L{v}" for v in sorted(p)) + "}" for p in parts)


def run_verification(table: eu.MemberTable | None = None) -> ProofTranscript:
    """Replay the whole lower-bound argument; stops at the first failing step."""
    game = eu.build_eu_game(table)
    notes = [
        f"total population {game.table.total_population}; "
        f"member quota {game.member_quota} of {eu.N_MEMBERS}; "
        f"population quota {game.population_quota}",
        "the population rule is read as a closed inequality: 20*pop(C) >= 13*total",
    ]
    steps: list[Step] = []

    def record(name: str, ok: bool, detail: str) -> bool:
        steps.append(Step(name, "PASS" if ok else "FAIL", detail))
        return ok

    def conclude() -> ProofTranscript:
        if steps and steps[-1].status != "PASS":
            conclusion = f"not established (failed at: {steps[-1].name})"
        else:
            conclusion = "dimension >= 8"
        return ProofTranscript(notes=notes, steps=steps, conclusion=conclusion)

    # 1: the bundled losing and winning coalitions classify as advertised
    losing, winning = eu.reference_coalitions()
    bad = [f"L{i}" for i, c in enumerate(losing, start=1) if game.is_winning(c)]
    bad += [f"W{i}" for i, c in enumerate(winning, start=1) if not game.is_winning(c)]
    if not record("reference coalitions", not bad,
                  "15 losing and 12 winning confirmed" if not bad
                  else "misclassified: " + ", ".join(bad)):
        return conclude()

    # 2: pair certificates for the 75 two-element losing sets
    transfers = anchors = 0
    failure = ""
    for i, j in eu.NONSEPARABLE_PAIRS:
        try:
            if j == eu.ANCHOR_LABEL:
                cert = certificates.build_anchor_certificate(losing[i - 1], game)
                anchors += 1
            else:
                cert = certificates.build_pair_certificate(losing[i - 1], losing[j - 1], game)
                transfers += 1
            if not certificates.verify_balance(cert, game.game):
                failure = f"certificate for {{L{i},L{j}}} does not verify"
                break
        except (ValueError, certificates.CertificateError) as err:
            failure = f"{{L{i},L{j}}}: {err}"
            break
    if not record("pair certificates", not failure,
                  f"{transfers + anchors} verified ({transfers} transfer, {anchors} anchor)"
                  if not failure else failure):
        return conclude()

    # 3: the five bundled triple certificates
    failure = ""
    for triple in eu.NONSEPARABLE_TRIPLES:
        witnesses = eu.TRIPLE_WITNESS_LABELS[triple]
        cert = certificates.BalanceCertificate(
            losing=(losing[i - 1] for i in triple),
            winning=(winning[w - 1] for w in witnesses),
        )
        if not certificates.verify_balance(cert, game.game):
            failure = f"certificate for {_labels([triple])} does not verify"
            break
    if not record("triple certificates", not failure,
                  "5 verified" if not failure else failure):
        return conclude()

    try:
        family = certificates.nonseparable_family(game)
    except certificates.CertificateError as err:
        record("certified family", False, str(err))
        return conclude()

    # 4: the maximal independent parts are exactly the 21 bundled ones
    maximal = cover.enumerate_maximal_independent(family.hypergraph)
    expected = set(cover.COUNCIL_MAXIMAL_PARTS)
    if not record("maximal independent sets", set(maximal) == expected,
                  f"{len(maximal)} sets match the bundled family"
                  if set(maximal) == expected else
                  f"enumeration differs: got {len(maximal)} sets"):
        return conclude()

    # 5: exhaustive search finds no 7-cover
    refutation = cover.no_k_cover(family.hypergraph, 7)
    if not record("exhaustive cover search", refutation.refuted and refutation.exhaustive,
                  "no 7-cover exists over the 21 candidate parts"
                  if refutation.refuted else
                  f"found a 7-cover: {_labels(refutation.counterexample.parts)}"):
        return conclude()

    # 6: the two dual weightings refute every 7-cover independently
    duals_ok = len(refutation.duals) == 2
    detail = ""
    if duals_ok:
        without, within = refutation.duals
        duals_ok = (without.total > without.bound
                    and within.total > within.bound - 1)
        detail = (f"totals {without.total} > {without.bound} (parts avoiding "
                  f"{_labels([without.excluded_part])}) and {within.total} > "
                  f"{within.bound - 1} (a part equal to it)")
    if not record("dual refutation", duals_ok,
                  detail if duals_ok else "bundled dual certificates failed to verify"):
        return conclude()

    # 7: the minimum cover uses exactly 8 parts
    solution = cover.min_cover(family.hypergraph, maximal)
    ok = solution.k == 8 and solution.verify(family.hypergraph)
    record("minimum cover", ok,
           f"8 parts: {_labels(solution.parts)}" if ok
           else f"minimum cover has {solution.k} parts")
    return conclude()


def _load_table(path: str | None) -> eu.MemberTable:
    if path is None:
        return eu.default_members()
    with open(path, encoding="utf-8") as fh:
        return eu.load_members(fh)


def _read_json(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def parse_coalition(text: str, n: int = eu.N_MEMBERS) -> Coalition:
    """Parse '1,4-7,12' style index lists or bundled labels like 'L15'."""
    text = text.strip()
    if text and text[0].upper() in "LW" and text[1:].isdigit():
        return eu.labeled_coalition(text)
    indices: list[int] = []
    if text:
        for part in text.split(","):
            part = part.strip()
            if "-" in part:
                lo_text, hi_text = part.split("-", 1)
                lo, hi = int(lo_text), int(hi_text)
                if lo > hi:
                    raise ValueError(f"empty range {part!r}")
                indices.extend(range(lo, hi + 1))
            elif part:
                indices.append(int(part))
    return Coalition.from_indices(indices, n)


def cmd_verify(args: argparse.Namespace) -> int:
    transcript = run_verification(_load_table(args.members))
    if args.format == "json":
        sys.stdout.write(_dump_json(transcript.to_json_obj()))
    else:
        sys.stdout.write(transcript.to_text())
    return EXIT_OK if transcript.verified else EXIT_STEP_FAILED


def cmd_classify(args: argparse.Namespace) -> int:
    game = eu.build_eu_game(_load_table(args.members))
    coalition = parse_coalition(args.coalition)
    report = game.classify(coalition)
    if args.format == "json":
        obj = {
            "coalition": list(coalition.members),
            "members": len(coalition),
            "population": report.population_sum,
            "rule55": report.rule55,
            "rule65": report.rule65,
            "rule25": report.rule25,
            "winning": report.winning,
        }
        sys.stdout.write(_dump_json(obj))
    else:
        yes_no = {True: "yes", False: "no"}
        sys.stdout.write(
            f"coalition: {coalition}\n"
            f"members: {len(coalition)} of {eu.N_MEMBERS}\n"
            f"population: {report.population_sum} "
            f"(quota {game.population_quota})\n"
            f"members rule   (>= {game.member_quota}): {yes_no[report.rule55]}\n"
            f"population rule (>= 65%): {yes_no[report.rule65]}\n"
            f"outright rule  (>= {eu.OUTRIGHT_QUOTA}): {yes_no[report.rule25]}\n"
            f"winning: {yes_no[report.winning]}\n"
        )
    return EXIT_OK


def cmd_separate(args: argparse.Namespace) -> int:
    instance = separation.instance_from_json(_read_json(args.instance))
    result = separation.lp_feasible(instance)
    if isinstance(result, separation.Separable):
        sys.stdout.write("SEPARABLE\n")
        sys.stdout.write("weights: " + " ".join(str(w) for w in result.weights) + "\n")
        sys.stdout.write(f"quota: {result.quota}\n")
    else:
        sys.stdout.write("NOT SEPARABLE\n")
        sys.stdout.write(result.farkas_note + "\n")
    return EXIT_OK


def cmd_certs_check(args: argparse.Namespace) -> int:
    game = eu.build_eu_game(_load_table(args.members))
    cert = certificates.certificate_from_json(_read_json(args.certificate), eu.N_MEMBERS)
    if certificates.verify_balance(cert, game.game):
        sys.stdout.write(
            f"certificate verifies: {len(cert.losing)} losing vs "
            f"{len(cert.winning)} winning, incidences balance\n"
        )
        return EXIT_OK
    sys.stdout.write("certificate REJECTED\n")
    return EXIT_STEP_FAILED


def cmd_cover_solve(args: argparse.Namespace) -> int:
    h = cover.hypergraph_from_json(_read_json(args.hypergraph))
    solution = cover.min_cover(h, cover.enumerate_maximal_independent(h))
    sys.stdout.write(f"minimum cover: {solution.k} parts\n")
    for part in solution.parts:
        sys.stdout.write("  " + " ".join(str(v) for v in sorted(part)) + "\n")
    if args.k is not None and solution.k > args.k:
        sys.stdout.write(f"no {args.k}-cover exists\n")
        return EXIT_STEP_FAILED
    return EXIT_OK


def cmd_cover_refute(args: argparse.Namespace) -> int:
    h = cover.hypergraph_from_json(_read_json(args.hypergraph))
    refutation = cover.no_k_cover(h, args.k)
    if refutation.refuted:
        sys.stdout.write(f"no {args.k}-cover exists (exhaustive search)\n")
        if refutation.duals:
            sys.stdout.write(
                f"confirmed by {len(refutation.duals)} dual weight certificates\n"
            )
        return EXIT_OK
    sys.stdout.write(f"refutation failed, found a {refutation.counterexample.k}-cover:\n")
    for part in refutation.counterexample.parts:
        sys.stdout.write("  " + " ".join(str(v) for v in sorted(part)) + "\n")
    return EXIT_STEP_FAILED


def cmd_cover_duals(args: argparse.Namespace) -> int:
    h = cover.hypergraph_from_json(_read_json(args.hypergraph))
    if not cover.is_council_family(h):
        sys.stdout.write("no bundled dual certificates for this hypergraph\n")
        return EXIT_STEP_FAILED
    all_ok = True
    for cert in cover.COUNCIL_DUALS:
        ok = cover.verify_dual_certificate(cert, h)
        all_ok = all_ok and ok
        sys.stdout.write(
            f"weights ({', '.join(str(w) for w in cert.weights)}) "
            f"bound {cert.bound} excluded {sorted(cert.excluded_part)} "
            f"total {cert.total}: {'verified' if ok else 'REJECTED'}\n"
        )
    return EXIT_OK if all_ok else EXIT_STEP_FAILED


def cmd_export(args: argparse.Namespace) -> int:
    game = eu.build_eu_game(_load_table(args.members))
    family = certificates.nonseparable_family(game)
    if args.what == "hypergraph":
        payload = cover.hypergraph_to_json(family.hypergraph)
    elif args.what == "maximal-sets":
        maximal = cover.enumerate_maximal_independent(family.hypergraph)
        payload = {"nodes": family.hypergraph.node_count,
                   "sets": [sorted(s) for s in maximal]}
    else:
        records = []
        for edge in family.hypergraph.edges:
            record = {"edge": sorted(edge)}
            record.update(certificates.certificate_to_json(family.certificates[edge]))
            records.append(record)
        payload = {"n": eu.N_MEMBERS, "certificates": records}
    with open(args.path, "w", encoding="utf-8") as fh:
        fh.write(_dump_json(payload))
    sys.stdout.write(f"wrote {args.what} to {args.path}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gamedim",
        description="Voting-game dimension machinery and the council lower-bound replay.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_members(p: argparse.ArgumentParser) -> None:
        p.add_argument("--members", metavar="CSV", default=None,
                       help="override the bundled member table (index,name,population)")

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="replay the full dimension lower-bound argument")
    add_members(p)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="evaluate one coalition under the council rule")
    p.add_argument("coalition", help="index list like '1,4-7' or a bundled label like L15")
    add_members(p)
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("separate", help="decide weighted separability of an instance file")
    p.add_argument("instance", help="JSON instance with winning_constraints/losing_targets")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("certs", help="certificate utilities")
    certs_sub = p.add_subparsers(dest="certs_command", required=True)
    q = certs_sub.add_parser("check", help="verify a certificate file against the council game")
    q.add_argument("certificate", help="JSON certificate with losing/winning index arrays")
    add_members(q)
    q.set_defaults(func=cmd_certs_check)

    p = sub.add_parser("cover", help="hypergraph cover utilities")
    cover_sub = p.add_subparsers(dest="cover_command", required=True)
    q = cover_sub.add_parser("solve", help="find a minimum cover")
    q.add_argument("hypergraph", help="JSON hypergraph {nodes, edges}")
    q.add_argument("--k", type=int, default=None, help="also require a cover of at most K parts")
    q.set_defaults(func=cmd_cover_solve)
    q = cover_sub.add_parser("refute", help="prove that no k-cover exists")
    q.add_argument("hypergraph", help="JSON hypergraph {nodes, edges}")
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=cmd_cover_refute)
    q = cover_sub.add_parser("duals", help="show bundled dual weight certificates")
    q.add_argument("hypergraph", help="JSON hypergraph {nodes, edges}")
    q.set_defaults(func=cmd_cover_duals)

    p = sub.add_parser("export", help="write bundled artifacts as canonical JSON")
    p.add_argument("what", choices=("hypergraph", "certs", "maximal-sets"))
    p.add_argument("path")
    add_members(p)
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, json.JSONDecodeError) as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
