"""
Kommandoraden för lösningsgradslabbet

Underkommandon:
    bounds        Gradgränserna som CSV per (n, grader), valfritt kostnadsuttryck med --omega
    gb            Reducerad Gröbnerbas med gradstatistik
    solve-degree  sd_mac och sd_mut
    hilbert       Hilbertfunktion, serie och regularitetsgrader
    analyze       Klassificering och verifieringar för ett system
    survey        Slumpundersökning
    oracle        Koszul-kontroll på små homogena system
    tables        Gränstabellerna som CSV
    example1      Referensexemplet över F_73

Exempel:
    python cli.py bounds --n 9 --profile uniform --m-range 10..18
    python cli.py gb --in system.txt --order hdrl --strategy sugar
    python cli.py survey --n 4 --m 6 --deg 2 --trials 50 --seed 1

Tekniska detaljer:
- Resultat skrivs till stdout, loggar till stderr
- Exitkod 0 = klart/PASS, 1 = verifiering FAIL, 2 = felaktig användning
"""

import argparse
import json
import re
import sys

import pandas as pd

from errors import AlgebraError
from field_poly import format_monomial
from groebner import buchberger
from harness import (
    PROFILES,
    SurveyConfig,
    bounds_row,
    profile_degrees,
    reference_example,
    reproduce_tables,
    run_oracle_pool,
    survey_results,
    table_frame,
)
from hilbert import lm_ideal, regularity_degrees
from macaulay import sd_mac, sd_mut
from regularity import analyze_system, classify, verify_homogenized_hilbert, verify_lm_correspondence
from series_bounds import complexity_estimate
from settings import load_settings
from system_io import read_system
from views.custom_logging import configure_logging, log_action

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def parse_degrees(text):
    """
    Tolkar en gradlista som "3x9,2" (nio 3:or och en 2:a) eller "2,2,3".

    Raises:
        AlgebraError: vid ogiltig syntax
    """
    degrees = []
    for part in text.split(","):
        part = part.strip()
        match = re.fullmatch(r"(\d+)(?:x(\d+))?", part)
        if not match:
            raise AlgebraError(f"ogiltig grad '{part}'")
        degrees.extend([int(match.group(1))] * int(match.group(2) or 1))
    return degrees


def parse_range(text):
    """"a..b" eller ett ensamt tal."""
    match = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not match:
        raise AlgebraError(f"ogiltigt intervall '{text}', förväntade a..b")
    low = int(match.group(1))
    high = int(match.group(2) or low)
    if high < low:
        raise AlgebraError(f"tomt intervall '{text}'")
    return low, high


def _dump(data):
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


def _emit(text, out=None):
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
        log_action("export", f"Skrev resultat till {out}", "cli")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _write_xlsx(path, tables_df=None, survey=None):
    # Streamlit-vyn importeras först här så att kommandon utan --xlsx klarar sig utan den
    from views.export_data import create_excel_file
    with open(path, "wb") as handle:
        handle.write(create_excel_file(tables_df, survey))
    log_action("export", f"Skrev Excel-fil till {path}", "export")


def _bound_systems(args):
    if args.profile:
        if not args.m_range:
            raise AlgebraError("--profile kräver --m-range")
        low, high = parse_range(args.m_range)
        return [(args.profile, profile_degrees(args.profile, args.n, m, args.deg)) for m in range(low, high + 1)]
    if not args.degrees:
        raise AlgebraError("ange --degrees eller --profile")
    base = parse_degrees(args.degrees)
    if not args.m_range:
        return [(args.degrees, base)]
    low, high = parse_range(args.m_range)
    if low < len(base):
        raise AlgebraError(f"m-intervallet börjar under antalet givna grader ({len(base)})")
    return [(args.degrees, base + [base[-1]] * (m - len(base))) for m in range(low, high + 1)]


def cmd_bounds(args):
    rows = []
    for label, degrees in _bound_systems(args):
        row = bounds_row(label, args.n, degrees)
        D = row["d"]
        if args.s0 is not None:
            row["d_plus_s0"] = D + args.s0 if D is not None else None
        if args.omega is not None:
            estimate = complexity_estimate(args.n, len(degrees), D, args.omega) if D is not None else None
            row["complexity_full"] = estimate.full if estimate else None
            row["complexity_without_zero_reductions"] = estimate.without_zero_reductions if estimate else None
            row["complexity_per_degree"] = estimate.per_degree if estimate else None
        rows.append(row)
    # object-kolumner: kostnaderna ryms inte i int64 och None blir tom cell
    frame = pd.DataFrame(rows, dtype=object)
    _emit(frame.to_csv(index=False, lineterminator="\n"), args.out)
    return EXIT_OK


def _load(args):
    system = read_system(args.input)
    if getattr(args, "homogenize", False):
        system = system.homogenize()
    return system


def cmd_gb(args):
    system = read_system(args.input)
    if args.homogenize or args.order == "hdrl":
        system = system.homogenize()
    trace = buchberger(system, args.strategy, args.tie_break)
    names = system.ring.variable_names
    lines = [str(g) for g in trace.reduced_basis]
    lines.append("")
    lines.append("LM: " + ", ".join(format_monomial(g.lm, names) or "1" for g in trace.reduced_basis))
    telemetry = dict(trace.telemetry(), schema_version=SCHEMA_VERSION,
                     config={"input": args.input, "order": args.order, "strategy": args.strategy,
                             "homogenize": bool(args.homogenize or args.order == "hdrl"),
                             "tie_break": args.tie_break})
    lines.append(_dump(telemetry))
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_solve_degree(args):
    system = _load(args)
    trace = buchberger(system)
    result = {"max_gb_degree": trace.max_gb_degree, "schema_version": SCHEMA_VERSION,
              "config": {"input": args.input, "method": args.method, "dmax": args.dmax,
                         "homogenize": bool(args.homogenize)}}
    dims = {}
    if args.method in ("mac", "all"):
        mac = sd_mac(system, args.dmax, trace.reduced_basis)
        result["sd_mac"] = mac.degree
        dims["mac"] = mac.as_dict()["matrix_dims_per_degree"]
    if args.method in ("mut", "all"):
        mut = sd_mut(system, args.dmax, trace.reduced_basis)
        result["sd_mut"] = mut.degree
        dims["mut"] = mut.as_dict()["matrix_dims_per_degree"]
    result["matrix_dims_per_degree"] = dims
    _emit(_dump(result), args.out)
    return EXIT_OK


def cmd_hilbert(args):
    system = _load(args)
    trace = buchberger(system)
    summary = regularity_degrees(lm_ideal(trace.reduced_basis), cap=args.cap)
    data = summary.as_dict()
    data["schema_version"] = SCHEMA_VERSION
    data["config"] = {"input": args.input, "homogenize": bool(args.homogenize), "cap": args.cap}
    _emit(_dump(data), args.out)
    return EXIT_OK


def cmd_analyze(args):
    system = read_system(args.input)
    analysis = analyze_system(system)
    report = classify(system, analysis)
    verdicts = [verify_homogenized_hilbert(system, analysis), verify_lm_correspondence(system, analysis)]
    data = {
        "schema_version": SCHEMA_VERSION,
        "config": {"input": args.input},
        "report": report.as_dict(),
        "verdicts": [v.as_dict() for v in verdicts],
    }
    _emit(_dump(data), args.out)
    return EXIT_FAIL if any(v.status == "fail" for v in verdicts) else EXIT_OK


def cmd_survey(args, settings):
    if args.m_range:
        m_range = parse_range(args.m_range)
    elif args.m is not None:
        m_range = (args.m, args.m)
    else:
        raise AlgebraError("ange --m eller --m-range")
    cfg = SurveyConfig(
        n=args.n,
        m_range=m_range,
        degree=args.deg,
        profile=args.profile,
        q=args.q if args.q is not None else settings.survey_modulus,
        trials=args.trials if args.trials is not None else settings.survey_trials,
        seed=args.seed,
        workers=args.workers if args.workers is not None else settings.survey_workers,
        timing=args.timing,
    )
    results = survey_results(cfg)
    _emit(_dump(results), args.out)
    if args.xlsx:
        _write_xlsx(args.xlsx, table_frame(), results)
    totals = results["totals"]
    ignored = {"telemetry_violations"} if args.telemetry_warn_only else set()
    failed = any(totals[key] for key in totals if key.endswith("_violations") and key not in ignored)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_oracle(args):
    results = run_oracle_pool(args.trials, args.seed, args.q, args.cap)
    _emit(_dump(results), args.out)
    return EXIT_FAIL if results["disagreements"] else EXIT_OK


def cmd_tables(args):
    _emit(reproduce_tables(), args.out)
    if args.xlsx:
        _write_xlsx(args.xlsx, table_frame())
    return EXIT_OK


def cmd_example1(args):
    verdict = reference_example()
    data = dict(verdict.as_dict(), schema_version=SCHEMA_VERSION, config={})
    _emit(_dump(data), args.out)
    return EXIT_OK if verdict.passed else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(prog="cli.py", description="Lösningsgrader för polynomsystem över F_q")
    parser.add_argument("--log-path", help="Lägg till loggposter som JSON-rader i denna fil")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(p):
        p.add_argument("--out", help="Skriv resultatet till fil i stället för stdout")
        return p

    p = with_output(sub.add_parser("bounds", help="gradgränser"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degrees", help='t.ex. "3x9,2"')
    p.add_argument("--profile", choices=PROFILES, help="gradprofil i stället för --degrees")
    p.add_argument("--deg", type=int, default=2, help="grad för profilen uniform")
    p.add_argument("--m-range", help="a..b, sista graden upprepas")
    p.add_argument("--omega", help="exponent för matrismultiplikation, 2 ≤ ω ≤ 3")
    p.add_argument("--s0", type=int, help="mättnadsexponent för D + S_0")

    p = with_output(sub.add_parser("gb", help="reducerad Gröbnerbas"))
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--order", choices=("drl", "hdrl"), default="drl")
    p.add_argument("--strategy", choices=("normal", "sugar"), default="normal")
    p.add_argument("--tie-break", choices=("oldest", "newest"), default="oldest")
    p.add_argument("--homogenize", action="store_true")

    p = with_output(sub.add_parser("solve-degree", help="sd_mac och sd_mut"))
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--method", choices=("mac", "mut", "all"), default="all")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--homogenize", action="store_true")

    p = with_output(sub.add_parser("hilbert", help="Hilbertdata"))
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--homogenize", action="store_true")
    p.add_argument("--cap", type=int)

    p = with_output(sub.add_parser("analyze", help="klassificering och verifieringar"))
    p.add_argument("--in", dest="input", required=True)

    p = with_output(sub.add_parser("survey", help="slumpundersökning"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--m-range")
    p.add_argument("--deg", type=int, default=2)
    p.add_argument("--profile", choices=PROFILES, default="uniform")
    p.add_argument("--q", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int)
    p.add_argument("--timing", action="store_true")
    p.add_argument("--telemetry-warn-only", action="store_true",
                   help="rapportera gradtelemetrin utan att fälla körningen")
    p.add_argument("--xlsx")

    p = with_output(sub.add_parser("oracle", help="Koszul-kontroll på små homogena system"))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--q", type=int, default=31)
    p.add_argument("--cap", type=int)

    p = with_output(sub.add_parser("tables", help="gränstabellerna som CSV"))
    p.add_argument("--xlsx")

    with_output(sub.add_parser("example1", help="referensexemplet över F_73"))
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    settings = load_settings(log_path=args.log_path)
    configure_logging(settings)
    handlers = {
        "bounds": cmd_bounds,
        "gb": cmd_gb,
        "solve-degree": cmd_solve_degree,
        "hilbert": cmd_hilbert,
        "analyze": cmd_analyze,
        "oracle": cmd_oracle,
        "tables": cmd_tables,
        "example1": cmd_example1,
    }
    try:
        if args.command == "survey":
            return cmd_survey(args, settings)
        return handlers[args.command](args)
    except (AlgebraError, OSError) as e:
        log_action("error", f"{args.command}: {e}", "cli")
        print(f"fel: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
