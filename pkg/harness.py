"""
Tabeller, referensexempel och slumpundersökningar

1. reproduce_tables
   - Gränserna Lazard, gradsummegränsen, D_new, D och 2D−1 för n ∈ {9, 10},
     n+1 ≤ m ≤ 2n, med profilerna "uniform" (alla grader 2) och
     "cubic-head" (3 upprepad n gånger, därefter 2:or)
   - Returnerar CSV via pandas

2. reference_example
   - Det fasta systemet över F_73 i tre variabler, alla tre reducerade baser
     jämförs term för term med de kända baserna
   - Avvikelser rapporteras som diff i verdict-posten

3. run_survey
   - Slumpsystem med konstant term noll, ett frö per försök ur SeedSequence
   - Varje försök klassificeras och verifieras, fel isoleras per försök
   - Resultatet är JSON med schema_version och den ekade konfigurationen

4. run_oracle_pool
   - Små homogena system där d-regularitet jämförs med Koszul-kontrollen

Tekniska detaljer:
- Försök körs i en ProcessPoolExecutor när workers > 1, resultaten sorteras
  efter försöksindex före aggregeringen
- Utan timing är utdata byte-identisk mellan körningar
"""

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np
import pandas as pd

from errors import AlgebraError
from field_poly import dehomogenize, random_homogeneous_system, random_system
from groebner import interreduce, is_groebner, saturation_exponent
from hilbert import INFINITY, hilbert_function, lm_ideal
from macaulay import sd_mac, sd_mut
from regularity import (
    VerdictRecord,
    analyze_system,
    classify,
    koszul_oracle_disagreements,
    verify_homogenized_hilbert,
    verify_lm_correspondence,
)
from series_bounds import d_new, d_reg_formula, degree_sum_bound, lazard_bound
from system_io import parse_polynomial, parse_system
from views.custom_logging import log_action

SCHEMA_VERSION = 1
PROFILES = ("uniform", "cubic-head")
ORACLE_MAX_DEGREE = 6
TABLE_COLUMNS = ["profile", "n", "m", "lazard", "degree_sum_bound", "d_new", "d", "two_d_minus_1"]


def profile_degrees(profile, n, m, degree=2):
    """Gradlistan för en profil: alla lika, eller 3 n gånger följt av 2:or."""
    if profile == "uniform":
        return [degree] * m
    if profile == "cubic-head":
        return [3] * min(n, m) + [2] * max(0, m - n)
    raise AlgebraError(f"okänd gradprofil '{profile}', välj bland {PROFILES}")


@dataclass(frozen=True)
class TableRange:
    profile: str
    n: int
    m_range: tuple

    def degrees(self, m):
        return profile_degrees(self.profile, self.n, m)


def default_table_ranges():
    return [
        TableRange(profile, n, (n + 1, 2 * n))
        for profile in PROFILES
        for n in (9, 10)
    ]


def bounds_row(profile, n, degrees):
    """
    En tabellrad för (n, grader).

    Gränser vars förutsättning inte håller blir None: gradsummegränsen kräver
    m > n, D och D_new kräver m ≥ n.
    """
    m = len(degrees)
    D = d_reg_formula(n, degrees) if m >= n else None
    return {
        "profile": profile,
        "n": n,
        "m": m,
        "lazard": lazard_bound(n, degrees),
        "degree_sum_bound": degree_sum_bound(n, degrees)[0] if m > n else None,
        "d_new": d_new(n, degrees) if m >= n else None,
        "d": D,
        "two_d_minus_1": 2 * D - 1 if D is not None else None,
    }


def table_frame(ranges=None):
    """Alla tabellrader som en DataFrame med kolumnerna i TABLE_COLUMNS."""
    rows = [
        bounds_row(table.profile, table.n, table.degrees(m))
        for table in ranges or default_table_ranges()
        for m in range(table.m_range[0], table.m_range[1] + 1)
    ]
    return pd.DataFrame(rows, columns=TABLE_COLUMNS)


def reproduce_tables(ranges=None):
    """Tabellerna som CSV (radslut \\n, inget index)."""
    frame = table_frame(ranges)
    log_action("compute", f"Beräknade gränstabeller: {len(frame)} rader", "series")
    return frame.to_csv(index=False, lineterminator="\n")


# Referensexemplet över F_73

REFERENCE_SYSTEM = """\
ring q=73 vars=x1,x2,x3
x1^2 + 3*x1*x2 + x2^2 - 2*x1*x3 - 2*x2*x3 + x3^2 - x1 - 2*x2 + x3
4*x1^2 + 3*x1*x2 + 4*x1*x3 + x3^2 - 2*x1 - x2 + 2*x3
3*x1^2 + 9*x2^2 - 6*x2*x3 + x3^2 - x1 + x2 - x3
x1^2 - 6*x1*x2 + 9*x2^2 + 2*x1*x3 - 6*x2*x3 + 2*x3^2 - 2*x1 + x2
"""

EXPECTED_BASIS = ("x1", "x2", "x3")

EXPECTED_TOP_BASIS = (
    "x2*x3^2",
    "x3^3",
    "x1^2 + 68*x2*x3 + 55*x3^2",
    "x1*x2 + 27*x2*x3 + 29*x3^2",
    "x2^2 + x2*x3 + 71*x3^2",
    "x1*x3 + 3*x2*x3 + 33*x3^2",
)

EXPECTED_HOM_BASIS = (
    "x1*y^3",
    "x2*y^3",
    "x3*y^3",
    "x2*x3^2 + 60*x1*y^2 + 22*x2*y^2 + 39*x3*y^2",
    "x3^3 + 72*x1*y^2 + 14*x2*y^2 + 56*x3*y^2",
    "x2*x3*y + 16*x1*y^2 + 55*x2*y^2 + 38*x3*y^2",
    "x3^2*y + 72*x1*y^2 + 66*x2*y^2 + 70*x3*y^2",
    "x1^2 + 68*x2*x3 + 55*x3^2 + 72*x1*y + 40*x2*y + 14*x3*y",
    "x1*x2 + 27*x2*x3 + 29*x3^2 + 20*x1*y + 37*x2*y + 12*x3*y",
    "x2^2 + x2*x3 + 71*x3^2 + 57*x1*y + 3*x2*y + 52*x3*y",
    "x1*x3 + 3*x2*x3 + 33*x3^2 + 22*x1*y + 5*x2*y + 14*x3*y",
)


def reference_system():
    return parse_system(REFERENCE_SYSTEM)


def _basis_diff(label, computed, expected_texts, ring):
    expected = {parse_polynomial(text, ring) for text in expected_texts}
    computed = set(computed)
    details = [f"{label}: saknas {f}" for f in expected - computed]
    details += [f"{label}: oväntad {f}" for f in computed - expected]
    return not details, details


def reference_example(system=None):
    """
    Kör hela kedjan på referenssystemet och jämför mot de kända värdena.

    Args:
        system (PolySystem, optional): Ersätter referenssystemet (t.ex. för
            att kontrollera att en ändrad koefficient upptäcks)

    Returns:
        VerdictRecord: "pass" eller "fail" med diff i details
    """
    F = system or reference_system()
    analysis = analyze_system(F)
    hom_ring = F.ring.homogenized_ring()
    checks = {}
    details = []

    for key, label, computed, expected, ring in (
        ("basis", "G", analysis.trace.reduced_basis, EXPECTED_BASIS, F.ring),
        ("top_basis", "G_top", analysis.top_trace.reduced_basis, EXPECTED_TOP_BASIS, F.ring),
        ("hom_basis", "G_hom", analysis.hom_trace.reduced_basis, EXPECTED_HOM_BASIS, hom_ring),
    ):
        checks[key], diff = _basis_diff(label, computed, expected, ring)
        details.extend(diff)

    top = analysis.top_summary
    checks["top_series"] = top.hs_numerator == (1, 3, 2) and top.d_reg == 3
    if not checks["top_series"]:
        details.append(f"HS_top-täljare {top.hs_numerator}, d_reg {top.d_reg}")

    J_hom = lm_ideal(analysis.hom_trace.reduced_basis)
    hf = [hilbert_function(J_hom, d) for d in range(6)]
    hom = analysis.hom_summary
    checks["hom_hilbert"] = (hf == [1, 4, 6, 4, 1, 1] and hom.gen_d_reg == 4
                             and hom.hilbert_poly_constant == 1)
    if not checks["hom_hilbert"]:
        details.append(f"HF_h(0..5) = {hf}, gen_d_reg {hom.gen_d_reg}, N {hom.hilbert_poly_constant}")

    for key, verdict in (
        ("homogenized_hilbert", verify_homogenized_hilbert(F, analysis)),
        ("lm_correspondence", verify_lm_correspondence(F, analysis)),
    ):
        checks[key] = verdict.passed
        if not verdict.passed:
            details.append(f"{key}: {verdict.status} {list(verdict.details)}")

    D = analysis.D
    checks["step_degrees"] = D is not INFINITY and analysis.trace.sd_step <= 2 * D - 1
    if not checks["step_degrees"]:
        details.append(f"stegrad {analysis.trace.sd_step} med D = {D}")

    status = "pass" if all(checks.values()) else "fail"
    log_action("verify" if status == "pass" else "violation",
               f"Referensexemplet: {status}", "regularity")
    return VerdictRecord("reference_example", status, checks, tuple(details))


# Undersökningar

@dataclass(frozen=True)
class SurveyConfig:
    n: int
    m_range: tuple
    degree: int = 2
    profile: str = "uniform"
    q: int = 31
    trials: int = 50
    seed: int = 0
    workers: int = 1
    timing: bool = False

    def as_dict(self):
        data = asdict(self)
        data["m_range"] = list(self.m_range)
        return data


def _check_trial(F, index, seed):
    """Klassificerar och verifierar ett försök, returnerar försöksposten."""
    analysis = analyze_system(F)
    report = classify(F, analysis)
    hom_trace = analysis.hom_trace
    D, D_prime = analysis.D, analysis.D_prime
    entry = {
        "index": index,
        "seed": seed,
        "status": "ok",
        "csr": report.is_crypto_semiregular,
        "semiregular": report.is_semiregular,
        "gcsr": report.is_generalized_csr,
        "wrl_hom": report.wrl_hom,
        "wrl_top": report.wrl_top,
        "D": report.as_dict()["D"],
        "D_prime": report.as_dict()["D_prime"],
        "max_gb_degree_hom": hom_trace.max_gb_degree,
        "sd_step": analysis.trace.sd_step,
        "sd_strict": analysis.trace.sd_strict,
        "pairs": len(analysis.trace.step_degrees),
        "reductions": len(analysis.trace.spoly_degrees),
        "zero_reductions": analysis.trace.zero_reductions,
        "pairs_hom": len(hom_trace.step_degrees),
        "reductions_hom": len(hom_trace.spoly_degrees),
        "zero_reductions_hom": hom_trace.zero_reductions,
    }
    if not report.is_crypto_semiregular:
        log_action("skip", f"Hoppade över försök {index}: F^top är inte kryptografiskt semireguljärt",
                   "survey")
        entry["status"] = "skipped"
        return entry

    n, m, degrees = F.n, F.m, F.degrees
    hilbert_check = verify_homogenized_hilbert(F, analysis)
    lm_verdict = verify_lm_correspondence(F, analysis)
    entry["hilbert_check"] = hilbert_check.status
    entry["lm_check"] = lm_verdict.status

    saturation = saturation_exponent(F, analysis.trace.reduced_basis, hom_trace.reduced_basis)
    entry["s0"] = saturation.s0
    lazard = lazard_bound(n, degrees, warn=False)
    entry["lazard"] = lazard
    bound = []
    if hom_trace.max_gb_degree > lazard:
        bound.append(f"max.GB.deg(F^h) > Lazards gräns {lazard}")
    if D_prime is not INFINITY:
        if D_prime < D - 1:
            bound.append("D′ < D − 1")
        if hom_trace.max_gb_degree > max(D, D_prime):
            bound.append("max.GB.deg(F^h) > max(D, D′)")
        if report.wrl_hom and hom_trace.max_gb_degree != max(D, D_prime):
            bound.append("max.GB.deg(F^h) ≠ max(D, D′) trots svag omvänd lexikografi")
    if report.is_semiregular and m > n and hom_trace.max_gb_degree > degree_sum_bound(n, degrees)[0]:
        bound.append("max.GB.deg(F^h) över gradsummegränsen")
    if hom_trace.max_gb_degree > D + saturation.s0:
        bound.append("max.GB.deg(F^h) > D + S_0")
    entry["bound_violations"] = bound

    chain = []
    mac = sd_mac(F, lazard, analysis.trace.reduced_basis)
    mut = sd_mut(F, lazard, analysis.trace.reduced_basis)
    entry["sd_mac"] = mac.degree
    entry["sd_mut"] = mut.degree
    gb_degree = analysis.trace.max_gb_degree
    if mac.exceeded or mut.exceeded:
        chain.append("sd_mac eller sd_mut överskred Lazards gräns")
    elif not gb_degree <= mut.degree <= mac.degree:
        chain.append(f"kedjan max.GB.deg ≤ sd_mut ≤ sd_mac bryts: {gb_degree}, {mut.degree}, {mac.degree}")

    # Homogena indata: alla tre lösningsgrader sammanfaller
    F_hom = F.homogenize()
    mac_hom = sd_mac(F_hom, lazard, hom_trace.reduced_basis)
    mut_hom = sd_mut(F_hom, lazard, hom_trace.reduced_basis)
    entry["sd_mac_hom"] = mac_hom.degree
    entry["sd_mut_hom"] = mut_hom.degree
    if mac_hom.exceeded or mut_hom.exceeded:
        chain.append("sd_mac(F^h) eller sd_mut(F^h) överskred Lazards gräns")
    elif not mac_hom.degree == mut_hom.degree == hom_trace.max_gb_degree:
        chain.append(f"sd_mac(F^h) = {mac_hom.degree}, sd_mut(F^h) = {mut_hom.degree} "
                     f"skiljer sig från max.GB.deg(F^h) = {hom_trace.max_gb_degree}")
    projective_zero = analysis.hom_summary.zero_dimensional and analysis.hom_summary.hilbert_poly_constant > 0
    if report.is_generalized_csr and projective_zero and m >= n:
        bound_new = d_new(n, degrees)
        if hom_trace.max_gb_degree > bound_new:
            chain.append(f"max.GB.deg(F^h) > D_new = {bound_new}")
        if mac.degree is not None and mac.degree > bound_new:
            chain.append(f"sd_mac > D_new = {bound_new}")
        entry["sd_mac_equals_hom_gb_degree"] = mac.degree == hom_trace.max_gb_degree
    entry["chain_violations"] = chain

    dehomogenized = [dehomogenize(g) for g in hom_trace.reduced_basis]
    dehom_ok = is_groebner(dehomogenized) and tuple(interreduce(dehomogenized)) == analysis.trace.reduced_basis
    entry["dehom_ok"] = dehom_ok

    telemetry = []
    if D >= max(degrees):
        if gb_degree > D:
            telemetry.append(f"max.GB.deg(F) = {gb_degree} > D")
        if analysis.trace.sd_step > 2 * D - 1:
            telemetry.append(f"stegrad {analysis.trace.sd_step} > 2D − 1")
        if analysis.trace.sd_strict > 2 * D - 2:
            telemetry.append(f"strikt grad {analysis.trace.sd_strict} > 2D − 2")
    entry["telemetry_violations"] = telemetry

    for name, items in (("bound", bound), ("chain", chain), ("telemetry", telemetry)):
        for item in items:
            log_action("violation", f"Brott mot {name} i försök {index}: {item}", "survey")
    if not dehom_ok:
        log_action("violation", f"Brott mot dehomogeniseringen i försök {index}", "survey")
    return entry


def _run_trial(task):
    index, seed, n, degrees, q, timing = task
    start = time.perf_counter()
    try:
        F = random_system(n, degrees, q, seed)
        entry = _check_trial(F, index, seed)
    except Exception as e:
        log_action("error", f"Försök {index} avbröts: {e}", "survey")
        entry = {"index": index, "seed": seed, "status": "error", "error": str(e)}
    entry["m"] = len(degrees)
    if timing:
        entry["seconds"] = round(time.perf_counter() - start, 6)
    return entry


def _rate(count, total):
    return round(count / total, 6) if total else None


def _aggregate(m, entries):
    done = [e for e in entries if e["status"] != "error"]
    checked = [e for e in entries if e["status"] == "ok"]
    gcsr = sum(1 for e in done if e["gcsr"])
    wrl = sum(1 for e in done if e["wrl_hom"])
    return {
        "m": m,
        "trials": len(entries),
        "completed": len(done),
        "skipped": sum(1 for e in entries if e["status"] == "skipped"),
        "errors": len(entries) - len(done),
        "csr_rate": _rate(sum(1 for e in done if e["csr"]), len(done)),
        "gcsr_rate": _rate(gcsr, len(done)),
        "wrl_rate": _rate(wrl, len(done)),
        "hilbert_violations": sum(1 for e in checked if e["hilbert_check"] == "fail"),
        "lm_violations": sum(1 for e in checked if e["lm_check"] == "fail"),
        "bound_violations": sum(len(e["bound_violations"]) for e in checked),
        "chain_violations": sum(len(e["chain_violations"]) for e in checked),
        "dehom_violations": sum(1 for e in checked if not e["dehom_ok"]),
        "telemetry_violations": sum(len(e["telemetry_violations"]) for e in checked),
        "joint": {
            "A_and_B": sum(1 for e in done if e["gcsr"] and e["wrl_hom"]),
            "A_not_B": sum(1 for e in done if e["gcsr"] and not e["wrl_hom"]),
            "B_not_A": sum(1 for e in done if not e["gcsr"] and e["wrl_hom"]),
            "neither": sum(1 for e in done if not e["gcsr"] and not e["wrl_hom"]),
        },
        "seeds": [e["seed"] for e in entries],
    }


TOTAL_KEYS = ("trials", "completed", "skipped", "errors", "hilbert_violations", "lm_violations",
              "bound_violations", "chain_violations", "dehom_violations", "telemetry_violations")


def survey_results(cfg):
    """
    Kör undersökningen och returnerar resultatet som dict.

    Funktionen:
    1. Drar ett frö per försök ur SeedSequence(cfg.seed)
    2. Kör försöken, parallellt om cfg.workers > 1
    3. Aggregerar per m och totalt
    """
    low, high = cfg.m_range
    ms = list(range(low, high + 1))
    states = np.random.SeedSequence(cfg.seed).generate_state(cfg.trials * len(ms)) if cfg.trials else []
    tasks = []
    for cell, m in enumerate(ms):
        degrees = tuple(profile_degrees(cfg.profile, cfg.n, m, cfg.degree))
        for t in range(cfg.trials):
            index = cell * cfg.trials + t
            tasks.append((index, int(states[index]), cfg.n, degrees, cfg.q, cfg.timing))

    if cfg.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            entries = list(pool.map(_run_trial, tasks))
    else:
        entries = [_run_trial(task) for task in tasks]
    entries.sort(key=lambda e: e["index"])

    cells = [_aggregate(m, [e for e in entries if e["m"] == m]) for m in ms]
    totals = {key: sum(cell[key] for cell in cells) for key in TOTAL_KEYS}
    log_action("compute", f"Undersökning klar: {len(entries)} försök, {totals['skipped']} överhoppade, "
                          f"{totals['errors']} fel", "survey")
    return {
        "schema_version": SCHEMA_VERSION,
        "config": cfg.as_dict(),
        "cells": cells,
        "totals": totals,
        "trials": entries,
    }


def run_survey(cfg):
    """Undersökningen som JSON-text (sorterade nycklar, deterministisk)."""
    return json.dumps(survey_results(cfg), sort_keys=True, indent=2, ensure_ascii=False)


def run_oracle_pool(trials, seed, q=31, cap=None):
    """
    Jämför d-regularitet med Koszul-kontrollen på små homogena system.

    n ≤ 3, m ≤ 4, grader 1..3 och d ≤ 6.

    Returns:
        dict: Antal kontrollerade, överhoppade och avvikande system
    """
    rng = np.random.default_rng(seed)
    checked = skipped = 0
    disagreements = []
    for trial in range(trials):
        n = int(rng.integers(1, 4))
        m = int(rng.integers(1, 5))
        degrees = [int(d) for d in rng.integers(1, 4, size=m)]
        F = random_homogeneous_system(n, degrees, q, int(rng.integers(0, 2 ** 32)))
        found = koszul_oracle_disagreements(F, ORACLE_MAX_DEGREE, cap)
        if found is None:
            skipped += 1
            continue
        checked += 1
        if found:
            disagreements.append({"trial": trial, "n": n, "degrees": degrees, "degrees_disagreeing": found})
    return {
        "schema_version": SCHEMA_VERSION,
        "config": {"trials": trials, "seed": seed, "q": q, "max_degree": ORACLE_MAX_DEGREE},
        "checked": checked,
        "skipped": skipped,
        "disagreements": disagreements,
    }
