"""Assemble the full analysis of one complex into a JSON-ready dict."""

from __future__ import annotations

import json
from fractions import Fraction

from .complex import SimplicialComplex
from .enumeration import (BettiZero, BoundReport, HVectorBundle, check_bstar_bounds,
                          check_module_macaulay, soderberg_check)
from .homology import is_buchsbaum, is_cohen_macaulay, is_two_cm, reduced_betti
from .linalg import Field
from .reduction import (graded_reduction, level_quotient_of, predicted_socle, random_lsop,
                        socle_profile)

SCHEMA = 1


def _plain(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    return int(x)


def _keyed(d: dict) -> dict:
    return {str(k): v for k, v in d.items()}


def bounds_json(rep: BoundReport) -> list[dict]:
    out = []
    for r in rep.rows:
        row = {"check": r.label, "j": r.j, "lhs": _plain(r.lhs), "relation": r.relation,
               "rhs": _plain(r.rhs), "ok": r.ok}
        row.update({k: _plain(v) for k, v in r.detail.items()})
        out.append(row)
    return out


def bounds_section(bundle: HVectorBundle) -> dict:
    hp, hpp = bundle.h_prime, bundle.h_double_prime
    out = {
        "h_prime_macaulay": bounds_json(check_module_macaulay(hp, bundle.n)),
        "h_double_prime_reversed_macaulay": bounds_json(check_module_macaulay(hpp[::-1], bundle.n)),
        "soderberg": bounds_json(soderberg_check(hpp, bundle.n, bundle.d)),
    }
    try:
        out["bstar"] = bounds_json(check_bstar_bounds(bundle))
    except BettiZero:
        out["bstar"] = bounds_json(check_bstar_bounds(bundle, part_b=False))
        out["bstar_part_b"] = "skipped: beta_{d-1} = 0"
    out["ok"] = all(row["ok"] for key, rows in out.items() if isinstance(rows, list) for row in rows)
    return out


def seed_run(cx: SimplicialComplex, fld: Field, seed: int) -> dict:
    forms = random_lsop(cx, fld, seed)
    R = graded_reduction(cx, forms)
    prof = socle_profile(R)
    _, lq = level_quotient_of(R, cx.d)
    return {
        "seed": seed,
        "lsop": forms.tolist(),
        "reduction_dims": list(R.hilbert_function()),
        "socle": _keyed({j: prof[j] for j in range(1, cx.d + 1)}),
        "level_quotient": {
            "dims": list(lq.dims),
            "socle": _keyed(lq.socle),
            "type": lq.type,
            "is_level": lq.is_level,
        },
    }


def analyze(cx: SimplicialComplex, name: str, fld: Field, seeds: list[int]) -> dict:
    p = fld.char
    betti = reduced_betti(cx, p)
    bundle = HVectorBundle.of(cx, p)
    buchs = is_buchsbaum(cx, p)
    predicted = _keyed(predicted_socle(cx, p))
    runs = [seed_run(cx, fld, s) for s in seeds]
    agree = all(r["socle"] == runs[0]["socle"] and r["reduction_dims"] == runs[0]["reduction_dims"]
                and r["level_quotient"] == runs[0]["level_quotient"] for r in runs)
    bstar = buchs and all(r["socle"] == predicted for r in runs)
    slack = [{j: r["socle"][j] - predicted[j] for j in predicted} for r in runs]
    return {
        "schema": SCHEMA,
        "complex": {"id": name, "n": cx.n, "d": cx.d, "dim": cx.dim, "facets": [list(f) for f in cx.facets]},
        "field": {"char": p, "order": fld.order},
        "seeds": seeds,
        "f": list(bundle.f),
        "h": list(bundle.h),
        "h_prime": list(bundle.h_prime),
        "h_double_prime": list(bundle.h_double_prime),
        "betti": {"start": -1, "values": list(betti.betti)},
        "classification": {
            "pure": cx.is_pure(),
            "cohen_macaulay": is_cohen_macaulay(cx, p),
            "buchsbaum": buchs,
            "two_cm": is_two_cm(cx, p),
            "buchsbaum_star": bstar,
        },
        "socle": {"predicted": predicted, "runs": runs, "slack": slack, "seeds_agree": agree},
        "bounds": bounds_section(bundle),
    }


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2)


def format_text(report: dict) -> str:
    c = report["complex"]
    lines = [
        f"complex {c['id']}: n={c['n']} dim={c['dim']} facets={len(c['facets'])}",
        f"field: order {report['field']['order']} (char {report['field']['char']}), seeds {report['seeds']}",
        f"f   = {tuple(report['f'])}",
        f"h   = {tuple(report['h'])}",
        f"h'  = {tuple(report['h_prime'])}",
        f"h'' = {tuple(report['h_double_prime'])}",
        "betti (from beta_-1) = " + str(tuple(report["betti"]["values"])),
        "classification: " + ", ".join(f"{k}={v}" for k, v in report["classification"].items()),
    ]
    soc = report["socle"]
    lines.append(f"predicted socle binom(d,j)*beta_(j-1): {soc['predicted']}")
    for run, slack in zip(soc["runs"], soc["slack"]):
        lq = run["level_quotient"]
        lines.append(f"  seed {run['seed']}: K[D]/l dims {tuple(run['reduction_dims'])}, socle {run['socle']}, "
                     f"slack {slack}")
        lines.append(f"           level quotient dims {tuple(lq['dims'])}, socle {lq['socle']}, "
                     f"type {lq['type']}, level={lq['is_level']}")
    if not soc["seeds_agree"]:
        lines.append("  WARNING: seeds disagree")
    b = report["bounds"]
    lines.append(f"bounds: {'all satisfied' if b['ok'] else 'VIOLATED'}")
    for key in ("bstar", "soderberg", "h_prime_macaulay", "h_double_prime_reversed_macaulay"):
        bad = [r for r in b[key] if not r["ok"]]
        lines.append(f"  {key}: {len(b[key]) - len(bad)}/{len(b[key])} ok"
                     + ("" if not bad else f"  failing: {[(r['check'], r['j']) for r in bad]}"))
    return "\n".join(lines)
