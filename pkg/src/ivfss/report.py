"""Text and JSON rendering of energy, decision and comparison reports.

Text output rounds to 7 significant digits. JSON output carries every real
as a decimal string with 17 significant digits, enough to recover the exact
double. Both are byte-deterministic.
"""

from __future__ import annotations

import json
import math
from typing import Mapping, Sequence

from .decision import DecisionResult, RankItem
from .energy import EnergyReport, display


def _exact(x: float) -> str:
    return f"{x:.17g}"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def format_ranking(ranking: Sequence[RankItem]) -> str:
    """``u_4 > u_3 > ...`` with tie-group members joined by ``=``."""
    return " > ".join(item if isinstance(item, str) else " = ".join(item) for item in ranking)


def _energy_text(r: EnergyReport) -> list[str]:
    lines = [f"objects: {r.n}  parameters: {r.m}", "singular values:"]
    rows = [("k", "sigma(min)", "sigma(max)")]
    for k, (a, b) in enumerate(zip(r.spectrum_min, r.spectrum_max), 1):
        rows.append((str(k), display(a), display(b)))
    widths = [max(len(row[c]) for row in rows) for c in range(3)]
    for row in rows:
        lines.append("  " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    lines += [
        f"E^min = {display(r.e_min)}",
        f"E^max = {display(r.e_max)}",
        f"E* = {display(r.e_star)}",
        f"bound n*sqrt(m) = {display(r.bound)}",
        f"bounds hold: {_yes(r.bounds_hold)}",
        f"E^min <= E^max: {_yes(r.e_min <= r.e_max)} (observed)",
    ]
    return lines


def _energy_json(r: EnergyReport) -> dict:
    return {
        "n": r.n,
        "m": r.m,
        "spectrum_min": [_exact(x) for x in r.spectrum_min],
        "spectrum_max": [_exact(x) for x in r.spectrum_max],
        "e_min": _exact(r.e_min),
        "e_max": _exact(r.e_max),
        "e_star": _exact(r.e_star),
        "bound": _exact(r.bound),
        "bounds_hold": r.bounds_hold,
        "e_min_le_e_max": r.e_min <= r.e_max,
    }


def _decision_text(d: DecisionResult) -> list[str]:
    width = max(len(label) for label in d.energies.labels)
    lines = ["leave-one-out energies E*:"]
    for label, e in d.energies.entries:
        lines.append(f"  {label.ljust(width)}  {display(e)}")
    lines.append(f"ranking: {format_ranking(d.grouped_ranking())}")
    lines.append(f"chosen: {d.chosen}")
    if d.tie_groups:
        lines.append("tie groups: " + "; ".join("{" + ", ".join(g) + "}" for g in d.tie_groups))
    else:
        lines.append("tie groups: none")
    return lines


def _decision_json(d: DecisionResult) -> dict:
    return {
        "energies": [{"label": label, "e_star": _exact(e)} for label, e in d.energies.entries],
        "ranking": list(d.ranking),
        "chosen": d.chosen,
        "tie_groups": [list(g) for g in d.tie_groups],
        "tie_tol": _exact(d.tie_tol),
    }


def _emit(doc: dict | None, lines: list[str] | None, name: str | None) -> bytes:
    if doc is not None:
        if name is not None:
            doc = {"name": name, **doc}
        return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if name:
        lines = [f"dataset: {name}"] + lines
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_report(r: EnergyReport | DecisionResult, format: str = "text", name: str | None = None) -> bytes:
    """Render an energy or decision report as ``text`` or ``json`` bytes."""
    if format not in ("text", "json"):
        raise ValueError(f"unknown format {format!r}")
    if isinstance(r, EnergyReport):
        if format == "json":
            return _emit(_energy_json(r), None, name)
        return _emit(None, _energy_text(r), name)
    if isinstance(r, DecisionResult):
        if format == "json":
            return _emit(_decision_json(r), None, name)
        return _emit(None, _decision_text(r), name)
    raise TypeError(f"cannot render {type(r).__name__}")


def render_comparison(
    d: DecisionResult,
    baselines: Mapping[str, Sequence[RankItem]],
    taus: Mapping[str, float],
    format: str = "text",
    name: str | None = None,
) -> bytes:
    if format == "json":
        doc = {
            "energy_ranking": [list(g) if len(g) > 1 else g[0] for g in d.grouped_ranking()],
            "baselines": [
                {
                    "method": method,
                    "ranking": [item if isinstance(item, str) else list(item) for item in baselines[method]],
                    "kendall_tau_b": None if math.isnan(taus[method]) else _exact(taus[method]),
                }
                for method in baselines
            ],
        }
        return _emit(doc, None, name)
    lines = [f"energy: {format_ranking(d.grouped_ranking())}"]
    if not baselines:
        lines.append("no baseline rankings in dataset")
    width = max((len(m) for m in baselines), default=0)
    for method, ranking in baselines.items():
        lines.append(f"{method.ljust(width)}: {format_ranking(ranking)}")
    for method in baselines:
        tau = taus[method]
        lines.append(f"kendall tau-b vs {method.ljust(width)} = {'undefined' if math.isnan(tau) else display(tau)}")
    return _emit(None, lines, name)
