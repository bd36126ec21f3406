"""Pessimistic, optimistic and combined energies, and their upper bound."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Ivfss, max_matrix, min_matrix
from .spectral import SingularSpectrum, nuclear_sum, singular_values

BOUND_TOL = 1e-9
DISPLAY_DIGITS = 7


@dataclass(frozen=True)
class EnergyReport:
    e_min: float
    e_max: float
    e_star: float
    spectrum_min: SingularSpectrum
    spectrum_max: SingularSpectrum
    n: int
    m: int

    @property
    def bound(self) -> float:
        return energy_upper_bound(self.n, self.m)

    @property
    def bounds_hold(self) -> bool:
        return check_bounds(self)


def pessimistic_energy(s: Ivfss) -> float:
    return nuclear_sum(singular_values(min_matrix(s)))


def optimistic_energy(s: Ivfss) -> float:
    return nuclear_sum(singular_values(max_matrix(s)))


def energy(s: Ivfss) -> EnergyReport:
    """Both spectra of ``s`` and the three energies derived from them."""
    lower = singular_values(min_matrix(s))
    upper = singular_values(max_matrix(s))
    e_min = nuclear_sum(lower)
    e_max = nuclear_sum(upper)
    return EnergyReport(
        e_min=e_min,
        e_max=e_max,
        e_star=(e_min + e_max) / 2.0,
        spectrum_min=lower,
        spectrum_max=upper,
        n=s.n,
        m=s.m,
    )


def energy_upper_bound(n: int, m: int) -> float:
    """``n * sqrt(m)``, the ceiling on every energy of an ``n x m`` set."""
    if n < 1 or m < 1:
        raise ValueError(f"shape must be at least 1 x 1, got {n} x {m}")
    return n * math.sqrt(m)


def check_bounds(r: EnergyReport) -> bool:
    limit = energy_upper_bound(r.n, r.m) + BOUND_TOL
    return r.e_min <= limit and r.e_max <= limit and r.e_star <= limit


def display(x: float, digits: int = DISPLAY_DIGITS) -> str:
    """Round to ``digits`` significant figures for human-readable output."""
    text = f"{x:.{digits}g}"
    return "0" if text == "-0" else text
