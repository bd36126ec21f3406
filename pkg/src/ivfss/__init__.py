"""Energy of interval-valued fuzzy soft sets and a leave-one-out decision rule."""

__version__ = "0.1.0"

from .core import Bound, Interval, Ivfss, ValueMatrix, build_ivfss, make_interval, max_matrix, min_matrix, remove_object
from .decision import DecisionResult, LeaveOneOutEnergies, decide, kendall_tau, leave_one_out_energies, rank_objects
from .energy import (
    EnergyReport,
    check_bounds,
    energy,
    energy_upper_bound,
    optimistic_energy,
    pessimistic_energy,
)
from .fixtures import run_fixture
from .io import Dataset, load, parse_csv, parse_json, serialize_csv, serialize_json
from .report import render_comparison, render_report
from .spectral import SingularSpectrum, gram, nuclear_sum, singular_values, symmetric_eigenvalues
