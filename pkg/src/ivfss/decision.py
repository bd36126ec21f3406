"""Leave-one-out energy ranking and rank-order comparison."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from scipy.stats import kendalltau

from .core import Ivfss, remove_object
from .energy import EnergyReport, energy
from .errors import LabelMismatch, UniverseTooSmall

TIE_TOL = 1e-9

# A ranking item is a single label or a tie group of labels sharing one place.
RankItem = Union[str, Sequence[str]]


@dataclass(frozen=True)
class LeaveOneOutEnergies:
    """Energy of the set left over after deleting each object, in input order."""

    entries: tuple[tuple[str, float], ...]
    reports: tuple[EnergyReport, ...] = ()

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.entries)

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(e for _, e in self.entries)

    def __getitem__(self, label: str) -> float:
        for lab, e in self.entries:
            if lab == label:
                return e
        raise KeyError(label)


@dataclass(frozen=True)
class DecisionResult:
    energies: LeaveOneOutEnergies
    ranking: tuple[str, ...]
    chosen: str
    tie_groups: tuple[tuple[str, ...], ...]
    tie_tol: float = TIE_TOL

    def grouped_ranking(self) -> tuple[tuple[str, ...], ...]:
        """The ranking with each tie group collapsed into one place."""
        grouped = []
        tied = {label: group for group in self.tie_groups for label in group}
        seen = set()
        for label in self.ranking:
            if label in seen:
                continue
            group = tied.get(label, (label,))
            seen.update(group)
            grouped.append(group)
        return tuple(grouped)


def leave_one_out_energies(s: Ivfss) -> LeaveOneOutEnergies:
    if s.n < 2:
        raise UniverseTooSmall("leave-one-out needs at least two objects")
    reports = tuple(energy(remove_object(s, label)) for label in s.objects)
    entries = tuple((label, r.e_star) for label, r in zip(s.objects, reports))
    return LeaveOneOutEnergies(entries, reports)


def rank_objects(e: LeaveOneOutEnergies, tie_tol: float = TIE_TOL) -> DecisionResult:
    """Order objects by ascending leave-one-out energy.

    The object whose removal leaves the least energy contributes most to the
    whole set and is preferred. Consecutive energies (after sorting) that lie
    within ``tie_tol`` of each other are chained into one tie group, listed by
    original object index.
    """
    if tie_tol < 0:
        raise ValueError("tie_tol must be non-negative")
    order = sorted(range(len(e.entries)), key=lambda i: (e.entries[i][1], i))

    clusters: list[list[int]] = []
    for i in order:
        if clusters and e.entries[i][1] - e.entries[clusters[-1][-1]][1] <= tie_tol:
            clusters[-1].append(i)
        else:
            clusters.append([i])

    ranking = []
    groups = []
    for cluster in clusters:
        labels = [e.entries[i][0] for i in sorted(cluster)]
        ranking.extend(labels)
        if len(labels) > 1:
            groups.append(tuple(labels))
    return DecisionResult(
        energies=e,
        ranking=tuple(ranking),
        chosen=ranking[0],
        tie_groups=tuple(groups),
        tie_tol=tie_tol,
    )


def decide(s: Ivfss, tie_tol: float = TIE_TOL) -> DecisionResult:
    """Run the full leave-one-out energy decision procedure on ``s``."""
    return rank_objects(leave_one_out_energies(s), tie_tol)


def positions(ranking: Iterable[RankItem]) -> dict[str, int]:
    """Map each label to its place in ``ranking``; tie-group members share a place."""
    places: dict[str, int] = {}
    for place, item in enumerate(ranking):
        group = (item,) if isinstance(item, str) else tuple(item)
        if not group:
            raise LabelMismatch(f"empty tie group at place {place + 1}")
        for label in group:
            if label in places:
                raise LabelMismatch(f"label {label!r} appears more than once")
            places[label] = place
    return places


def kendall_tau(a: Iterable[RankItem], b: Iterable[RankItem]) -> float:
    """Kendall tau-b between two rankings of the same labels.

    Either ranking may contain tie groups (nested sequences of labels). The
    result is ``nan`` when one ranking ties everything.
    """
    pa = positions(a)
    pb = positions(b)
    if set(pa) != set(pb):
        missing = sorted(set(pa) ^ set(pb))
        raise LabelMismatch(f"rankings cover different labels: {missing}")
    if len(pa) < 2:
        raise LabelMismatch("rankings need at least two labels")
    labels = list(pa)
    tau, _ = kendalltau([pa[x] for x in labels], [pb[x] for x in labels], variant="b")
    return float(tau)
