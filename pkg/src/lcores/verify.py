"""Exhaustive verification suites behind ``lcores verify``."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable

from .affine import (
    apply_s_core,
    apply_s_vector,
    cores_up_to,
    coxeter_length,
    lattice_vectors,
    phi_on_lattice,
    pi,
    pi_inv,
)
from .corebij import count_cores, enumerate_cores, expected_count, phi, phi_inv
from .lmcorr import verify_commute
from .partition import Partition, format_partition


@dataclass
class Report:
    suite: str
    cases: int = 0
    failure: str | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.failure is None

    def __str__(self) -> str:
        if not self.ok:
            return f"FAIL {self.suite}: {self.failure}"
        extra = f", {self.note}" if self.note else ""
        return f"OK ({self.cases} cases{extra})"


def _run(suite: str, cases: Iterable, check: Callable[..., str | None], note: str = "") -> Report:
    report = Report(suite, note=note)
    for case in cases:
        report.cases += 1
        problem = check(case)
        if problem is not None:
            report.failure = problem
            break
    return report


def counting(ell_max: int = 6, k_max: int = 10) -> Report:
    def check(case):
        ell, k = case
        got, want = count_cores(ell, k), expected_count(ell, k)
        if got != want:
            return f"ell={ell} k={k}: counted {got}, binomial gives {want}"

    cases = [(ell, k) for ell in range(2, ell_max + 1) for k in range(k_max + 1)]
    return _run("counting", cases, check)


def roundtrip(ells: Iterable[int] = (3, 4, 5), max_size: int = 40, coord_box: int = 3) -> Report:
    def check_core(case):
        ell, lam = case
        back = phi_inv(ell, lam.first, phi(ell, lam))
        if back != lam:
            return f"ell={ell} {format_partition(lam)}: phi_inv(phi) gave {format_partition(back)}"
        v = pi_inv(lam, ell)
        if pi(v) != lam:
            return f"ell={ell} {format_partition(lam)}: pi(pi_inv) gave {format_partition(pi(v))}"

    def check_vector(v):
        back = pi_inv(pi(v), len(v))
        if back != v:
            return f"{v}: pi_inv(pi) gave {back}"

    cores = [(ell, lam) for ell in ells for lam in cores_up_to(ell, max_size)]
    report = _run("roundtrip", cores, check_core)
    if report.ok:
        vectors = [v for ell in ells for v in lattice_vectors(ell, coord_box)]
        more = _run("roundtrip", vectors, check_vector)
        report.cases += more.cases
        report.failure = more.failure
    return report


def equivariance(ells: Iterable[int] = (3, 4, 5), coord_box: int = 3) -> Report:
    def check(case):
        i, v = case
        left = pi(apply_s_vector(i, v))
        right = apply_s_core(i, pi(v), len(v))
        if left != right:
            return (f"s{i} at {v}: pi(s.v)={format_partition(left)} "
                    f"but s.pi(v)={format_partition(right)}")

    cases = [(i, v) for ell in ells for v in lattice_vectors(ell, coord_box) for i in range(ell)]
    return _run("equivariance", cases, check)


def theorem_main(ells: Iterable[int] = (3, 4, 5), coord_box: int = 3) -> Report:
    def check(v):
        formula = phi_on_lattice(v)
        direct = pi_inv(phi(len(v), pi(v)), len(v) - 1)
        if formula != direct:
            return f"{v}: lattice formula {formula}, conjugated bijection {direct}"

    cases = [v for ell in ells for v in lattice_vectors(ell, coord_box)]
    return _run("theorem-main", cases, check)


def commute(ells: Iterable[int] = (3, 4, 5), k_max: int = 8) -> Report:
    def check(case):
        ell, lam = case
        if not verify_commute(ell, lam):
            return f"ell={ell} {format_partition(lam)}: diagram does not commute"

    cases = [(ell, lam) for ell in ells for k in range(k_max + 1) for lam in enumerate_cores(ell, k)]
    return _run("commute", cases, check)


def bfs_distances(ell: int, max_boxes: int) -> dict[Partition, int]:
    """Distance from the empty core when single generator moves are the edges."""
    start = Partition()
    dist = {start: 0}
    queue = deque([start])
    while queue:
        lam = queue.popleft()
        for i in range(ell):
            nxt = apply_s_core(i, lam, ell)
            if nxt.size <= max_boxes and nxt not in dist:
                dist[nxt] = dist[lam] + 1
                queue.append(nxt)
    return dist


def lengths(ells: Iterable[int] = (3, 4), max_boxes: int = 14) -> Report:
    def check(case):
        ell, lam, d = case
        got = coxeter_length(lam, ell)
        if got != d:
            return f"ell={ell} {format_partition(lam)}: length formula {got}, BFS distance {d}"

    cases = [(ell, lam, d) for ell in ells for lam, d in bfs_distances(ell, max_boxes).items()]
    return _run("lengths", cases, check, note="BFS oracle")


SUITES = {
    "counting": counting,
    "roundtrip": roundtrip,
    "equivariance": equivariance,
    "theorem-main": theorem_main,
    "commute": commute,
    "lengths": lengths,
}
