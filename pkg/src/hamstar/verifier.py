"""Checks of the theorem, its lemmas and the classical baselines on single
graphs, plus sweeps that apply one check to a whole stream of graphs."""
from __future__ import annotations

import itertools
import logging
import multiprocessing
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union

from .batch import screen
from .errors import GraphArgumentError, RegimeError
from .extractor import check_dominating_cycle, extract_star
from .graph import Graph, is_connected, meets_ore_threshold, sigma_k
from .graph6 import parse_graph6, to_graph6
from .hamsearch import hamiltonian_path, has_hamiltonian_cycle, longest_cycle, longest_path
from .stars import find_induced_star
from .verdict import COUNTEREXAMPLE, HAM_PATH, HYPOTHESIS_NOT_MET, STAR, Verdict

log = logging.getLogger(__name__)

DIRAC, ORE, MOMEGE = "dirac", "ore", "momege"
CLASSICAL = (DIRAC, ORE, MOMEGE)

MODES = ("main", "equality", "lemma1", "lemma2", "classical", "agreement")

PASSED = "passed"
REGIME_SKIPPED = "regime_skipped"
HISTOGRAM_KEYS = (HYPOTHESIS_NOT_MET, HAM_PATH, STAR, PASSED, REGIME_SKIPPED, COUNTEREXAMPLE)


def _sigma2(g: Graph) -> Optional[int]:
    return sigma_k(g, 2) if g.n >= 2 else None


def check_main_theorem(g: Graph, t: int, strict: bool = True) -> Verdict:
    """Decide which way the theorem is satisfied on ``g``, without the extractor.

    In non-strict mode the threshold may be met with equality, and the
    conclusion depends on n: a non-traceable graph must have n >= 2t-4, and at
    n = 2t-4 it is an equality-family join rather than a star host.  The
    latter case raises RegimeError since it is the equality check's business.
    """
    if t < 5:
        raise GraphArgumentError(f"t must be at least 5, got {t}")
    if not is_connected(g):
        raise GraphArgumentError("graph is not connected")
    if not meets_ore_threshold(g, t, strict):
        return Verdict(HYPOTHESIS_NOT_MET)
    path = hamiltonian_path(g)
    if path is not None:
        return Verdict(HAM_PATH, path=path)
    if not strict and g.n < 2 * t - 4:
        return Verdict(COUNTEREXAMPLE, graph6=to_graph6(g), failed_step="non-traceable with n < 2t-4")
    star = find_induced_star(g, t)
    if star is not None:
        return Verdict(STAR, star=star)
    if not strict and g.n == 2 * t - 4:
        if join_decomposition(g, t) is not None:
            raise RegimeError("equality case: graph is a join with t-1 independent vertices")
        return Verdict(COUNTEREXAMPLE, graph6=to_graph6(g), failed_step="equality characterization")
    return Verdict(COUNTEREXAMPLE, graph6=to_graph6(g), failed_step="neither Hamiltonian path nor star")


def join_decomposition(g: Graph, t: int) -> Optional[tuple[int, ...]]:
    """An independent set S of size t-1 whose vertices are each adjacent to
    every vertex outside S, or None."""
    full = g.vertex_mask
    for x in range(g.n):
        if g.degree(x) != g.n - (t - 1):
            continue
        rest = g.adj[x]
        s_mask = full & ~rest
        members = [y for y in range(g.n) if s_mask >> y & 1]
        if all(g.adj[y] == rest for y in members):
            return tuple(members)
    return None


def check_equality_characterization(g: Graph, t: int) -> bool:
    if not is_connected(g) or g.n != 2 * t - 4:
        raise RegimeError("equality case needs a connected graph on 2t-4 vertices")
    if not meets_ore_threshold(g, t, strict=False):
        raise RegimeError("sigma_2 is below the threshold")
    if hamiltonian_path(g) is not None:
        raise RegimeError("graph has a Hamiltonian path")
    return join_decomposition(g, t) is not None


def check_lemma1(g: Graph, k: int) -> bool:
    """k * sigma_{k+1} >= (k+1) * sigma_k."""
    if not 1 <= k <= g.n - 1:
        raise GraphArgumentError(f"k must satisfy 1 <= k <= n-1={g.n - 1}, got {k}")
    low, high = sigma_k(g, k), sigma_k(g, k + 1)
    if low is None or high is None:
        raise RegimeError(f"sigma_{k} or sigma_{k + 1} is undefined")
    return k * high >= (k + 1) * low


def check_lemma2(g: Graph) -> bool:
    """Longest cycle is one short of a longest path and dominates the rest."""
    if not is_connected(g) or g.n < 3:
        raise RegimeError("needs a connected graph on at least 3 vertices")
    s3 = sigma_k(g, 3)
    if s3 is None or s3 < g.n:
        raise RegimeError("needs sigma_3 >= n")
    p, _ = longest_path(g)
    if p > g.n - 1:
        raise RegimeError("graph has a Hamiltonian path")
    c, cycle = longest_cycle(g)
    return cycle is not None and c == p - 1 and check_dominating_cycle(g, cycle)


def check_classical(g: Graph, which: str) -> bool:
    if which in (DIRAC, ORE):
        if g.n < 3:
            raise RegimeError("needs n >= 3")
        if which == DIRAC:
            if 2 * min(g.degrees()) < g.n:
                raise RegimeError("minimum degree below n/2")
        else:
            s2 = _sigma2(g)
            if s2 is not None and s2 < g.n:
                raise RegimeError("sigma_2 below n")
        return has_hamiltonian_cycle(g)
    if which == MOMEGE:
        if not is_connected(g):
            raise RegimeError("needs a connected graph")
        s2 = _sigma2(g)
        if s2 is not None and 3 * s2 < 2 * g.n:
            raise RegimeError("sigma_2 below 2n/3")
        return hamiltonian_path(g) is not None or find_induced_star(g, 4) is not None
    raise GraphArgumentError(f"unknown theorem {which!r}")


# -- sweeps -------------------------------------------------------------------

@dataclass
class SweepReport:
    t: int
    mode: str
    strict: bool
    n_range: Optional[tuple[int, int]] = None
    examined: int = 0
    histogram: Counter = field(default_factory=Counter)
    counterexamples: list = field(default_factory=list)
    seconds: Optional[float] = None

    def record(self, n: int, label: str, failure: Optional[dict]):
        self.examined += 1
        self.histogram[label] += 1
        lo, hi = self.n_range or (n, n)
        self.n_range = (min(lo, n), max(hi, n))
        if failure is not None:
            self.counterexamples.append(failure)

    def to_json(self, timing: bool = False) -> dict:
        return {
            "schema": 1,
            "t": self.t,
            "mode": self.mode,
            "strict": self.strict,
            "n_range": list(self.n_range) if self.n_range else None,
            "examined": self.examined,
            "histogram": {k: self.histogram.get(k, 0) for k in HISTOGRAM_KEYS},
            "counterexamples": self.counterexamples,
            "seconds": round(self.seconds, 3) if timing and self.seconds is not None else None,
        }


def _failure(g: Graph, step: str) -> dict:
    return {"graph6": to_graph6(g), "n": g.n, "failed_step": step}


def classify(g: Graph, t: int, mode: str, strict: bool = True) -> tuple[str, Optional[dict]]:
    """Apply one sweep check to ``g``: (histogram label, counterexample record or None)."""
    if mode == "main":
        try:
            verdict = check_main_theorem(g, t, strict)
        except (RegimeError, GraphArgumentError):
            return REGIME_SKIPPED, None
        if verdict.kind == COUNTEREXAMPLE:
            return COUNTEREXAMPLE, _failure(g, verdict.failed_step)
        return verdict.kind, None

    if mode == "agreement":
        try:
            oracle = check_main_theorem(g, t, strict)
        except (RegimeError, GraphArgumentError):
            return REGIME_SKIPPED, None
        if oracle.kind == HYPOTHESIS_NOT_MET:
            return HYPOTHESIS_NOT_MET, None
        extracted = extract_star(g, t, strict)
        if extracted.kind == COUNTEREXAMPLE:
            return COUNTEREXAMPLE, _failure(g, f"extractor: {extracted.failed_step}")
        if extracted.kind != oracle.kind:
            return COUNTEREXAMPLE, _failure(g, f"extractor gave {extracted.kind}, oracle {oracle.kind}")
        return oracle.kind, None

    if mode == "equality":
        if not is_connected(g):
            return REGIME_SKIPPED, None
        if not meets_ore_threshold(g, t, strict=False):
            return HYPOTHESIS_NOT_MET, None
        if hamiltonian_path(g) is not None:
            return HAM_PATH, None
        if g.n < 2 * t - 4:
            return COUNTEREXAMPLE, _failure(g, "non-traceable with n < 2t-4")
        if g.n > 2 * t - 4:
            return REGIME_SKIPPED, None
        if check_equality_characterization(g, t):
            return PASSED, None
        return COUNTEREXAMPLE, _failure(g, "equality characterization")

    if mode == "lemma1":
        checked = False
        for k in range(1, g.n):
            try:
                ok = check_lemma1(g, k)
            except RegimeError:
                continue
            checked = True
            if not ok:
                return COUNTEREXAMPLE, _failure(g, f"lemma1 k={k}")
        return (PASSED if checked else REGIME_SKIPPED), None

    if mode == "lemma2":
        try:
            ok = check_lemma2(g)
        except RegimeError:
            return REGIME_SKIPPED, None
        return (PASSED, None) if ok else (COUNTEREXAMPLE, _failure(g, "lemma2"))

    if mode == "classical":
        checked = False
        for which in CLASSICAL:
            try:
                ok = check_classical(g, which)
            except RegimeError:
                continue
            checked = True
            if not ok:
                return COUNTEREXAMPLE, _failure(g, which)
        return (PASSED if checked else REGIME_SKIPPED), None

    raise GraphArgumentError(f"unknown mode {mode!r}")


Source = Iterable[Union[Graph, str, bytes]]

# modes whose first two steps are "connected?" and "above the threshold?"
SCREENED = {"main": None, "agreement": None, "equality": False}


def _worker(args):
    text, t, mode, strict = args
    g = parse_graph6(text)
    return g.n, classify(g, t, mode, strict)


def _labelled(source: Source, t: int, mode: str, strict: bool) -> Iterator[tuple[Graph | None, int, str | None]]:
    """(graph, n, label): label is set when screening already decided the graph."""
    source = iter(source)
    first = next(source, None)
    if first is None:
        return
    source = itertools.chain([first], source)
    if isinstance(first, Graph):
        for g in source:
            yield g, g.n, None
        return
    if mode in SCREENED:
        screen_strict = strict if SCREENED[mode] is None else SCREENED[mode]
        for n, status, g in screen(source, t, screen_strict):
            if status == "disconnected":
                yield None, n, REGIME_SKIPPED
            elif status == "below":
                yield None, n, HYPOTHESIS_NOT_MET
            else:
                yield g, n, None
        return
    for number, text in enumerate(source, start=1):
        if text.strip():
            g = parse_graph6(text.strip(), line=number)
            yield g, g.n, None


def sweep(source: Source, t: int, mode: str = "main", strict: bool = True,
          jobs: int = 1) -> SweepReport:
    """Run ``classify`` over every graph in ``source`` (Graph objects or graph6
    lines).  Results are merged in input order whatever ``jobs`` is; a bad
    graph6 line aborts with its line number."""
    if mode not in MODES:
        raise GraphArgumentError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    report = SweepReport(t=t, mode=mode, strict=strict)
    start = time.perf_counter()
    items = _labelled(source, t, mode, strict)

    if jobs <= 1:
        for g, n, label in items:
            failure = None
            if label is None:
                label, failure = classify(g, t, mode, strict)
            report.record(n, label, failure)
    else:
        with multiprocessing.Pool(jobs) as pool:
            while True:
                chunk = list(itertools.islice(items, 20_000))
                if not chunk:
                    break
                todo = [(to_graph6(g), t, mode, strict) for g, _, label in chunk if label is None]
                results = iter(pool.map(_worker, todo, chunksize=64))
                for g, n, label in chunk:
                    failure = None
                    if label is None:
                        _, (label, failure) = next(results)
                    report.record(n, label, failure)

    report.seconds = time.perf_counter() - start
    for failure in report.counterexamples:
        log.error("counterexample: %s", failure)
    return report
