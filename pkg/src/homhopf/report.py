"""Axiom reports: per-identity pass/fail with counterexample witnesses.

Every axiom is swept over all basis tuples in lexicographic order; the first
tuple where the two sides differ is recorded together with both evaluated
sides, so a failure is directly actionable.  Sweeps of distinct axioms are
independent and may run on a thread pool (``set_default_jobs``); results are
merged in axiom order, so reports are identical at any parallelism level.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Callable, Optional, Tuple

_DEFAULT_JOBS = 1


def set_default_jobs(n):
    """Set the worker count used by sweep() when jobs is not given."""
    global _DEFAULT_JOBS
    _DEFAULT_JOBS = max(1, int(n))


def get_default_jobs():
    return _DEFAULT_JOBS


@dataclass(frozen=True)
class Identity:
    """One checkable identity: evaluate(idx) returns the two sides."""

    axiom: str
    dims: Tuple[int, ...]
    evaluate: Callable
    derived: bool = False


@dataclass(frozen=True)
class AxiomResult:
    axiom: str
    passed: bool
    witness: Optional[Tuple[int, ...]] = None
    lhs: object = None
    rhs: object = None
    derived: bool = False

    def render(self):
        tag = "derived " if self.derived else ""
        if self.passed:
            return "PASS %s%s" % (tag, self.axiom)
        return "FAIL %s%s at %s: lhs=%s rhs=%s" % (
            tag, self.axiom, self.witness,
            _render_side(self.lhs), _render_side(self.rhs))


def _render_side(side):
    if side is None:
        return "?"
    if hasattr(side, "entries"):
        return "[%s]" % ", ".join(str(v) for v in side.entries)
    return str(side)


@dataclass(frozen=True)
class AxiomReport:
    results: Tuple[AxiomResult, ...] = field(default_factory=tuple)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def result(self, axiom):
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    def axioms(self):
        return [r.axiom for r in self.results]

    def merge(self, other):
        return AxiomReport(self.results + other.results)

    def render(self):
        return "\n".join(r.render() for r in self.results)

    def __iter__(self):
        return iter(self.results)


def run_identity(ident):
    """Sweep one identity over all basis tuples; stop at the first failure."""
    for idx in iproduct(*[range(d) for d in ident.dims]):
        lhs, rhs = ident.evaluate(*idx)
        if lhs != rhs:
            return AxiomResult(ident.axiom, False, idx, lhs, rhs, ident.derived)
    return AxiomResult(ident.axiom, True, derived=ident.derived)


def sweep(identities, jobs=None):
    """Check a list of identities, in order, returning an AxiomReport."""
    identities = list(identities)
    n = _DEFAULT_JOBS if jobs is None else max(1, int(jobs))
    if n <= 1 or len(identities) <= 1:
        results = [run_identity(i) for i in identities]
    else:
        with ThreadPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(run_identity, identities))
    return AxiomReport(tuple(results))
