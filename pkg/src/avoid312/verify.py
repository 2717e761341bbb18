"""Exhaustive verification suites behind ``avoid312 verify``.

Each suite yields :class:`CheckResult` records, one per (check, n).  Nothing
here is sampled: every object of the given size is visited.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterator
from dataclasses import asdict, dataclass

from .bijections import (
    delta_hat, krattenthaler, krattenthaler_inverse, mu, mu_inverse, nu, nu_inverse,
)
from .distributions import (
    JOINT_TRIPLES, brute_rows, closed_row, distribution_dp, gf_series, joint_distribution,
    monotone_equidistribution_check,
)
from .distributions.brute import window_counts
from .distributions.formulas import motzkin
from .paths import Stat, count_statistic, deutsch, enumerate_dyck, enumerate_motzkin
from .patterns import PATTERN_STATISTIC, TAUS
from .perm import enumerate_avoiders

__all__ = ["CheckResult", "SUITES", "run_suite"]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    check: str
    n: int
    passed: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


def _first_failure(items, pred: Callable) -> str:
    for x in items:
        if not pred(x):
            return f"counterexample: {x}"
    return ""


def _check(suite: str, name: str, n: int, items, pred: Callable) -> CheckResult:
    detail = _first_failure(items, pred)
    return CheckResult(suite, name, n, not detail, detail)


def suite_involution(bound: int) -> Iterator[CheckResult]:
    for n in range(bound + 1):
        paths = list(enumerate_dyck(n))
        yield _check("involution", "delta(delta(P)) == P", n, paths, lambda p: deutsch(deutsch(p)) == p)
        yield _check("involution", "|delta(P)| == |P|", n, paths, lambda p: len(deutsch(p)) == len(p))


def suite_bijections(bound: int) -> Iterator[CheckResult]:
    for n in range(bound + 1):
        avoiders = list(enumerate_avoiders(n))
        paths = list(enumerate_dyck(n))
        yield _check("bijections", "K-inv(K(s)) == s", n, avoiders,
                     lambda s: krattenthaler_inverse(krattenthaler(s)) == s)
        yield _check("bijections", "K(K-inv(P)) == P", n, paths,
                     lambda p: krattenthaler(krattenthaler_inverse(p)) == p)
        yield _check("bijections", "delta-hat is an involution", n, avoiders,
                     lambda s: delta_hat(delta_hat(s)) == s)
        m = motzkin(n)
        motz = list(enumerate_motzkin(n))
        for name, fwd, inv, pat in (("nu", nu, nu_inverse, "321"), ("mu", mu, mu_inverse, "123")):
            dom = [s for s in avoiders if window_counts(s)[pat] == 0]
            images = {fwd(s) for s in dom}
            ok = len(dom) == len(images) == m and images == set(motz)
            yield CheckResult("bijections", f"{name} is a bijection onto Motzkin paths", n, ok,
                              "" if ok else f"domain {len(dom)}, image {len(images)}, M_n {m}")
            yield _check("bijections", f"{name}-inv({name}(s)) == s", n, dom, lambda s: inv(fwd(s)) == s)
            yield _check("bijections", f"{name}({name}-inv(M)) == M", n, motz, lambda p: fwd(inv(p)) == p)


def suite_transport(bound: int) -> Iterator[CheckResult]:
    for n in range(bound + 1):
        paths = list(enumerate_dyck(n))
        pairs = [(p, deutsch(p)) for p in paths]
        for src, dst in ((Stat.DU_PLUS_DU, Stat.DDD), (Stat.DU2_PLUS_DD, Stat.DUDD), (Stat.DDU, Stat.DDU)):
            yield _check("transport", f"{src.value}(P) == {dst.value}(delta(P))", n, pairs,
                         lambda pq, a=src, b=dst: count_statistic(pq[0], a) == count_statistic(pq[1], b))
        yield _check("transport", "P starts U^tDU => delta(P) ends DD", n, pairs,
                     lambda pq: not _starts_run_then(pq[0], 1, "DU") or pq[1].endswith("DD"))
        yield _check("transport", "P starts U^tDD, t>1 => delta(P) ends UD", n, pairs,
                     lambda pq: not _starts_run_then(pq[0], 2, "DD") or pq[1].endswith("UD"))
        avoiders = list(enumerate_avoiders(n))
        for tau in TAUS:
            stat = PATTERN_STATISTIC[tau]
            yield _check("transport", f"occ_{tau}(s) == {stat.value}(K(s))", n, avoiders,
                         lambda s, t=tau, st=stat: window_counts(s)[t] == count_statistic(krattenthaler(s), st))
        for a, b in (("123", "321"), ("132", "231"), ("213", "213")):
            yield _check("transport", f"occ_{a}(s) == occ_{b}(delta-hat(s))", n, avoiders,
                         lambda s, a=a, b=b: window_counts(s)[a] == window_counts(delta_hat(s))[b])


def _starts_run_then(path: str, min_run: int, tail: str) -> bool:
    t = len(path) - len(path.lstrip("U"))
    return t >= min_run and path.startswith(tail, t)


def suite_triangulate(bound: int) -> Iterator[CheckResult]:
    series = {tau: gf_series(tau, bound) for tau in TAUS}
    for n in range(bound + 1):
        brute = brute_rows(TAUS, n, bound)
        for tau in TAUS:
            rows = {
                "closed": closed_row(tau, n),
                "dp": distribution_dp(PATTERN_STATISTIC[tau], n),
                "brute": brute[tau],
                "gf": series[tau].row(n),
            }
            ok = len({tuple(r) for r in rows.values()}) == 1
            yield CheckResult("triangulate", f"closed == dp == brute == gf for {tau}", n, ok,
                              "" if ok else repr(rows))


def suite_joint(bound: int) -> Iterator[CheckResult]:
    for n in range(bound + 1):
        hists = joint_distribution(n, bound)
        for left, right in JOINT_TRIPLES:
            ok = hists[left] == hists[right]
            detail = "" if ok else repr(Counter(hists[left]) - Counter(hists[right]))
            yield CheckResult("joint", f"({','.join(left)}) ~ ({','.join(right)})", n, ok, detail)


def suite_monotone(bound: int) -> Iterator[CheckResult]:
    for k in (2, 3, 4, 5):
        for n in range(bound + 1):
            ok = monotone_equidistribution_check(k, n, bound)
            yield CheckResult("monotone", f"12..{k} ~ {k}..21", n, ok)


SUITES: dict[str, Callable[[int], Iterator[CheckResult]]] = {
    "involution": suite_involution,
    "bijections": suite_bijections,
    "transport": suite_transport,
    "triangulate": suite_triangulate,
    "joint": suite_joint,
    "monotone": suite_monotone,
}


def run_suite(name: str, bound: int) -> Iterator[CheckResult]:
    if name == "all":
        for suite in SUITES.values():
            yield from suite(bound)
        return
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    yield from SUITES[name](bound)
