"""Sweep task generation and execution.

A task is a picklable (kind, ((key, value), ...)) pair describing one pure
check, so grids can run sequentially or across worker processes with
identical results; outputs are canonically sorted either way.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, Iterator

from . import congruences, identities, integrality
from .congruences import CheckResult, skipped_result
from .exact_arith import primes_in_range, rat
from .report import sort_checks
from .sequences import RV_FAMILIES, family_by_label

Task = tuple[str, tuple[tuple[str, object], ...]]

DEFAULT_BB1_X = ("0", "1", "2", "-1/2", "-1/3", "1/3", "2/5")
SUPPORTED_X = ("-1/2", "-1/3", "-1/4", "-1/6")

IDENTITY_DEFAULT_MAX = {
    "cc1": 8,
    "cc4": 12,
    "liu26": 60,
    "telescope": 12,
    "bb2": 8,
    "bb4-direct": 25,
    "bb4-recurrence": 40,
}

# n never exceeds the verified window of the recurrence certificate.
BB4_N_MAX = 25


def _task(kind: str, **kwargs: object) -> Task:
    return (kind, tuple(sorted(kwargs.items())))


_DISPATCH = {
    "rv": lambda family, p: congruences.verify_rv(family_by_label(family), p),
    "lemma2p": lambda family, p: congruences.verify_lemma_2p(family_by_label(family), p),
    "sun-p4": lambda family, p: congruences.verify_sun_p4(family_by_label(family), p),
    "guo-bb1": lambda x, p: congruences.verify_guo_bb1(rat(x), p),
    "guo-bb1-skip": lambda x, p: skipped_result(
        "guo-bb1", {"x": x, "p": p}, f"x = {x} is not a p-adic integer for p = {p}"
    ),
    "cc5": lambda x, p: congruences.verify_cc5(rat(x), p),
    "cc7": lambda s, p: congruences.verify_cc7(s, p),
    "cc8": lambda x, p: congruences.verify_cc8_fact(rat(x), p),
    "cc9": lambda x, p: congruences.verify_cc9(rat(x), p),
    "cc10": lambda x, p: congruences.verify_cc10(rat(x), p),
    "cc1": lambda j, k: identities.check_cc1(j, k),
    "cc4": lambda k, s: identities.check_cc4(k, s),
    "liu26": lambda s: identities.check_liu26(s),
    "telescope": lambda n: identities.check_telescope(n),
    "bb2": lambda n: identities.check_bb2(n),
    "bb4-direct": lambda m, n: identities.check_bb4_direct(m, n),
    "bb4-recurrence": lambda side, m, n: identities.check_bb4_recurrence(side, m, n),
    "bb4-initial": lambda m, n: identities.check_bb4_initial(m, n),
    "integer-valued": lambda n, m, eps: integrality.verify_integer_valued(
        integrality.IntegralityParams(n, m, eps)
    ),
    "schmidt-divisibility": lambda n, m, eps: integrality.verify_schmidt_divisibility(
        n, m, eps
    ),
}


def execute_task(task: Task) -> CheckResult:
    kind, kv = task
    return _DISPATCH[kind](**dict(kv))


def run_tasks(tasks: Iterable[Task], jobs: int = 1) -> list[CheckResult]:
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        results = [execute_task(t) for t in tasks]
    else:
        chunk = max(1, len(tasks) // (4 * jobs))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(execute_task, tasks, chunksize=chunk))
    return sort_checks(results)


def tasks_rv(pmax: int) -> Iterator[Task]:
    for fam in RV_FAMILIES:
        for p in primes_in_range(5, pmax):
            yield _task("rv", family=fam.label, p=p)


def tasks_lemma2p(pmax: int) -> Iterator[Task]:
    for fam in RV_FAMILIES:
        for p in primes_in_range(5, pmax):
            yield _task("lemma2p", family=fam.label, p=p)


def tasks_sun_p4(pmax: int) -> Iterator[Task]:
    for fam in RV_FAMILIES:
        for p in primes_in_range(5, pmax):
            yield _task("sun-p4", family=fam.label, p=p)


def tasks_guo_bb1(pmax: int, xs: tuple[str, ...] = DEFAULT_BB1_X) -> Iterator[Task]:
    for x in xs:
        den = Fraction(rat(x)).denominator
        for p in primes_in_range(3, pmax):
            if den % p == 0:
                yield _task("guo-bb1-skip", x=x, p=p)
            else:
                yield _task("guo-bb1", x=x, p=p)


def tasks_cc(which: str, pmax: int) -> Iterator[Task]:
    kinds = ("cc5", "cc7", "cc8", "cc9", "cc10") if which == "all" else (which,)
    for kind in kinds:
        for p in primes_in_range(5, pmax):
            if kind == "cc7":
                for s in range(p, 2 * p - 1):
                    yield _task("cc7", s=s, p=p)
            else:
                for x in SUPPORTED_X:
                    yield _task(kind, x=x, p=p)


def _tasks_one_identity(name: str, bound: int | None) -> Iterator[Task]:
    top = IDENTITY_DEFAULT_MAX[name] if bound is None else bound
    if name == "cc1":
        for j in range(top + 1):
            for k in range(top + 1):
                yield _task("cc1", j=j, k=k)
    elif name == "cc4":
        for k in range(top + 1):
            for s in range(2 * k + 1):
                yield _task("cc4", k=k, s=s)
    elif name == "liu26":
        for s in range(top + 1):
            yield _task("liu26", s=s)
    elif name == "telescope":
        for n in range(1, top + 1):
            yield _task("telescope", n=n)
    elif name == "bb2":
        for n in range(top + 1):
            yield _task("bb2", n=n)
    elif name == "bb4-direct":
        for m in range(top + 1):
            for n in range(top + 1):
                yield _task("bb4-direct", m=m, n=n)
    elif name == "bb4-recurrence":
        for m in range(4):
            for n in range(BB4_N_MAX + 1):
                yield _task("bb4-initial", m=m, n=n)
        for side in identities.SIDES:
            for m in range(top + 1):
                for n in range(BB4_N_MAX + 1):
                    yield _task("bb4-recurrence", side=side, m=m, n=n)
    else:
        raise ValueError(f"unknown identity {name!r}")


def tasks_identity(name: str, bound: int | None) -> Iterator[Task]:
    names = tuple(IDENTITY_DEFAULT_MAX) if name == "all" else (name,)
    for one in names:
        yield from _tasks_one_identity(one, bound)


def _eps_list(eps: str) -> tuple[int, ...]:
    table = {"+1": (1,), "-1": (-1,), "both": (1, -1)}
    if eps not in table:
        raise ValueError(f"eps must be +1, -1 or both, got {eps!r}")
    return table[eps]


def tasks_integrality(nmax: int, mmax: int, eps: str) -> Iterator[Task]:
    for n in range(1, nmax + 1):
        for m in range(1, mmax + 1):
            for e in _eps_list(eps):
                yield _task("integer-valued", n=n, m=m, eps=e)


def tasks_schmidt(nmax: int, mmax: int, eps: str) -> Iterator[Task]:
    for n in range(1, nmax + 1):
        for m in range(1, mmax + 1):
            for e in _eps_list(eps):
                yield _task("schmidt-divisibility", n=n, m=m, eps=e)
