"""Check suites shared by the ``verify`` command and the acceptance tests.

Each suite returns a list of :class:`Check` records. A check's verdict is
``AGREE`` when the two independent computations coincide, ``DISAGREE`` when
they do not, and ``NOT-APPLICABLE`` when it was skipped.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from .abelian import AbelianGroup
from .corpus import ALL_RINGS, LOCAL_RINGS, NEGATIVE_D_TABLE, NONLOCAL_RINGS, negative_m_table
from .e2group import DEFAULT_CAP, abelianization, beta_map, generate_e2
from .formulas import (
    EXCEPTIONAL_D,
    exceptional_symbol,
    fundamental_unit,
    is_minus_identity,
    minus_eleven_witness,
    od_ab,
    od_ab_as_stated,
    od_m_oracle,
    od_refined_ab,
    pslinv_ab,
    zinv_ab,
)
from .matrices import D, E, E12, E21, identity
from .msubgroup import local_formula, m_subgroup, n_subgroup
from .quadratic import QuadraticOrder, is_squarefree
from .rings import RingElement, is_local
from .ringspec import parse_ring_spec
from .steinberg import (
    am_value,
    dennis_stein,
    h,
    relation_residues,
    steinberg_symbol,
    theta_eval,
)

__all__ = [
    "AGREE",
    "DISAGREE",
    "NOT_APPLICABLE",
    "Check",
    "SUITES",
    "run_suite",
    "verdict",
    "ring_checks",
    "identity_checks",
    "quadratic_sweep",
    "tables_suite",
    "oracle_suite",
    "identities_suite",
]

AGREE, DISAGREE, NOT_APPLICABLE = "AGREE", "DISAGREE", "NOT-APPLICABLE"
EXHAUSTIVE_LIMIT = 10_000
RANDOM_SAMPLES = 1000


def verdict(ok: bool) -> str:
    return AGREE if ok else DISAGREE


@dataclass
class Check:
    name: str
    verdict: str
    detail: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict != DISAGREE

    def to_dict(self) -> dict:
        out = {"name": self.name, "verdict": self.verdict, "detail": self.detail}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


# -- tables ---------------------------------------------------------------
def _squarefree_upto(n: int) -> list[int]:
    return [m for m in range(1, n + 1) if m == 1 or is_squarefree(m)]


def zinv_table_check(limit: int = 100) -> Check:
    bad = []
    for m in _squarefree_upto(limit):
        expected = 12
        if m % 2 == 0:
            expected //= 4
        if m % 3 == 0:
            expected //= 3
        if zinv_ab(m) != AbelianGroup.cyclic(expected):
            bad.append(m)
    return Check(f"zinv table m<={limit}", verdict(not bad), f"mismatches at {bad}" if bad else "")


def pslinv_table_check(limit: int = 100) -> Check:
    bad = []
    for m in _squarefree_upto(limit):
        expected = 6
        if m % 2 == 0:
            expected //= 2
        if m % 3 == 0:
            expected //= 3
        if pslinv_ab(m) != AbelianGroup.cyclic(expected):
            bad.append(m)
    return Check(f"pslinv table m<={limit}", verdict(not bad), f"mismatches at {bad}" if bad else "")


def negative_table_checks() -> list[Check]:
    out = []
    for d, expected in NEGATIVE_D_TABLE.items():
        got = od_refined_ab(d) if d in EXCEPTIONAL_D else od_ab(d)
        want = AbelianGroup.parse(expected)
        same = got == want == od_ab(d)
        out.append(Check(f"E2(O_{d})^ab", verdict(same), f"{od_ab(d)} (derived {got}), expected {want}"))
        oracle = od_m_oracle(d)
        m_want = AbelianGroup.parse(negative_m_table(d))
        out.append(Check(f"O_{d}/M", verdict(oracle == m_want), f"{oracle}, expected {m_want}"))
    return out


def exceptional_checks() -> list[Check]:
    out = []
    W = minus_eleven_witness()
    out.append(Check("(E(x)E(conj x))^3 = -I over O_-11", verdict(is_minus_identity(W)), repr(W)))
    for d in (-2, -7):
        O = QuadraticOrder(d)
        p = -O.sqrt_d() if d == -2 else O.theta
        q = O.sqrt_d() if d == -2 else O.theta.conjugate()
        out.append(Check(f"1 - de is a unit over O_{d}", verdict((1 - p * q).is_unit()), str(1 - p * q)))
        word = dennis_stein(p, q)
        _, image = exceptional_symbol(d)
        letterwise = am_value(word)
        kernel = theta_eval(word) == identity(O)
        out.append(Check(
            f"symbol image over O_{d}",
            verdict(kernel and letterwise == image),
            f"de(d+e-3) = {image}, letterwise {letterwise}, in ker theta: {kernel}",
        ))
    _, image = exceptional_symbol(-11)
    out.append(Check("symbol image over O_-11", verdict(image == QuadraticOrder(-11)(-9)), str(image)))
    return out


def tables_suite(**_) -> list[Check]:
    return [zinv_table_check(), pslinv_table_check(), *negative_table_checks(), *exceptional_checks()]


# -- oracle vs formula ----------------------------------------------------
def quadratic_sweep(lo: int = 2, hi: int = 200) -> Check:
    """``od_ab`` against the lattice oracle for square-free ``lo <= d <= hi``."""
    bad, stated = [], []
    ds = [d for d in range(max(lo, 2), hi + 1) if is_squarefree(d)]
    for d in ds:
        u = fundamental_unit(d)
        formula, oracle = od_ab(d), od_m_oracle(d)
        if formula != oracle:
            bad.append(d)
        if od_ab_as_stated(d, u) != oracle:
            stated.append(d)
    notes = [f"literal four-case gcd form differs from the oracle at d = {stated}"] if stated else []
    detail = f"{len(ds)} values of d" + (f"; mismatches at {bad}" if bad else "")
    return Check(f"O_d/M formula vs oracle, d in [{lo}, {hi}]", verdict(not bad), detail, notes)


def ring_checks(spec: str, cap: int = DEFAULT_CAP) -> list[Check]:
    """Brute force against ``A/M`` (and the local formula when ``A`` is local)."""
    R = parse_ring_spec(spec)
    G = generate_e2(R, cap)
    ab = abelianization(G)
    M = m_subgroup(R)
    beta = beta_map(R, group=G, ab=ab, msub=M)
    out = []
    if is_local(R).is_local:
        lf = local_formula(R)
        same = beta.e2_ab == beta.a_mod_m == lf
        out.append(Check(
            f"{spec}: E2^ab = A/M = local formula", verdict(same),
            f"E2^ab {beta.e2_ab}, A/M {beta.a_mod_m}, local {lf}",
        ))
    else:
        divides = beta.a_mod_m.order % beta.e2_ab.order == 0
        out.append(Check(
            f"{spec}: beta surjective, |E2^ab| divides |A/M|", verdict(beta.surjective and divides),
            f"E2^ab {beta.e2_ab}, A/M {beta.a_mod_m}, kernel {beta.kernel}",
        ))
    N = n_subgroup(R)
    kills_n = all(beta.images[n] == beta.images[0] for n in N.elements)
    out.append(Check(f"{spec}: N maps to 0 in E2^ab", verdict(kills_n), f"A/N {N.quotient()}"))
    return out


def oracle_suite(d_range: tuple[int, int] = (2, 200), cap: int = DEFAULT_CAP,
                 bruteforce: bool = True, **_) -> list[Check]:
    out = [quadratic_sweep(*d_range)]
    for spec in LOCAL_RINGS + NONLOCAL_RINGS:
        if bruteforce:
            out.extend(ring_checks(spec, cap))
        else:
            out.append(Check(f"{spec}: brute force", NOT_APPLICABLE, "--no-bruteforce"))
    return out


# -- identity suites ------------------------------------------------------
def _instances(space: Sequence, rng: random.Random, samples: int = RANDOM_SAMPLES) -> Iterable:
    """All of ``space`` when small, followed by ``samples`` seeded random draws."""
    if len(space) <= EXHAUSTIVE_LIMIT:
        yield from space
    for _ in range(samples):
        yield rng.choice(space)


def _count(name: str, cases: Iterable, test: Callable[..., bool]) -> Check:
    n, bad = 0, []
    for case in cases:
        n += 1
        if not test(*case):
            bad.append(case)
    detail = f"{n} instances" + (f"; first failure at {tuple(map(str, bad[0]))}" if bad else "")
    return Check(name, verdict(not bad), detail)


def identity_checks(spec: str, seed: int = 0, samples: int = RANDOM_SAMPLES) -> list[Check]:
    R = parse_ring_spec(spec)
    rng = random.Random(seed)
    elems = list(R.elements())
    unit_list = [RingElement(R, i) for i in R.unit_indices]
    M = m_subgroup(R)
    one, zero = R.one, R.zero
    I = identity(R)

    def cases(*spaces):
        return _instances(list(product(*spaces)), rng, samples)

    def in_m(x) -> bool:
        return x in M

    def ds_coincides(u, v):
        e = (1 - v) / u
        lhs, rhs = steinberg_symbol(u, v), dennis_stein(u, e)
        return theta_eval(lhs) == theta_eval(rhs) and in_m(am_value(lhs) - am_value(rhs))

    def ds_image(p, q):
        if not (1 - p * q).is_unit():
            return True
        word = dennis_stein(p, q)
        return theta_eval(word) == I and in_m(am_value(word) - p * q * (p + q - 3))

    def ss_image(u, v):
        word = steinberg_symbol(u, v)
        return theta_eval(word) == I and in_m(am_value(word) + 3 * (u - 1) * (v - 1))

    checks = [
        _count(f"{spec}: E(x)E(0)E(y) = D(-1)E(x+y)", cases(elems, elems),
               lambda x, y: E(x) * E(zero) * E(y) == D(-one) * E(x + y)),
        _count(f"{spec}: E(x)D(a) = D(a^-1)E(axa)", cases(elems, unit_list),
               lambda x, a: E(x) * D(a) == D(a.inverse()) * E(a * x * a)),
        _count(f"{spec}: D(ab)D(a^-1)D(b^-1) = I", cases(unit_list, unit_list),
               lambda a, b: D(a * b) * D(a.inverse()) * D(b.inverse()) == I),
        _count(f"{spec}: D(-a) = E(a)E(a^-1)E(a)", cases(unit_list),
               lambda a: D(-a) == E(a) * E(a.inverse()) * E(a)),
        Check(f"{spec}: E(0) = E12(1)E21(-1)E12(1)",
              verdict(E(zero) == E12(one) * E21(-one) * E12(one))),
        _count(f"{spec}: E12(a) = E(-a)E(0)^-1 and E21(a) = E(0)^-1 E(a)", cases(elems),
               lambda a: E12(a) == E(-a) * E(zero).inverse() and E21(a) == E(zero).inverse() * E(a)),
        _count(f"{spec}: h_ij(u)^-1 = h_ji(u) under theta", cases(unit_list),
               lambda u: theta_eval(h("12", u).inverse()) == theta_eval(h("21", u))
               and theta_eval(h("21", u).inverse()) == theta_eval(h("12", u))),
        _count(f"{spec}: {{u,v}}_21 = {{v,u}}_12^-1 under theta", cases(unit_list, unit_list),
               lambda u, v: theta_eval(steinberg_symbol(u, v, "21"))
               == theta_eval(steinberg_symbol(v, u, "12").inverse())),
        _count(f"{spec}: {{u,v}} = <u,(1-v)/u>", cases(unit_list, unit_list), ds_coincides),
        _count(f"{spec}: {{u,v}} -> -3(u-1)(v-1) mod M", cases(unit_list, unit_list), ss_image),
        _count(f"{spec}: <d,e> -> de(d+e-3) mod M", cases(elems, elems), ds_image),
    ]
    for limit in (EXHAUSTIVE_LIMIT, 0):
        # exhaustive where the space is small, then seeded samples
        rep = relation_residues(R, samples=samples, seed=seed, limit=limit, M=M)
        mode = "exhaustive" if rep.exhaustive else f"{samples} samples, seed {seed}"
        checks.append(Check(
            f"{spec}: Steinberg relations (alpha), (beta) and A/M residues [{mode}]",
            verdict(rep.ok),
            f"{rep.alpha_checked} alpha, {rep.beta_checked} beta" + (f"; {rep.failures[0]}" if rep.failures else ""),
        ))
    return checks


def identities_suite(seed: int = 0, **_) -> list[Check]:
    out = []
    for spec in ALL_RINGS:
        out.extend(identity_checks(spec, seed=seed))
    return out


SUITES: dict[str, Callable[..., list[Check]]] = {
    "tables": tables_suite,
    "oracle-vs-formula": oracle_suite,
    "identities": identities_suite,
}


def run_suite(name: str, **kwargs) -> list[Check]:
    if name == "all":
        return [c for suite in SUITES.values() for c in suite(**kwargs)]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    return SUITES[name](**kwargs)
