"""The fixed test corpus and the invariant suites run over it.

Every suite returns a ``SuiteResult`` with one ``CaseResult`` per case id,
sorted by case id, so reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from . import valuation as val
from .algebra import Algebra, Element
from .builtins import builtin_algebra, zn
from .decider import (DEFAULT_BUDGET, Budget, Method, classify_cyclic, idempotent_criterion_chain,
                      is_mathieu, is_quasi_stable, is_strong_mathieu, lemma_36_chain, _table)
from .homs import hom_preimage_subspace, make_hom, quotient_algebra
from .errors import BadParameter
from .radical import cointegral_certificate, polynomial_congruences_hold
from .subspace import ALL_VARIANTS, MathieuVariant, enumerate_subspaces, is_theta_ideal, largest_theta_ideal

CORPUS = (
    ("dual_f3", "dual_f3"),
    ("f2xf2", "prod:f2,f2"),
    ("group3_f2", "group3_f2"),
    ("matrix2_f2", "matrix2_f2"),
    ("matrix2_f3", "matrix2_f3"),
    ("ut2_f2", "ut2_f2"),
    ("zn12", "zn12"),
)

MAX_DETAILS = 5


@dataclass
class CaseResult:
    case_id: str
    checked: int = 0
    failures: int = 0
    details: list = field(default_factory=list)

    def record(self, ok: bool, detail: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if len(self.details) < MAX_DETAILS:
                self.details.append(detail())

    def to_json(self) -> dict:
        return {"case": self.case_id, "checked": self.checked, "failures": self.failures,
                "details": list(self.details)}


@dataclass
class SuiteResult:
    name: str
    cases: list

    @property
    def checked(self) -> int:
        return sum(c.checked for c in self.cases)

    @property
    def failures(self) -> int:
        return sum(c.failures for c in self.cases)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked,
                "failures": self.failures,
                "cases": [c.to_json() for c in sorted(self.cases, key=lambda c: c.case_id)]}


@lru_cache(maxsize=None)
def corpus_algebra(case_id: str) -> Algebra:
    return builtin_algebra(dict(CORPUS)[case_id])


def corpus_algebras(max_size: Optional[int] = None) -> list[tuple[str, Algebra]]:
    out = [(cid, corpus_algebra(cid)) for cid, _ in CORPUS]
    if max_size is not None:
        out = [(cid, A) for cid, A in out if A.size() <= max_size]
    return out


@lru_cache(maxsize=None)
def corpus_subspaces(case_id: str) -> tuple:
    return tuple(enumerate_subspaces(corpus_algebra(case_id)))


def _variants(variants) -> tuple:
    return ALL_VARIANTS if variants is None else tuple(MathieuVariant.parse(v) for v in variants)


def _elem(F, i: int) -> Element:
    return Element(F.algebra, F.element(int(i)))


# -- Mathieu deciders ------------------------------------------------------------

def oracle_equivalence(budget: Budget = DEFAULT_BUDGET, variants=None) -> SuiteResult:
    """Idempotent criterion against brute force over every subspace and variant."""
    cases = []
    for cid, _ in corpus_algebras():
        case = CaseResult(cid)
        for V in corpus_subspaces(cid):
            for th in _variants(variants):
                a = is_mathieu(V, th, Method.IDEMPOTENT_CRITERION, budget).is_mathieu
                b = is_mathieu(V, th, Method.BRUTE_FORCE, budget).is_mathieu
                case.record(a == b, lambda: f"{V} {th.value}: idempotent={a} brute={b}")
        cases.append(case)
    return SuiteResult("oracle-equivalence", cases)


def radical_quantifier(budget: Budget = DEFAULT_BUDGET) -> SuiteResult:
    """Brute force with 'a^m in V for all m >= 1' against 'a in r(V)'."""
    cases = []
    for cid, _ in corpus_algebras():
        case = CaseResult(cid)
        for V in corpus_subspaces(cid):
            for th in ALL_VARIANTS:
                a = is_mathieu(V, th, Method.BRUTE_FORCE, budget, quantifier="all").is_mathieu
                b = is_mathieu(V, th, Method.BRUTE_FORCE, budget, quantifier="radical").is_mathieu
                case.record(a == b, lambda: f"{V} {th.value}: all-powers={a} radical={b}")
        cases.append(case)
    return SuiteResult("radical-quantifier", cases)


def strong_agreement(budget: Budget = DEFAULT_BUDGET, variants=None) -> SuiteResult:
    """Mathieu, strong (direct) and strong (radical equality) coincide."""
    cases = []
    for cid, _ in corpus_algebras():
        case = CaseResult(cid)
        for V in corpus_subspaces(cid):
            for th in _variants(variants):
                m = is_mathieu(V, th, Method.IDEMPOTENT_CRITERION, budget).is_mathieu
                d = is_strong_mathieu(V, th, Method.DIRECT, budget)
                r = is_strong_mathieu(V, th, Method.RADICAL_EQUALITY, budget)
                case.record(m == d == r, lambda: f"{V} {th.value}: mathieu={m} direct={d} radical-equality={r}")
        cases.append(case)
    return SuiteResult("strong-agreement", cases)


# -- certificates ----------------------------------------------------------------

CERTIFICATE_MODULI = (4, 6, 8, 9, 12)


def certificate_suite(budget: Budget = DEFAULT_BUDGET) -> SuiteResult:
    """The three polynomial congruences for every element of every algebra."""
    targets = [(f"zn{n}", zn(n)) for n in CERTIFICATE_MODULI] + corpus_algebras()
    cases = []
    seen = set()
    for cid, A in targets:
        if cid in seen:
            continue
        seen.add(cid)
        case = CaseResult(cid)
        F = _table(A, budget)
        for i in range(F.size):
            a = _elem(F, i)
            checks = polynomial_congruences_hold(cointegral_certificate(a))
            case.record(all(checks.values()), lambda: f"{a}: {checks}")
        cases.append(case)
    return SuiteResult("certificates", cases)


# -- transfer along surjections ----------------------------------------------------

def diagonal_surjection():
    """ut2_f2 -> f2 x f2, keeping the diagonal entries."""
    A = corpus_algebra("ut2_f2")
    B = corpus_algebra("f2xf2")
    return make_hom(A, B, [[1, 0, 0], [0, 0, 1]])


def _transfer_case(cid: str, phi, budget: Budget) -> CaseResult:
    case = CaseResult(cid)
    for V in enumerate_subspaces(phi.target):
        W = hom_preimage_subspace(phi, V)
        for th in ALL_VARIANTS:
            a = is_mathieu(V, th, budget=budget).is_mathieu
            b = is_mathieu(W, th, budget=budget).is_mathieu
            case.record(a == b, lambda: f"{V} {th.value}: target={a} preimage={b}")
            sa = is_strong_mathieu(V, th, budget=budget)
            sb = is_strong_mathieu(W, th, budget=budget)
            case.record(sa == sb, lambda: f"{V} {th.value}: strong target={sa} preimage={sb}")
    return case


def transfer_suite(budget: Budget = DEFAULT_BUDGET) -> SuiteResult:
    return SuiteResult("transfer", [_transfer_case("ut2_f2->f2xf2", diagonal_surjection(), budget)])


def quotient_transfer_suite(budget: Budget = DEFAULT_BUDGET) -> SuiteResult:
    """Transfer along every canonical surjection A -> A/I with a free quotient."""
    cases = []
    for cid, A in corpus_algebras():
        for I in corpus_subspaces(cid):
            if I.is_zero() or not is_theta_ideal(I, MathieuVariant.TWO_SIDED):
                continue
            try:
                _, phi = quotient_algebra(A, I)
            except BadParameter:
                continue
            cases.append(_transfer_case(f"{cid}/{I}", phi, budget))
    return SuiteResult("quotient-transfer", cases)


# -- radical and co-integrality index ----------------------------------------------

@lru_cache(maxsize=None)
def _indices(A: Algebra) -> tuple:
    F = _table(A, DEFAULT_BUDGET)
    return tuple(cointegral_certificate(_elem(F, i)).index for i in range(F.size))


def radical_index_suite(budget: Budget = DEFAULT_BUDGET, variants=None) -> SuiteResult:
    """On Mathieu M: (a^N)_theta in M for a in r(M) at the certified N, and the
    radical is exactly the set of a with some (a^N)_theta inside M."""
    cases = []
    for cid, A in corpus_algebras():
        case = CaseResult(cid)
        F = _table(A, budget)
        idx = _indices(A)
        for M in corpus_subspaces(cid):
            member = F.mask(M)
            rad = F.radical_mask(member)
            for th in _variants(variants):
                if not is_mathieu(M, th, budget=budget).is_mathieu:
                    continue

                def inside(x: int) -> bool:
                    return bool(member[F.theta_generators(x, th)].all())

                for a in range(F.size):
                    top = int(F.preperiod[a] + F.period[a])
                    some = any(inside(F.power(a, N)) for N in range(top + 1))
                    case.record(some == bool(rad[a]),
                                lambda: f"{M} {th.value} a={F.element(a)}: radical={bool(rad[a])} some-N={some}")
                    if rad[a]:
                        ok = inside(F.power(a, idx[a]))
                        case.record(ok, lambda: f"{M} {th.value} a={F.element(a)}: (a^{idx[a]}) not inside")
        cases.append(case)
    return SuiteResult("radical-index", cases)


# -- implication chains --------------------------------------------------------------

CYCLIC_MAX_SIZE = 16


def cyclic_suite(budget: Budget = DEFAULT_BUDGET) -> SuiteResult:
    cases = []
    for cid, A in corpus_algebras(CYCLIC_MAX_SIZE):
        case = CaseResult(cid)
        F = _table(A, budget)
        for i in range(1, F.size):
            a = _elem(F, i)
            for th in ALL_VARIANTS:
                rec = classify_cyclic(a, th, budget=budget)
                case.record(rec.chain_holds, lambda: f"{a} {th.value}: {rec.statements}")
        cases.append(case)
    return SuiteResult("cyclic-chain", cases)


def chain_suite(budget: Budget = DEFAULT_BUDGET) -> SuiteResult:
    """Locality chain on each algebra, the nilpotent/idempotent equivalence on
    each subspace, and equivalence of the locality chain."""
    cases = []
    for cid, A in corpus_algebras():
        case = CaseResult(cid)
        rec = lemma_36_chain(A, budget)
        case.record(rec.chain_holds, lambda: f"locality chain {rec.statements}")
        case.record(len(set(rec.statements)) == 1, lambda: f"locality statements differ {rec.statements}")
        for V in corpus_subspaces(cid):
            eq = idempotent_criterion_chain(V, budget)
            case.record(eq.chain_holds, lambda: f"{V}: {eq.statements}")
        cases.append(case)
    return SuiteResult("chains", cases)


def largest_ideal_suite(budget: Budget = DEFAULT_BUDGET) -> SuiteResult:
    """I_{theta,V} sits in V, is a theta-ideal, and contains every theta-ideal in V."""
    cases = []
    for cid, A in corpus_algebras():
        case = CaseResult(cid)
        subs = corpus_subspaces(cid)
        for th in (MathieuVariant.LEFT, MathieuVariant.RIGHT, MathieuVariant.TWO_SIDED):
            ideals = [W for W in subs if is_theta_ideal(W, th)]
            for V in subs:
                I = largest_theta_ideal(V, th)
                ok = V.contains(I) and is_theta_ideal(I, th) and all(I.contains(W) for W in ideals if V.contains(W))
                case.record(ok, lambda: f"{V} {th.value}: I = {I}")
        for V in subs:
            I = largest_theta_ideal(V, MathieuVariant.PRE_TWO_SIDED)
            expected = largest_theta_ideal(V, "left").sum(largest_theta_ideal(V, "right"))
            case.record(I == expected and V.contains(I), lambda: f"{V} pre: I = {I}")
        cases.append(case)
    return SuiteResult("largest-ideal", cases)


def quasi_stability_suite(budget: Budget = DEFAULT_BUDGET) -> SuiteResult:
    """Locality implies quasi-stability on every corpus algebra over a ring of size <= 5."""
    cases = []
    for cid, A in corpus_algebras():
        if A.ring.modulus > 5:
            continue
        case = CaseResult(cid)
        rep = is_quasi_stable(A, budget=budget)
        case.record(not rep.local or rep.quasi_stable, lambda: f"local but witness {rep.witness}")
        cases.append(case)
    return SuiteResult("quasi-stability", cases)


# -- valuation --------------------------------------------------------------------------

VALUATION_SPECS = (
    ("Z", val.OrderedGroupSpec.integers()),
    ("Z[t]", val.OrderedGroupSpec.polynomials()),
    ("lex1", val.OrderedGroupSpec.lex(1)),
    ("lex2", val.OrderedGroupSpec.lex(2)),
    ("lex3", val.OrderedGroupSpec.lex(3)),
)


def valuation_suite(seed: int = 0, samples: int = 10_000) -> SuiteResult:
    import random

    cases = []
    for cid, spec in VALUATION_SPECS:
        case = CaseResult(cid)
        rng = random.Random(seed)
        verdict = val.strongly_simple_verdict(spec)
        sampled = val.sampled_dominating_exists(spec, samples, seed)
        unbounded = val.unbounded_positive_exists(spec)
        case.record(verdict == (not sampled) == (not unbounded),
                    lambda: f"verdict={verdict} sampled-dominating={sampled} unbounded={unbounded}")
        for _ in range(200):
            g, h, f = (val.sample_element(spec, rng) for _ in range(3))
            case.record(not (g > h) or (g + f > h + f), lambda: f"order not additive at {g}, {h}, {f}")
            dom, wit = val.is_dominating(g)
            if not dom:
                case.record(val.witness_holds(g, wit), lambda: f"witness {wit} fails for {g}")
        cases.append(case)
    return SuiteResult("valuation", cases)


SUITES = {
    "oracle-equivalence": oracle_equivalence,
    "radical-quantifier": radical_quantifier,
    "strong-agreement": strong_agreement,
    "certificates": certificate_suite,
    "transfer": transfer_suite,
    "quotient-transfer": quotient_transfer_suite,
    "radical-index": radical_index_suite,
    "cyclic-chain": cyclic_suite,
    "chains": chain_suite,
    "largest-ideal": largest_ideal_suite,
    "quasi-stability": quasi_stability_suite,
    "valuation": lambda budget=DEFAULT_BUDGET, seed=0: valuation_suite(seed),
}


def run_suites(names=None, budget: Budget = DEFAULT_BUDGET, seed: int = 0) -> list[SuiteResult]:
    names = sorted(SUITES) if names is None else sorted(set(names))
    return [SUITES[n](budget=budget, seed=seed) if n == "valuation" else SUITES[n](budget=budget) for n in names]
