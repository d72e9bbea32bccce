"""Totally ordered abelian value groups: Z, lexicographic Z^k and Z[t].

Z[t] is ordered by the sign of the leading coefficient of the difference.
An element g is *dominating* when every h is exceeded by some multiple n g;
a valuation domain is strongly simple exactly when its value group has no
dominating element.  A value g >= 0 is *anti-Archimedean* when its multiples
n g are bounded above.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BadParameter, NegativeValue, SchemaError, SpecMismatch


class Family(str, enum.Enum):
    INTEGERS = "Z"
    LEX = "lex"
    POLYNOMIALS = "Z[t]"


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class OrderedGroupSpec:
    family: Family
    k: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family is Family.LEX and self.k < 1:
            raise BadParameter("lexicographic rank must be at least 1")
        if self.family is not Family.LEX and self.k != 1:
            raise BadParameter("rank only applies to the lexicographic family")

    @classmethod
    def integers(cls) -> OrderedGroupSpec:
        return cls(Family.INTEGERS)

    @classmethod
    def lex(cls, k: int) -> OrderedGroupSpec:
        return cls(Family.LEX, k)

    @classmethod
    def polynomials(cls) -> OrderedGroupSpec:
        return cls(Family.POLYNOMIALS)

    def element(self, coeffs) -> GroupElement:
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        coeffs = tuple(int(c) for c in coeffs)
        if self.family is Family.INTEGERS and len(coeffs) != 1:
            raise BadParameter("an integer value has exactly one coordinate")
        if self.family is Family.LEX and len(coeffs) != self.k:
            raise BadParameter(f"lexicographic value needs {self.k} coordinates")
        if self.family is Family.POLYNOMIALS:
            while coeffs and coeffs[-1] == 0:
                coeffs = coeffs[:-1]
        return GroupElement(self, coeffs)

    def zero(self) -> GroupElement:
        return self.element(() if self.family is Family.POLYNOMIALS else (0,) * self.k)

    def to_json(self) -> dict:
        if self.family is Family.LEX:
            return {"family": "lex", "k": self.k}
        return {"family": self.family.value}

    @classmethod
    def from_json(cls, data: dict) -> OrderedGroupSpec:
        if not isinstance(data, dict) or "family" not in data:
            raise SchemaError("group spec needs a 'family' field")
        extra = set(data) - {"family", "k"}
        if extra:
            raise SchemaError(f"unknown group spec fields {sorted(extra)}")
        family = parse_family(data["family"])
        if family is Family.LEX:
            if "k" not in data:
                raise SchemaError("lexicographic spec needs 'k'")
            return cls.lex(int(data["k"]))
        if "k" in data:
            raise SchemaError("'k' only applies to the lexicographic family")
        return cls(family)


def parse_family(text: str) -> Family:
    aliases = {"z": Family.INTEGERS, "integers": Family.INTEGERS, "lex": Family.LEX,
               "z[t]": Family.POLYNOMIALS, "zt": Family.POLYNOMIALS, "polynomials": Family.POLYNOMIALS}
    try:
        return aliases[str(text).lower()]
    except KeyError:
        raise SchemaError(f"unknown group family {text!r}") from None


@dataclass(frozen=True)
class GroupElement:
    spec: OrderedGroupSpec
    coeffs: tuple

    def _same(self, other: GroupElement):
        if other.spec != self.spec:
            raise SpecMismatch("group elements from different groups")

    def __add__(self, other: GroupElement) -> GroupElement:
        self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return self.spec.element(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> GroupElement:
        return self.spec.element(tuple(-x for x in self.coeffs))

    def __sub__(self, other: GroupElement) -> GroupElement:
        return self + (-other)

    def scale(self, n: int) -> GroupElement:
        return self.spec.element(tuple(n * x for x in self.coeffs))

    def sign(self) -> int:
        if self.spec.family is Family.POLYNOMIALS:
            return (self.coeffs[-1] > 0) - (self.coeffs[-1] < 0) if self.coeffs else 0
        for x in self.coeffs:
            if x:
                return 1 if x > 0 else -1
        return 0

    def degree(self) -> int:
        """Polynomial degree, -1 for zero."""
        return len(self.coeffs) - 1

    def __lt__(self, other: GroupElement) -> bool:
        return group_compare(self, other) is Order.LESS

    def __le__(self, other: GroupElement) -> bool:
        return group_compare(self, other) is not Order.GREATER

    def __gt__(self, other: GroupElement) -> bool:
        return group_compare(self, other) is Order.GREATER

    def __ge__(self, other: GroupElement) -> bool:
        return group_compare(self, other) is not Order.LESS

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if self.spec.family is Family.POLYNOMIALS:
            if not self.coeffs:
                return "0"
            terms = []
            for i in reversed(range(len(self.coeffs))):
                c = self.coeffs[i]
                if c:
                    mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                    terms.append(f"{c}{mono}" if mono == "" or abs(c) != 1 else ("-" if c < 0 else "") + mono)
            return " + ".join(terms).replace("+ -", "- ")
        if self.spec.family is Family.INTEGERS:
            return str(self.coeffs[0])
        return "(" + ", ".join(map(str, self.coeffs)) + ")"


def group_compare(g: GroupElement, h: GroupElement) -> Order:
    g._same(h)
    return Order((g - h).sign())


def _dominating_closed_form(g: GroupElement) -> bool:
    fam = g.spec.family
    if fam is Family.INTEGERS:
        return g.coeffs[0] > 0
    if fam is Family.LEX:
        return g.coeffs[0] > 0
    return False


def _dominance_witness(g: GroupElement) -> GroupElement:
    """An h with n g <= h for every n >= 1."""
    spec = g.spec
    if g.sign() <= 0:
        return spec.zero()
    if spec.family is Family.LEX:
        return spec.element((1,) + (0,) * (spec.k - 1))
    if spec.family is Family.POLYNOMIALS:
        return spec.element((0,) * (g.degree() + 1) + (1,))
    raise BadParameter("positive integers are dominating")


def is_dominating(g: GroupElement) -> tuple[bool, Optional[GroupElement]]:
    """(True, None) if every h is exceeded by some n g, else (False, witness h)."""
    if _dominating_closed_form(g):
        return True, None
    return False, _dominance_witness(g)


def witness_holds(g: GroupElement, h: GroupElement, n_max: int = 1000) -> bool:
    """Spot check: n g <= h for n = 1..n_max."""
    return all(g.scale(n) <= h for n in range(1, n_max + 1))


def is_anti_archimedean(g: GroupElement) -> tuple[bool, Optional[GroupElement]]:
    """Whether the multiples n g (n >= 1) are bounded above, with a bound."""
    if g.sign() < 0:
        raise NegativeValue(f"{g} is negative")
    spec = g.spec
    if g.sign() == 0:
        return True, spec.zero()
    if spec.family is Family.INTEGERS:
        return False, None
    if spec.family is Family.LEX:
        if g.coeffs[0] == 0:
            return True, spec.element((1,) + (0,) * (spec.k - 1))
        return False, None
    return True, spec.element((0,) * (g.degree() + 1) + (1,))


def strongly_simple_verdict(spec: OrderedGroupSpec) -> bool:
    """True iff the group has no dominating element."""
    if spec.family in (Family.INTEGERS, Family.LEX):
        return False
    return True


def example_value(exponents: Sequence[int]) -> GroupElement:
    """Value of x_1^a1 ... x_n^an: the polynomial a_n t^(n-1) + ... + a_1."""
    return OrderedGroupSpec.polynomials().element(tuple(exponents))


# -- sampling cross-checks ------------------------------------------------------

def sample_element(spec: OrderedGroupSpec, rng: random.Random, bound: int = 50, max_degree: int = 4) -> GroupElement:
    if spec.family is Family.POLYNOMIALS:
        deg = rng.randint(-1, max_degree)
        return spec.element(tuple(rng.randint(-bound, bound) for _ in range(deg + 1)))
    return spec.element(tuple(rng.randint(-bound, bound) for _ in range(spec.k)))


def sampled_dominating_exists(spec: OrderedGroupSpec, samples: int = 10_000, seed: int = 0) -> bool:
    """Empirical search: does some sampled g > 0 exceed every probe target by a multiple n <= 10^6?

    The targets are random elements plus a few large ones (a high monomial
    for Z[t], a multiple of the first unit vector otherwise).
    """
    rng = random.Random(seed)
    targets = [sample_element(spec, rng) for _ in range(32)]
    if spec.family is Family.POLYNOMIALS:
        targets.append(spec.element((0,) * 5 + (1,)))
    else:
        targets.append(spec.element((100,) + (0,) * (spec.k - 1)))
    for _ in range(samples):
        g = sample_element(spec, rng)
        if g.sign() > 0 and all(_exceeds(g, h) for h in targets):
            return True
    return False


def _exceeds(g: GroupElement, h: GroupElement, n_max: int = 10**6) -> bool:
    """Whether some n in 1..n_max has n g > h; n g is increasing in n for g > 0."""
    return g.scale(n_max) > h


def unbounded_positive_exists(spec: OrderedGroupSpec) -> bool:
    """Some g > 0 whose multiples have no upper bound (checked through anti-Archimedean values)."""
    probes = [spec.element((1,) + (0,) * (spec.k - 1))] if spec.family is not Family.POLYNOMIALS \
        else [spec.element((1,)), spec.element((0, 1)), spec.element((-3, 0, 2))]
    return any(not is_anti_archimedean(g)[0] for g in probes)
