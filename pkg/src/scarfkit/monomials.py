"""Exact arithmetic on monomials and monomial ideals.

Monomials are exponent vectors over a shared :class:`VariableSet`.  Every
ideal constructor keeps its generators in minimal form, sorted by degree and
then descending lexicographic order so that generator indices are stable.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

# exponents are Python ints; this bound keeps them in machine range
MAX_EXPONENT = 2**31 - 1


class VariableMismatch(ValueError):
    """Raised when two objects live over different variable sets."""


@dataclass(frozen=True)
class VariableSet:
    names: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)


def _check_same(a: VariableSet, b: VariableSet) -> None:
    if a is not b and a != b:
        raise VariableMismatch(f"variable sets differ: {a.names} vs {b.names}")


def _check_exps(exps: tuple[int, ...]) -> None:
    for e in exps:
        if e < 0:
            raise ValueError(f"negative exponent in {exps}")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]
    variables: VariableSet

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        if len(exps) != self.variables.size:
            raise ValueError(
                f"exponent vector of length {len(exps)} over {self.variables.size} variables"
            )
        _check_exps(exps)

    @classmethod
    def one(cls, variables: VariableSet) -> "Monomial":
        return cls((0,) * variables.size, variables)

    @classmethod
    def from_support(cls, variables: VariableSet, support: Iterable) -> "Monomial":
        """Squarefree monomial on the given variable names or indices."""
        exps = [0] * variables.size
        for v in support:
            exps[v if isinstance(v, int) else variables.index(v)] = 1
        return cls(tuple(exps), variables)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_same(self.variables, other.variables)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.variables)

    def __pow__(self, n: int) -> "Monomial":
        if n < 0:
            raise ValueError("negative power of a monomial")
        return Monomial(tuple(e * n for e in self.exponents), self.variables)

    def __str__(self):
        return format_monomial(self.exponents, self.variables)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a.variables, b.variables)
    return Monomial(tuple(map(max, a.exponents, b.exponents)), a.variables)


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a.variables, b.variables)
    return Monomial(tuple(map(min, a.exponents, b.exponents)), a.variables)


def divides(a: Monomial, b: Monomial) -> bool:
    _check_same(a.variables, b.variables)
    return _divides(a.exponents, b.exponents)


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(max, a, b))


def _sort_key(exps: tuple[int, ...]):
    return (sum(exps), tuple(-e for e in exps))


def _minimal(exps: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    # a monomial can only be divided by one of no larger degree, so one
    # sorted pass suffices
    kept: list[tuple[int, ...]] = []
    for e in sorted(set(exps), key=_sort_key):
        if not any(_divides(k, e) for k in kept):
            kept.append(e)
    return kept


class MonomialIdeal:
    """A monomial ideal stored by its minimal generators.

    The empty generator set is the zero ideal; the unit ideal is generated by
    the monomial 1.
    """

    __slots__ = ("variables", "_exps", "_hash")

    def __init__(self, variables: VariableSet, generators: Iterable = ()):
        self.variables = variables
        exps = []
        for g in generators:
            if isinstance(g, Monomial):
                _check_same(variables, g.variables)
                exps.append(g.exponents)
            else:
                e = tuple(int(x) for x in g)
                if len(e) != variables.size:
                    raise ValueError(f"exponent vector {e} does not match {variables.size} variables")
                _check_exps(e)
                exps.append(e)
        self._exps: tuple[tuple[int, ...], ...] = tuple(_minimal(exps))
        self._hash = None

    @classmethod
    def _from_minimal(cls, variables: VariableSet, exps: Iterable[tuple[int, ...]]) -> "MonomialIdeal":
        # caller guarantees no generator strictly divides another
        obj = cls.__new__(cls)
        obj.variables = variables
        obj._exps = tuple(sorted(set(exps), key=_sort_key))
        obj._hash = None
        return obj

    @property
    def exponent_vectors(self) -> tuple[tuple[int, ...], ...]:
        return self._exps

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(e, self.variables) for e in self._exps)

    def __len__(self):
        return len(self._exps)

    def __iter__(self):
        return iter(self.generators)

    def is_zero(self) -> bool:
        return not self._exps

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self._exps for e in g)

    def contains(self, m: Monomial) -> bool:
        _check_same(self.variables, m.variables)
        return any(_divides(g, m.exponents) for g in self._exps)

    def top_lcm(self) -> Monomial:
        """lcm of all minimal generators (1 for the zero ideal)."""
        top = (0,) * self.variables.size
        for g in self._exps:
            top = _lcm(top, g)
        return Monomial(top, self.variables)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.variables == other.variables and set(self._exps) == set(other._exps)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables.names, frozenset(self._exps)))
        return self._hash

    def __repr__(self):
        return f"MonomialIdeal({format_ideal(self)})"

    def __str__(self):
        return format_ideal(self)


def minimalize(gens: Iterable[Monomial], variables: VariableSet | None = None) -> MonomialIdeal:
    gens = list(gens)
    if variables is None:
        if not gens:
            raise ValueError("cannot infer the variable set of an empty generator list")
        variables = gens[0].variables
    return MonomialIdeal(variables, gens)


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Intersection, folded left to right with minimalization after each step."""
    if not ideals:
        raise ValueError("intersect needs at least one ideal")
    acc = ideals[0]
    for other in ideals[1:]:
        _check_same(acc.variables, other.variables)
        if acc.is_zero() or other.is_zero():
            return MonomialIdeal(acc.variables)
        lcms = {_lcm(a, b) for a in acc._exps for b in other._exps}
        acc = MonomialIdeal._from_minimal(acc.variables, _minimal(lcms))
    return acc


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I.variables, J.variables)
    prods = {tuple(x + y for x, y in zip(a, b)) for a in I._exps for b in J._exps}
    return MonomialIdeal._from_minimal(I.variables, _minimal(prods))


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 1:
        raise ValueError(f"power exponent must be positive, got {n}")
    acc = I
    for _ in range(n - 1):
        acc = product(acc, I)
    return acc


def restrict(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The sub-ideal generated by the minimal generators dividing ``m``."""
    _check_same(I.variables, m.variables)
    me = m.exponents
    return MonomialIdeal._from_minimal(I.variables, [g for g in I._exps if _divides(g, me)])


def scale(m: Monomial, I: MonomialIdeal) -> MonomialIdeal:
    _check_same(I.variables, m.variables)
    me = m.exponents
    return MonomialIdeal._from_minimal(
        I.variables, [tuple(a + b for a, b in zip(g, me)) for g in I._exps]
    )


def variable_power_ideal(variables: VariableSet, A: Iterable, n: int) -> MonomialIdeal:
    """n-th power of the prime generated by the variables in ``A``."""
    idx = sorted({a if isinstance(a, int) else variables.index(a) for a in A})
    if not idx:
        raise ValueError("variable_power_ideal needs a non-empty variable subset")
    if n < 1:
        raise ValueError(f"power exponent must be positive, got {n}")
    gens = []
    for combo in itertools.combinations_with_replacement(idx, n):
        e = [0] * variables.size
        for i in combo:
            e[i] += 1
        gens.append(tuple(e))
    return MonomialIdeal._from_minimal(variables, gens)


# --- text syntax -----------------------------------------------------------

_FACTOR = re.compile(r"^\s*([A-Za-z_][A-Za-z0-9_]*)\s*(?:\^\s*(\d+))?\s*$")


def _parse_factors(text: str) -> list[tuple[str, int]]:
    text = text.strip()
    if text == "1":
        return []
    out = []
    for part in text.split("*"):
        m = _FACTOR.match(part)
        if not m:
            raise ValueError(f"bad monomial factor {part!r} in {text!r}")
        out.append((m.group(1), int(m.group(2) or 1)))
    return out


def parse_monomial(text: str, variables: VariableSet) -> Monomial:
    exps = [0] * variables.size
    for name, k in _parse_factors(text):
        exps[variables.index(name)] += k
    return Monomial(tuple(exps), variables)


def _split_ideal(text: str) -> list[str]:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"ideal must be written inside parentheses: {text!r}")
    body = text[1:-1].strip()
    return [p for p in (s.strip() for s in body.split(",")) if p] if body else []


def parse_ideal(text: str, variables: VariableSet | Sequence[str] | None = None) -> MonomialIdeal:
    """Parse ``(x^2*y, y*z)``.  Without ``variables`` the names are taken in
    order of first appearance."""
    parts = _split_ideal(text)
    if variables is None:
        seen: dict[str, None] = {}
        for p in parts:
            for name, _ in _parse_factors(p):
                seen.setdefault(name)
        variables = VariableSet(tuple(seen))
    elif not isinstance(variables, VariableSet):
        variables = VariableSet(tuple(variables))
    return MonomialIdeal(variables, [parse_monomial(p, variables) for p in parts])


def format_monomial(exps: Sequence[int], variables: VariableSet) -> str:
    parts = []
    for name, e in zip(variables.names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_ideal(I: MonomialIdeal) -> str:
    return "(" + ", ".join(format_monomial(g, I.variables) for g in I.exponent_vectors) + ")"
