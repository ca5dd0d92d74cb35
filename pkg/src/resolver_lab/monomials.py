"""Exponent-vector monomials, monomial ideals, orders, and stability.

Variables are 1-based and ordered x1 > x2 > ... > xn throughout.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import IdealSyntaxError


@dataclass(frozen=True, slots=True)
class Monomial:
    """A monomial as a tuple of nonnegative exponents, one per variable."""

    exps: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.exps, tuple):
            object.__setattr__(self, "exps", tuple(self.exps))
        if any(e < 0 for e in self.exps):
            raise ValueError(f"negative exponent in {self.exps}")

    @property
    def n(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exps)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def quotient_by(self, other: "Monomial") -> "Monomial":
        """Exact division; raises if other does not divide self."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def max_index(self) -> int:
        """m(u): largest 1-based variable index with positive exponent."""
        for i in range(len(self.exps) - 1, -1, -1):
            if self.exps[i] > 0:
                return i + 1
        raise ValueError("max_index undefined for the unit monomial")

    def support(self) -> tuple[int, ...]:
        """1-based indices of variables that occur."""
        return tuple(i + 1 for i, e in enumerate(self.exps) if e > 0)

    def exchange(self, j: int, i: int) -> "Monomial":
        """x_i * self / x_j for 1-based i, j; requires x_j | self."""
        if self.exps[j - 1] == 0:
            raise ValueError(f"x{j} does not divide {self}")
        exps = list(self.exps)
        exps[j - 1] -= 1
        exps[i - 1] += 1
        return Monomial(tuple(exps))

    def render(self) -> str:
        if self.is_unit:
            return "1"
        parts = []
        for i, e in enumerate(self.exps):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        return self.render()


def lex_key(m: Monomial) -> tuple[int, ...]:
    """Sort key: larger key means lex-larger (x1 > x2 > ... > xn)."""
    return m.exps


def revlex_key(m: Monomial) -> tuple:
    """Sort key for degree reverse lexicographic order; larger key wins."""
    return (m.degree, tuple(-e for e in reversed(m.exps)))


ORDER_KEYS = {"lex": lex_key, "revlex": revlex_key}


class StabilityClass(Enum):
    NONE = "none"
    STABLE = "stable"
    STRONGLY_STABLE = "strongly_stable"


@dataclass(frozen=True, slots=True)
class MonomialIdeal:
    """A monomial ideal, stored as its minimal generating set.

    Generators are nonunit, pairwise indivisible, and kept in a canonical
    (lex-descending) order.  Use minimal_generators() to build one from an
    arbitrary monomial set.
    """

    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        if not self.gens:
            raise ValueError("monomial ideal needs at least one generator")
        for g in self.gens:
            if g.n != self.n:
                raise ValueError(f"generator {g} has {g.n} variables, expected {self.n}")
            if g.is_unit:
                raise ValueError("the unit monomial cannot be a generator")
        gens = tuple(sorted(self.gens, key=lex_key, reverse=True))
        for a in gens:
            for b in gens:
                if a is not b and a.divides(b):
                    raise ValueError(f"generator {a} divides {b}: set is not minimal")
        object.__setattr__(self, "gens", gens)

    @property
    def num_gens(self) -> int:
        return len(self.gens)

    def contains(self, u: Monomial) -> bool:
        if u.n != self.n:
            raise ValueError(f"monomial has {u.n} variables, ideal has {self.n}")
        return any(g.divides(u) for g in self.gens)

    def max_gen_degree(self) -> int:
        return max(g.degree for g in self.gens)

    def min_gen_degree(self) -> int:
        return min(g.degree for g in self.gens)

    def in_square_of_max_ideal(self) -> bool:
        """True when every generator has degree at least 2."""
        return self.min_gen_degree() >= 2

    def relabel(self, perm: tuple[int, ...]) -> "MonomialIdeal":
        """Apply the variable permutation x_i -> x_perm[i-1] (1-based)."""
        gens = []
        for g in self.gens:
            exps = [0] * self.n
            for i, e in enumerate(g.exps):
                exps[perm[i] - 1] = e
            gens.append(Monomial(tuple(exps)))
        return minimal_generators(gens, n=self.n)

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g.exps) for g in self.gens]}

    @staticmethod
    def from_json(obj: dict) -> "MonomialIdeal":
        n = int(obj["n"])
        gens = [Monomial(tuple(int(e) for e in row)) for row in obj["gens"]]
        for g in gens:
            if g.n != n:
                raise ValueError(f"exponent row {g.exps} does not have length {n}")
        return minimal_generators(gens, n=n)

    def render(self) -> str:
        return f"n={self.n}; " + ", ".join(g.render() for g in self.gens)

    def __str__(self) -> str:
        return self.render()


def minimal_generators(monomials: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    """Divisibility-minimal subset of a monomial set, as a MonomialIdeal."""
    mons = list(dict.fromkeys(monomials))
    if not mons:
        raise ValueError("empty generating set")
    if n is None:
        n = mons[0].n
    for m in mons:
        if m.n != n:
            raise ValueError("generators have mismatched variable counts")
        if m.is_unit:
            raise ValueError("the unit monomial cannot generate a proper ideal")
    minimal = []
    for m in sorted(mons, key=lambda u: (u.degree, lex_key(u))):
        if not any(g.divides(m) for g in minimal):
            minimal.append(m)
    return MonomialIdeal(n, tuple(minimal))


def membership(ideal: MonomialIdeal, u: Monomial) -> bool:
    """True iff u lies in the ideal, i.e. some generator divides u."""
    return ideal.contains(u)


def max_index(u: Monomial) -> int:
    """m(u): the biggest index j such that x_j divides u."""
    return u.max_index()


def stability_class(ideal: MonomialIdeal) -> StabilityClass:
    """Classify as strongly stable, stable, or neither.

    Checking exchange moves on minimal generators suffices: membership of
    x_i*u/x_j for u in G(I) is decided by generator divisibility.
    """
    strongly = True
    for u in ideal.gens:
        for j in u.support():
            for i in range(1, j):
                if not ideal.contains(u.exchange(j, i)):
                    strongly = False
                    break
            if not strongly:
                break
        if not strongly:
            break
    if strongly:
        return StabilityClass.STRONGLY_STABLE

    for u in ideal.gens:
        j = u.max_index()
        for i in range(1, j):
            if not ideal.contains(u.exchange(j, i)):
                return StabilityClass.NONE
    return StabilityClass.STABLE


def is_stable(ideal: MonomialIdeal) -> bool:
    return stability_class(ideal) is not StabilityClass.NONE


def m_counts(ideal: MonomialIdeal) -> tuple[int, ...]:
    """(m_1(I), ..., m_n(I)): generator counts by their maximal variable."""
    counts = [0] * ideal.n
    for g in ideal.gens:
        counts[g.max_index() - 1] += 1
    return tuple(counts)


def borel_closure(monomials: Iterable[Monomial], n: int | None = None) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the given monomials.

    Closes the set under all exchange moves x_j -> x_i with i < j, then
    minimalizes.
    """
    seeds = list(monomials)
    if not seeds:
        raise ValueError("empty generating set")
    if n is None:
        n = seeds[0].n
    seen: set[Monomial] = set()
    queue = list(seeds)
    while queue:
        u = queue.pop()
        if u in seen:
            continue
        seen.add(u)
        for j in u.support():
            for i in range(1, j):
                v = u.exchange(j, i)
                if v not in seen:
                    queue.append(v)
    return minimal_generators(seen, n=n)


def iter_monomials_lex_desc(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """All exponent tuples of degree d in n variables, lex descending."""
    if n == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in iter_monomials_lex_desc(n - 1, d - e):
            yield (e,) + rest


# --- text format ------------------------------------------------------------

_TERM_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")
_HEADER_RE = re.compile(r"n\s*=\s*(\d+)$")


def parse_monomial_text(text: str, n: int, line: int = 1, col: int = 1) -> Monomial:
    """Parse \"x1^2*x3\" into a Monomial with n variables."""
    exps = [0] * n
    pos = 0
    stripped = text.strip()
    if not stripped:
        raise IdealSyntaxError("empty monomial", line, col)
    for term in stripped.split("*"):
        term_clean = "".join(term.split())
        m = _TERM_RE.match(term_clean)
        if not m:
            raise IdealSyntaxError(f"bad term {term.strip()!r}", line, col + pos)
        idx = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) else 1
        if idx < 1 or idx > n:
            raise IdealSyntaxError(f"variable x{idx} exceeds n={n}", line, col + pos)
        exps[idx - 1] += exp
        pos += len(term) + 1
    return Monomial(tuple(exps))


def parse_ideal_text(text: str) -> MonomialIdeal:
    """Parse ideal text: header \"n=<int>\" then comma/newline separated monomials."""
    lines = text.replace(";", "\n").split("\n")
    header_line = None
    body: list[tuple[str, int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        if header_line is None:
            m = _HEADER_RE.match(raw.strip())
            if not m:
                raise IdealSyntaxError("expected header 'n=<int>'", lineno, 1)
            header_line = int(m.group(1))
            continue
        col = 1
        for chunk in raw.split(","):
            if chunk.strip():
                body.append((chunk, lineno, col + len(chunk) - len(chunk.lstrip())))
            col += len(chunk) + 1
    if header_line is None:
        raise IdealSyntaxError("missing header 'n=<int>'", 1, 1)
    if header_line < 1:
        raise IdealSyntaxError("n must be positive", 1, 1)
    if not body:
        raise IdealSyntaxError("no generators given", 1, 1)
    mons = [parse_monomial_text(chunk, header_line, line, col) for chunk, line, col in body]
    for (chunk, line, col), m in zip(body, mons):
        if m.is_unit:
            raise IdealSyntaxError("unit monomial cannot be a generator", line, col)
    return minimal_generators(mons, n=header_line)
