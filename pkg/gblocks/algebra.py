"""Finite groups given by multiplication tables and exact cyclotomic scalars."""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Any, Literal

from sympy import QQ, Matrix, Poly, Rational, Symbol, cyclotomic_poly, primefactors, totient

from . import config
from .errors import CyclotomicError, GroupError

logger = logging.getLogger(__name__)

_X = Symbol("x")


# ---------------------------------------------------------------------------
# finite groups
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class FiniteGroup:
    mul_table: tuple[tuple[int, ...], ...]
    identity: int
    inv_table: tuple[int, ...]
    names: tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.mul_table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def prod(self, *elements: int) -> int:
        out = self.identity
        for g in elements:
            out = self.mul_table[out][g]
        return out

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def conj(self, x: int, g: int) -> int:
        """x·g·x⁻¹."""
        return self.mul_table[self.mul_table[x][g]][self.inv_table[x]]

    def index(self, name: str | int) -> int:
        if isinstance(name, int) and not isinstance(name, bool):
            if 0 <= name < self.order:
                return name
            raise GroupError(f"group element index {name} out of range 0..{self.order - 1}")
        try:
            return self.names.index(str(name))
        except ValueError:
            raise GroupError(f"unknown group element {name!r}") from None

    def name(self, a: int) -> str:
        return self.names[a]

    def is_abelian(self) -> bool:
        return all(
            self.mul_table[a][b] == self.mul_table[b][a]
            for a, b in itertools.combinations(self.elements, 2)
        )

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul_table[x][a]
            k += 1
        return k


def _cycle_name(perm: tuple[int, ...]) -> str:
    seen: set[int] = set()
    cycles: list[str] = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append("(" + "".join(str(i + 1) for i in cycle) + ")")
    return "".join(cycles) or "e"


def _cyclic_table(n: int) -> tuple[list[list[int]], list[str]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)], [str(a) for a in range(n)]


def _dihedral_table(n: int) -> tuple[list[list[int]], list[str]]:
    # element r^k s^j has index j*n + k
    def mul(a: int, b: int) -> int:
        ja, ka = divmod(a, n)
        jb, kb = divmod(b, n)
        k = (ka + (-kb if ja else kb)) % n
        return ((ja + jb) % 2) * n + k

    names = ["e" if k == 0 else f"r{k}" for k in range(n)] + [
        "s" if k == 0 else f"r{k}s" for k in range(n)
    ]
    return [[mul(a, b) for b in range(2 * n)] for a in range(2 * n)], names


def _symmetric_table(n: int) -> tuple[list[list[int]], list[str]]:
    perms = sorted(itertools.permutations(range(n)), key=lambda p: (_cycle_name(p) != "e", p))
    position = {p: i for i, p in enumerate(perms)}
    table = [
        [position[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms
    ]
    return table, [_cycle_name(p) for p in perms]


_PRESETS = {
    "cyclic": (_cyclic_table, 1, 24),
    "dihedral": (_dihedral_table, 1, 12),
    "symmetric": (_symmetric_table, 1, 4),
}


def _validate_table(table: list[list[int]]) -> tuple[int, tuple[int, ...]]:
    n = len(table)
    if n == 0:
        raise GroupError("group table is empty")
    full = set(range(n))
    for r, row in enumerate(table):
        if len(row) != n or set(row) != full:
            raise GroupError(f"row {r} of the multiplication table is not a permutation")
    for c in range(n):
        if {table[r][c] for r in range(n)} != full:
            raise GroupError(f"column {c} of the multiplication table is not a permutation")
    identity = next(
        (e for e in range(n) if all(table[e][a] == a and table[a][e] == a for a in range(n))),
        None,
    )
    if identity is None:
        raise GroupError("multiplication table has no two-sided identity")
    inverses: list[int] = []
    for a in range(n):
        b = next((b for b in range(n) if table[a][b] == identity), None)
        if b is None or table[b][a] != identity:
            raise GroupError(f"element {a} has no two-sided inverse")
        inverses.append(b)
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupError(f"multiplication is not associative on ({a}, {b}, {c})")
    return identity, tuple(inverses)


def group_parse(spec: dict[str, Any]) -> FiniteGroup:
    """Build a validated group from ``{"preset": ..., "n": ...}`` or ``{"table": ...}``."""
    if not isinstance(spec, dict):
        raise GroupError(f"group spec must be an object, got {type(spec).__name__}")
    if "preset" in spec:
        preset = str(spec["preset"]).strip().lower()
        if preset not in _PRESETS:
            raise GroupError(f"unknown group preset {preset!r}")
        builder, low, high = _PRESETS[preset]
        try:
            n = int(spec["n"])
        except (KeyError, TypeError, ValueError):
            raise GroupError(f"preset {preset!r} needs an integer 'n'") from None
        if not low <= n <= high:
            raise GroupError(f"preset {preset!r} supports n in {low}..{high}, got {n}")
        table, names = builder(n)
    elif "table" in spec:
        try:
            table = [[int(v) for v in row] for row in spec["table"]]
        except (TypeError, ValueError):
            raise GroupError("explicit group table must be a list of integer rows") from None
        names = [str(i) for i in range(len(table))]
    else:
        raise GroupError("group spec needs either 'preset' or 'table'")

    if spec.get("names") is not None:
        names = [str(s) for s in spec["names"]]
        if len(names) != len(table) or len(set(names)) != len(names):
            raise GroupError("'names' must list one distinct name per element")

    identity, inverses = _validate_table(table)
    group = FiniteGroup(
        mul_table=tuple(tuple(row) for row in table),
        identity=identity,
        inv_table=inverses,
        names=tuple(names),
    )
    logger.debug("parsed group of order %d", group.order)
    return group


def group_conj(grp: FiniteGroup, x: int, g: int) -> int:
    for v in (x, g):
        if not 0 <= v < grp.order:
            raise GroupError(f"group element index {v} out of range 0..{grp.order - 1}")
    return grp.conj(x, g)


# ---------------------------------------------------------------------------
# cyclotomic scalars
# ---------------------------------------------------------------------------


@cache
def _modulus(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(n, _X), _X).all_coeffs()))


@cache
def _degree(n: int) -> int:
    return int(totient(n))


def _reduce(n: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    mod = _modulus(n)
    d = len(mod) - 1
    work = list(coeffs) + [Fraction(0)] * max(0, d - len(coeffs))
    for top in range(len(work) - 1, d - 1, -1):
        c = work[top]
        if c:
            work[top] = Fraction(0)
            for j in range(d):
                if mod[j]:
                    work[top - d + j] -= c * mod[j]
    return tuple(work[:d])


def _check_conductor(n: int) -> None:
    if n < 1:
        raise CyclotomicError(f"conductor must be positive, got {n}")
    if n > config.CONDUCTOR_LIMIT:
        raise CyclotomicError(
            f"conductor {n} exceeds the configured bound {config.CONDUCTOR_LIMIT}"
        )


def _as_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise CyclotomicError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise CyclotomicError(f"not a rational number: {value!r}") from None
    if isinstance(value, float) and value.is_integer():
        return Fraction(int(value))
    raise CyclotomicError(f"not an exact rational: {value!r}")


@dataclass(frozen=True, slots=True)
class Cyclotomic:
    """Element of Q(ζ_N) in the power basis ζ^0..ζ^{φ(N)-1}.

    The representation is canonical, so equal values at the same conductor
    have equal coefficient tuples. Values at different conductors are
    compared after embedding into the lcm conductor, and hash through
    ``canonical``, which rewrites a value over its least conductor.
    """

    conductor: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_powers(cls, n: int, powers: dict[int, Any]) -> Cyclotomic:
        _check_conductor(n)
        work = [Fraction(0)] * n
        for k, c in powers.items():
            work[int(k) % n] += _as_fraction(c)
        return cls(n, _reduce(n, work))

    @classmethod
    def rational(cls, value: Any, n: int = 1) -> Cyclotomic:
        return cls.from_powers(n, {0: value})

    @classmethod
    def root(cls, k: int, n: int) -> Cyclotomic:
        """ζ_n^k."""
        return cls.from_powers(n, {k: 1})

    @classmethod
    def zero(cls, n: int = 1) -> Cyclotomic:
        _check_conductor(n)
        return _constant(n, 0)

    @classmethod
    def one(cls, n: int = 1) -> Cyclotomic:
        _check_conductor(n)
        return _constant(n, 1)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise CyclotomicError(f"{self} is not rational")
        return self.coeffs[0]

    def canonical(self) -> Cyclotomic:
        """The same value written over the smallest cyclotomic field that contains it."""
        if self.is_rational():
            return Cyclotomic(1, self.coeffs[:1])
        return Cyclotomic(*_lowest(self.conductor, self.coeffs))

    def embed(self, m: int) -> Cyclotomic:
        if m % self.conductor:
            raise CyclotomicError(f"cannot embed Q(ζ_{self.conductor}) into Q(ζ_{m})")
        if m == self.conductor:
            return self
        _check_conductor(m)
        step = m // self.conductor
        work = [Fraction(0)] * m
        for k, c in enumerate(self.coeffs):
            work[k * step] += c
        return Cyclotomic(m, _reduce(m, work))

    def _aligned(self, other: Any) -> tuple[Cyclotomic, Cyclotomic]:
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.rational(_as_fraction(other), self.conductor)
        if other.conductor == self.conductor:
            return self, other
        m = math.lcm(self.conductor, other.conductor)
        return self.embed(m), other.embed(m)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: Any) -> Cyclotomic:
        a, b = self._aligned(other)
        return Cyclotomic(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other: Any) -> Cyclotomic:
        a, b = self._aligned(other)
        return a + (-b)

    def __rsub__(self, other: Any) -> Cyclotomic:
        a, b = self._aligned(other)
        return b + (-a)

    def _scaled(self, c: Fraction) -> Cyclotomic:
        if c == 1:
            return self
        return Cyclotomic(self.conductor, tuple(x * c for x in self.coeffs))

    def __mul__(self, other: Any) -> Cyclotomic:
        a, b = self._aligned(other)
        if b.is_rational():
            return a._scaled(b.coeffs[0])
        if a.is_rational():
            return b._scaled(a.coeffs[0])
        d = len(a.coeffs)
        work = [Fraction(0)] * max(1, 2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        work[i + j] += x * y
        return Cyclotomic(a.conductor, _reduce(a.conductor, work))

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise CyclotomicError("division by zero")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.coeffs[0], self.conductor)
        n = self.conductor
        num = Poly(list(reversed(self.coeffs)), _X, domain=QQ)
        den = Poly(list(reversed(_modulus(n))), _X, domain=QQ)
        inv = num.invert(den)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        return Cyclotomic(n, _reduce(n, coeffs))

    def __truediv__(self, other: Any) -> Cyclotomic:
        a, b = self._aligned(other)
        return a * b.inverse()

    def __rtruediv__(self, other: Any) -> Cyclotomic:
        a, b = self._aligned(other)
        return b * a.inverse()

    def __pow__(self, k: int) -> Cyclotomic:
        base = self if k >= 0 else self.inverse()
        out = Cyclotomic.one(self.conductor)
        for _ in range(abs(k)):
            out = out * base
        return out

    def conjugate(self) -> Cyclotomic:
        n = self.conductor
        work = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            work[(-k) % n] += c
        return Cyclotomic(n, _reduce(n, work))

    # -- comparison --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Cyclotomic) and other.conductor == self.conductor:
            return self.coeffs == other.coeffs
        if not isinstance(other, (Cyclotomic, int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        a, b = self._aligned(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        # rationals hash like the Fraction they equal
        low = self.canonical()
        if low.conductor == 1:
            return hash(low.coeffs[0])
        return hash((low.conductor, low.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"z{self.conductor}^{k}")
            else:
                terms.append(f"{c}*z{self.conductor}^{k}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {self})"


@cache
def _constant(n: int, value: int) -> Cyclotomic:
    return Cyclotomic.from_powers(n, {0: value})


@cache
def _lowest(n: int, coeffs: tuple[Fraction, ...]) -> tuple[int, tuple[Fraction, ...]]:
    """Least conductor m | n whose field holds the value, with the coefficients over ζ_m."""
    for p in primefactors(n):
        found = _restrict(n, coeffs, n // p)
        if found is not None:
            return _lowest(n // p, found)
    return n, coeffs


def _restrict(n: int, coeffs: tuple[Fraction, ...], m: int) -> tuple[Fraction, ...] | None:
    """Coefficients over ζ_m of a value of Q(ζ_n), or None when it lies outside Q(ζ_m)."""
    columns = [Cyclotomic.root(j, m).embed(n).coeffs for j in range(_degree(m))]
    system = Matrix([[Rational(c.numerator, c.denominator) for c in row] for row in zip(*columns)])
    target = Matrix([Rational(c.numerator, c.denominator) for c in coeffs])
    try:
        solution, _ = system.gauss_jordan_solve(target)
    except ValueError:
        return None
    return tuple(Fraction(int(v.p), int(v.q)) for v in solution)


def parse_scalar(value: Any, n: int) -> Cyclotomic:
    """Scalar from a JSON value: a rational (number or ``"p/q"``) or ``{power: rational}``."""
    if isinstance(value, dict):
        try:
            powers = {int(k): v for k, v in value.items()}
        except ValueError:
            raise CyclotomicError(f"powers of ζ_{n} must be integers: {value!r}") from None
        return Cyclotomic.from_powers(n, powers)
    return Cyclotomic.rational(_as_fraction(value), n)


CycloOp = Literal["add", "sub", "mul", "div", "conjugate"]


def cyclo_arith(a: Cyclotomic, b: Cyclotomic | None, op: CycloOp) -> Cyclotomic:
    if op == "conjugate":
        return a.conjugate()
    if b is None:
        raise CyclotomicError(f"operation {op!r} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise CyclotomicError(f"unknown operation {op!r}")
