"""Degree-one simple weight modules for types A and C as exact action oracles.

A module is specified by a rational parameter vector in normal form:

* type A on rank n:  length n+1, shaped (-1,...,-1, z_1..z_r, 0,...,0) with
  the z block non-integer of size >= 2 (a fully non-integer vector is the
  cuspidal case);
* type C on rank n:  length n, shaped (-1,...,-1, z_1..z_m) with the z block
  non-integer (m >= 1); when m = 1 the last entry may instead be -1 or -2.

Basis vectors are lattice points with coordinate sum zero (type A) or even
coordinate sum (type C), intersected with the admissibility set of the
parameter vector.  Every root vector of the algebra acts through its Weyl
realization, so non-simple roots need no separate formulas and bracket
fidelity is inherited from the algebra product.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .rootsys import Root, RootSystem, build_root_system
from .weylmod import (NEG_INT, NONNEG_INT, WeylParams, act_monomial,
                      act_polynomial, parse_rational)

Index = Tuple[int, ...]


class PartitionError(ValueError):
    """Parameter vector does not have the required block shape."""


@dataclass(frozen=True)
class ModuleSpecA:
    a: Tuple[Fraction, ...]
    minus_ones: int      # j: leading -1 entries
    middle_end: int      # m: 1-based position of the last non-integer entry
    zeros: int           # l: trailing 0 entries


@dataclass(frozen=True)
class ModuleSpecC:
    a: Tuple[Fraction, ...]
    minus_ones: int      # l: leading -1 entries
    middle: int          # m = n - l entries in the tail block


def _parse_spec_a(values: Iterable) -> ModuleSpecA:
    a = tuple(parse_rational(v) for v in values)
    if len(a) < 2:
        raise PartitionError("type A parameter vector needs at least two entries")
    j = 0
    while j < len(a) and a[j] == -1:
        j += 1
    m = j
    while m < len(a) and a[m].denominator != 1:
        m += 1
    for i in range(m, len(a)):
        if a[i] != 0:
            raise PartitionError(
                f"entry {i + 1} of {a} breaks the (-1.., non-integer.., 0..) shape")
    if m - j < 2:
        raise PartitionError(
            f"{a}: the non-integer block must have at least two entries")
    return ModuleSpecA(a, j, m, len(a) - m)


def _parse_spec_c(values: Iterable) -> ModuleSpecC:
    a = tuple(parse_rational(v) for v in values)
    if not a:
        raise PartitionError("type C parameter vector needs at least one entry")
    n = len(a)
    l = 0
    while l < n - 1 and a[l] == -1:
        l += 1
    tail = a[l:]
    if all(x.denominator != 1 for x in tail):
        return ModuleSpecC(a, l, n - l)
    if len(tail) == 1 and tail[0] in (Fraction(-1), Fraction(-2)):
        return ModuleSpecC(a, l, 1)
    raise PartitionError(
        f"{a}: tail block must be non-integer (or a single -1/-2 entry)")


class DegreeOneModule:
    """Action oracle for one degree-one module, indexed by lattice points."""

    def __init__(self, kind: str, spec, system: RootSystem):
        self.kind = kind  # "N" or "M"
        self.spec = spec
        self.system = system
        self.params = WeylParams(spec.a)
        self.nvars = len(spec.a)
        self.realization = system.realization
        self._act_cache: Dict[Tuple[Root, Index], Tuple[Fraction, Index]] = {}

    # -- basis ---------------------------------------------------------------
    def in_basis(self, k: Sequence[int]) -> bool:
        k = tuple(k)
        if len(k) != self.nvars or not self.params.in_lattice(k):
            return False
        s = sum(k)
        return s == 0 if self.kind == "N" else s % 2 == 0

    def zero_index(self) -> Index:
        return (0,) * self.nvars

    def window(self, radius: int) -> List[Index]:
        """All basis indices with every coordinate in [-radius, radius]."""
        ranges = []
        for i in range(self.nvars):
            lo, hi = -radius, radius
            cls = self.params.coordinate_class(i)
            if cls == NEG_INT:
                hi = min(hi, -int(self.params.a[i]) - 1)
            elif cls == NONNEG_INT:
                lo = max(lo, -int(self.params.a[i]))
            ranges.append(range(lo, hi + 1))
        out = []
        for head in product(*ranges[:-1]):
            if self.kind == "N":
                last = -sum(head)
                if ranges[-1].start <= last <= ranges[-1].stop - 1:
                    k = head + (last,)
                    if self.in_basis(k):
                        out.append(k)
            else:
                for last in ranges[-1]:
                    k = head + (last,)
                    if (sum(k) % 2 == 0) and self.in_basis(k):
                        out.append(k)
        return out

    # -- actions ---------------------------------------------------------------
    def act_root(self, root: Root, k: Sequence[int]) -> Tuple[Fraction, Index]:
        """Coefficient and target of the canonical root vector on x(k)."""
        key = (tuple(root), tuple(k))
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        poly = self.realization.root_vector(root)
        ((qe, pe), c0), = poly.terms.items()
        t = act_monomial(self.params, qe, pe, k)
        res = (c0 * t.coeff, t.target)
        self._act_cache[key] = res
        return res

    def act_element(self, poly, k: Sequence[int]) -> Dict[Index, Fraction]:
        """Action of an arbitrary realized element on x(k)."""
        return act_polynomial(self.params, poly, k)

    def weight_of(self, k: Sequence[int]) -> Tuple[Fraction, ...]:
        """Values of the simple coroots H_{e_1}..H_{e_n} on x(k)."""
        s = [self.params.a[i] + k[i] for i in range(self.nvars)]
        n = self.system.rank
        if self.kind == "N":
            return tuple(s[i] - s[i + 1] for i in range(n))
        vals = [s[i] - s[i + 1] for i in range(n - 1)]
        vals.append(s[n - 1] + Fraction(1, 2))
        return tuple(vals)

    def index_of_weight(self, mu: Sequence[Fraction]) -> Optional[Index]:
        """The unique basis index of weight mu, or None."""
        mu = [Fraction(x) for x in mu]
        n = self.system.rank
        if self.kind == "N":
            # s_i - s_{i+1} = mu_i and sum k = 0
            suffix = [Fraction(0)] * (n + 1)
            for i in range(n - 1, -1, -1):
                suffix[i] = suffix[i + 1] + mu[i]
            total_a = sum(self.params.a, Fraction(0))
            s_last = (total_a - sum(suffix, Fraction(0))) / (n + 1)
            k = []
            for i in range(n + 1):
                ki = s_last + suffix[i] - self.params.a[i]
                if ki.denominator != 1:
                    return None
                k.append(int(ki))
        else:
            s = [Fraction(0)] * n
            s[n - 1] = mu[n - 1] - Fraction(1, 2)
            for i in range(n - 2, -1, -1):
                s[i] = mu[i] + s[i + 1]
            k = []
            for i in range(n):
                ki = s[i] - self.params.a[i]
                if ki.denominator != 1:
                    return None
                k.append(int(ki))
        k = tuple(k)
        return k if self.in_basis(k) else None

    # -- structure -------------------------------------------------------------
    def cuspidal_block(self) -> Tuple[int, ...]:
        """Simple roots (1-based) on which every root vector acts injectively."""
        if self.kind == "N":
            j, m = self.spec.minus_ones, self.spec.middle_end
            return tuple(range(j + 1, m))
        l = self.spec.minus_ones
        return tuple(range(l + 1, self.system.rank + 1))

    def theta_a(self) -> FrozenSet[int]:
        """The simple roots outside the cuspidal block."""
        block = set(self.cuspidal_block())
        return frozenset(i for i in range(1, self.system.rank + 1) if i not in block)

    def is_hw(self, k: Sequence[int], theta: Iterable[int]) -> bool:
        """Annihilation by every positive root supported on theta."""
        for root in self.system.span_closure(theta):
            if self.system.is_positive(root):
                coeff, _ = self.act_root(root, k)
                if coeff != 0:
                    return False
        return True

    def enumerate_hw(self, theta: Iterable[int], radius: int) -> List[Index]:
        theta = frozenset(theta)
        return [k for k in self.window(radius) if self.is_hw(k, theta)]

    def predicted_hw(self, radius: int) -> List[Index]:
        """Window vectors supported on the free block of the highest-weight family."""
        if self.kind == "N":
            j, m = self.spec.minus_ones, self.spec.middle_end
            free = set(range(j, m))
        else:
            free = set(range(self.spec.minus_ones, self.nvars))
        out = []
        for k in self.window(radius):
            if all(k[i] == 0 for i in range(self.nvars) if i not in free):
                out.append(k)
        return out

    def degree_on_window(self, radius: int) -> int:
        groups: Dict[Tuple[Fraction, ...], int] = {}
        for k in self.window(radius):
            w = self.weight_of(k)
            groups[w] = groups.get(w, 0) + 1
        return max(groups.values()) if groups else 1

    def levi_orbit(self, k: Sequence[int], levi_simples: Optional[Iterable[int]] = None,
                   radius: int = 3) -> "OrbitReport":
        """Reachable window vectors under the Levi root vectors, with checks."""
        if levi_simples is None:
            levi_simples = self.cuspidal_block()
        levi_roots = [r for r in self.system.span_closure(levi_simples)]
        window = set(self.window(radius))
        k = tuple(k)
        orbit: Set[Index] = {k}
        stack = [k]
        cuspidal_ok = True
        while stack:
            cur = stack.pop()
            for root in levi_roots:
                coeff, target = self.act_root(root, cur)
                if coeff == 0:
                    cuspidal_ok = False
                    continue
                if target in window and target not in orbit:
                    orbit.add(target)
                    stack.append(target)
        return_ok = True
        for root in levi_roots:
            if not self.system.is_positive(root):
                continue
            c1, t1 = self.act_root(root, k)
            if c1 == 0:
                continue
            c2, t2 = self.act_root(tuple(-x for x in root), t1)
            if c1 * c2 == 0 or t2 != k:
                return_ok = False
        return OrbitReport(sorted(orbit), cuspidal_ok, return_ok)


@dataclass(frozen=True)
class OrbitReport:
    orbit: List[Index]
    cuspidal_ok: bool
    return_paths_ok: bool


def build_N(values: Iterable) -> DegreeOneModule:
    """Type A degree-one module from a parameter vector of length rank+1."""
    spec = _parse_spec_a(values)
    system = build_root_system(f"A{len(spec.a) - 1}")
    return DegreeOneModule("N", spec, system)


def build_M(values: Iterable) -> DegreeOneModule:
    """Type C degree-one module from a parameter vector of length rank."""
    spec = _parse_spec_c(values)
    system = build_root_system(f"C{len(spec.a)}")
    return DegreeOneModule("M", spec, system)


def theta_of(module: DegreeOneModule) -> FrozenSet[int]:
    return module.theta_a()


def weight_of(module: DegreeOneModule, k: Sequence[int]) -> Tuple[Fraction, ...]:
    return module.weight_of(k)


def enumerate_hw(module: DegreeOneModule, theta: Iterable[int], radius: int) -> List[Index]:
    return module.enumerate_hw(theta, radius)


def degree_on_window(module: DegreeOneModule, radius: int) -> int:
    return module.degree_on_window(radius)
