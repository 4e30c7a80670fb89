"""The Weyl algebra on N generator pairs and its lattice-indexed simple modules.

The algebra is generated by q_1..q_N, p_1..p_N with [q_i,q_j] = [p_i,p_j] = 0
and [p_i,q_j] = delta_ij.  Elements are kept in normal order (all q's to the
left of all p's); multiplication re-normalises with the exact contraction
formula, so commutators of realized Lie algebra elements come out exactly.

A parameter vector a of rationals defines a module on basis vectors x(k)
indexed by the integer lattice points admissible for a.  The action of the
generators is a two-branch shift-with-coefficient recipe depending on whether
a_i is a negative integer; all coefficients are exact rationals.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

NEG_INT = "NEG_INT"
NONNEG_INT = "NONNEG_INT"
NON_INT = "NON_INT"


def parse_rational(s) -> Fraction:
    """Parse 'p/q' / 'p' strings (or numbers) into an exact Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    return Fraction(str(s).strip())


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class WeylPolynomial:
    """Normal-ordered polynomial in q_1..q_N, p_1..p_N with rational coefficients.

    Terms map (q_exponents, p_exponents) -> coefficient.  The product uses
    p^a q^c = sum_s s! C(a,s) C(c,s) q^(c-s) p^(a-s) per variable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Fraction]] = None):
        self.nvars = nvars
        self.terms: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Fraction] = {}
        if terms:
            for key, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    self.terms[key] = c

    @classmethod
    def monomial(cls, nvars: int, qexp: Sequence[int], pexp: Sequence[int], coeff=1) -> "WeylPolynomial":
        return cls(nvars, {(tuple(qexp), tuple(pexp)): Fraction(coeff)})

    @classmethod
    def constant(cls, nvars: int, c) -> "WeylPolynomial":
        zero = (0,) * nvars
        return cls(nvars, {(zero, zero): Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "WeylPolynomial") -> "WeylPolynomial":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return WeylPolynomial(self.nvars, out)

    def __sub__(self, other: "WeylPolynomial") -> "WeylPolynomial":
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) - c
        return WeylPolynomial(self.nvars, out)

    def __neg__(self) -> "WeylPolynomial":
        return WeylPolynomial(self.nvars, {k: -c for k, c in self.terms.items()})

    def scale(self, f) -> "WeylPolynomial":
        f = Fraction(f)
        return WeylPolynomial(self.nvars, {k: f * c for k, c in self.terms.items()})

    def __mul__(self, other: "WeylPolynomial") -> "WeylPolynomial":
        out: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], Fraction] = {}
        n = self.nvars
        for (qa, pa), ca in self.terms.items():
            for (qb, pb), cb in other.terms.items():
                # contract p^pa against q^qb variable by variable
                ranges = [range(0, min(pa[i], qb[i]) + 1) for i in range(n)]
                for s in product(*ranges):
                    coeff = ca * cb
                    for i in range(n):
                        if s[i]:
                            coeff *= math.comb(pa[i], s[i]) * math.comb(qb[i], s[i]) * math.factorial(s[i])
                    qk = tuple(qa[i] + qb[i] - s[i] for i in range(n))
                    pk = tuple(pa[i] + pb[i] - s[i] for i in range(n))
                    key = (qk, pk)
                    out[key] = out.get(key, Fraction(0)) + coeff
        return WeylPolynomial(n, out)

    def commutator(self, other: "WeylPolynomial") -> "WeylPolynomial":
        return self * other - other * self

    def proportional_to(self, other: "WeylPolynomial") -> Optional[Fraction]:
        """Return t with self == t*other, or None."""
        if other.is_zero():
            return Fraction(0) if self.is_zero() else None
        if self.is_zero():
            return Fraction(0)
        key, c = next(iter(other.terms.items()))
        if key not in self.terms:
            return None
        t = self.terms[key] / c
        probe = other.scale(t)
        return t if probe.terms == self.terms else None

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylPolynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for (qe, pe), c in sorted(self.terms.items()):
            mono = "".join(f"q{i + 1}^{e}" if e > 1 else f"q{i + 1}" for i, e in enumerate(qe) if e)
            mono += "".join(f"p{i + 1}^{e}" if e > 1 else f"p{i + 1}" for i, e in enumerate(pe) if e)
            bits.append(f"{format_rational(c)}*{mono or '1'}")
        return " + ".join(bits)


@dataclass(frozen=True)
class ActionTerm:
    coeff: Fraction
    target: Tuple[int, ...]


class WeylAuditError(RuntimeError):
    """A generator action produced a nonzero coefficient outside the index set."""


@dataclass(frozen=True)
class WeylParams:
    """Parameter vector a in Q^N with per-coordinate integrality class."""

    a: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable) -> "WeylParams":
        return cls(tuple(parse_rational(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.a)

    def coordinate_class(self, i: int) -> str:
        ai = self.a[i]
        if ai.denominator != 1:
            return NON_INT
        return NEG_INT if ai < 0 else NONNEG_INT

    def in_lattice(self, k: Sequence[int]) -> bool:
        """Membership of k in the admissible index set for these parameters."""
        if len(k) != self.n:
            raise ValueError("length mismatch")
        for i, ki in enumerate(k):
            cls = self.coordinate_class(i)
            if cls == NEG_INT and self.a[i] + ki >= 0:
                return False
            if cls == NONNEG_INT and self.a[i] + ki < 0:
                return False
        return True


def k_member(params: WeylParams, k: Sequence[int]) -> bool:
    return params.in_lattice(k)


def weyl_act(gen: Tuple[str, int], params: WeylParams, k: Sequence[int]) -> ActionTerm:
    """Action of q_i or p_i on x(k).  gen = ("q"|"p", i) with i zero-based."""
    if not params.in_lattice(k):
        raise ValueError(f"index {k} not admissible for parameters {params.a}")
    kind, i = gen
    ai = params.a[i]
    neg = params.coordinate_class(i) == NEG_INT
    k = tuple(k)
    if kind == "q":
        target = k[:i] + (k[i] + 1,) + k[i + 1:]
        coeff = (ai + k[i] + 1) if neg else Fraction(1)
    elif kind == "p":
        target = k[:i] + (k[i] - 1,) + k[i + 1:]
        coeff = Fraction(1) if neg else (ai + k[i])
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    coeff = Fraction(coeff)
    if coeff != 0 and not params.in_lattice(target):
        raise WeylAuditError(f"{kind}_{i + 1} maps {k} outside the index set with coefficient {coeff}")
    return ActionTerm(coeff, target)


def act_monomial(params: WeylParams, qexp: Sequence[int], pexp: Sequence[int],
                 k: Sequence[int]) -> ActionTerm:
    """Action of the normal-ordered monomial q^qexp p^pexp on x(k)."""
    coeff = Fraction(1)
    cur = tuple(k)
    for i, e in enumerate(pexp):
        for _ in range(e):
            t = weyl_act(("p", i), params, cur)
            coeff *= t.coeff
            if coeff == 0:
                return ActionTerm(Fraction(0), cur)
            cur = t.target
    for i, e in enumerate(qexp):
        for _ in range(e):
            t = weyl_act(("q", i), params, cur)
            coeff *= t.coeff
            if coeff == 0:
                return ActionTerm(Fraction(0), cur)
            cur = t.target
    return ActionTerm(coeff, cur)


def act_polynomial(params: WeylParams, poly: WeylPolynomial,
                   k: Sequence[int]) -> Dict[Tuple[int, ...], Fraction]:
    """Action of a normal-ordered polynomial on x(k) as {target: coefficient}."""
    out: Dict[Tuple[int, ...], Fraction] = {}
    for (qe, pe), c in poly.terms.items():
        t = act_monomial(params, qe, pe, k)
        if t.coeff != 0:
            tot = out.get(t.target, Fraction(0)) + c * t.coeff
            if tot:
                out[t.target] = tot
            else:
                out.pop(t.target, None)
    return out


def lattice_window(params: WeylParams, radius: int) -> List[Tuple[int, ...]]:
    """All admissible k with |k_i| <= radius."""
    ranges = []
    for i in range(params.n):
        lo, hi = -radius, radius
        if params.coordinate_class(i) == NEG_INT:
            hi = min(hi, -int(params.a[i]) - 1)
        elif params.coordinate_class(i) == NONNEG_INT:
            lo = max(lo, -int(params.a[i]))
        ranges.append(range(lo, hi + 1))
    return [k for k in product(*ranges) if params.in_lattice(k)]


def check_weyl_relations(params: WeylParams, radius: int) -> List[str]:
    """Exhaustively verify the defining relations on the window; returns violations."""
    violations: List[str] = []
    window = lattice_window(params, radius)
    n = params.n

    def apply2(g1, g2, k):
        t = weyl_act(g2, params, k)
        if t.coeff == 0:
            return {}
        t2 = weyl_act(g1, params, t.target)
        if t2.coeff == 0:
            return {}
        return {t2.target: t.coeff * t2.coeff}

    def comm(g1, g2, k):
        d1 = apply2(g1, g2, k)
        d2 = apply2(g2, g1, k)
        out = dict(d1)
        for key, c in d2.items():
            out[key] = out.get(key, Fraction(0)) - c
        return {key: c for key, c in out.items() if c != 0}

    for k in window:
        for i in range(n):
            for j in range(n):
                if comm(("q", i), ("q", j), k):
                    violations.append(f"[q{i + 1},q{j + 1}] != 0 at {k}")
                if comm(("p", i), ("p", j), k):
                    violations.append(f"[p{i + 1},p{j + 1}] != 0 at {k}")
                got = comm(("p", i), ("q", j), k)
                want = {tuple(k): Fraction(1)} if i == j else {}
                if got != want:
                    violations.append(f"[p{i + 1},q{j + 1}] wrong at {k}: {got}")
    return violations


def transitivity_probe(params: WeylParams, radius: int) -> bool:
    """Strong connectivity of the window under nonzero generator moves.

    Edges k -> target for every q_i/p_i action with nonzero coefficient whose
    target stays inside the window.
    """
    window = lattice_window(params, radius)
    if not window:
        return True
    index = {k: i for i, k in enumerate(window)}
    succ: List[List[int]] = [[] for _ in window]
    for k in window:
        for i in range(params.n):
            for kind in ("q", "p"):
                t = weyl_act((kind, i), params, k)
                if t.coeff != 0 and t.target in index:
                    succ[index[k]].append(index[t.target])

    def reach(start: int, edges: List[List[int]]) -> set:
        seen = {start}
        stack = [start]
        while stack:
            for nxt in edges[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return seen

    pred: List[List[int]] = [[] for _ in window]
    for u, outs in enumerate(succ):
        for v in outs:
            pred[v].append(u)
    full = set(range(len(window)))
    return reach(0, succ) == full and reach(0, pred) == full
