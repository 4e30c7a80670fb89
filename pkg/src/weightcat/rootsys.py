"""Root systems of the simple Lie algebras and concrete Chevalley-type bases.

Roots are stored as integer coordinate vectors over the simple basis
e_1..e_n (Bourbaki numbering).  The full root set is generated from the
Cartan matrix by the root-string construction, so no root table is ever
hard-coded.

For types A and C the root vectors are realized as concrete elements of a
Weyl algebra (type A through the map sending the elementary matrix E_ij to
q_i p_j, type C through the quadratic elements q_i q_j, q_i p_j, p_i p_j).
Brackets, structure constants and coroot decompositions are computed from
these realizations, never tabulated.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from . import linalg
from .weylmod import WeylPolynomial

Root = Tuple[int, ...]

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    # rank one is admitted in type C so that a single long simple root can
    # carry its own quadratic realization when a block is restricted
    "C": (1, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class RealizationUnavailableError(ValueError):
    """No concrete bracket realization exists for this Cartan type."""


@dataclass(frozen=True, order=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _RANK_BOUNDS:
            raise ValueError(f"unknown family {self.family!r}")
        lo, hi = _RANK_BOUNDS[self.family]
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"rank {self.rank} out of range for family {self.family}")

    @classmethod
    def parse(cls, s: str) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", s)
        if not m:
            raise ValueError(f"cannot parse Cartan type from {s!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(ct: CartanType) -> Tuple[Tuple[int, ...], ...]:
    """Cartan matrix a[i][j] = <alpha_i, alpha_j^vee> in Bourbaki numbering."""
    n = ct.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def join(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    fam = ct.family
    if fam in ("A", "B", "C", "F"):
        for i in range(n - 1):
            join(i, i + 1)
        if fam == "B":
            a[n - 2][n - 1] = -2  # alpha_{n-1} long, alpha_n short
        elif fam == "C" and n >= 2:
            a[n - 1][n - 2] = -2  # alpha_n long
        elif fam == "F":
            a[1][2] = -2  # alpha_2 long, alpha_3 short
    elif fam == "D":
        for i in range(n - 2):
            join(i, i + 1)
        join(n - 3, n - 1)
    elif fam == "E":
        # chain 1-3-4-5-6(-7)(-8) plus the branch 2-4
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for u, v in zip(chain, chain[1:]):
            join(u, v)
        join(1, 3)
    elif fam == "G":
        a[0][1] = -1
        a[1][0] = -3
    return tuple(tuple(row) for row in a)


def _expected_root_count(ct: CartanType) -> int:
    n = ct.rank
    if ct.family == "A":
        return n * (n + 1)
    if ct.family in ("B", "C"):
        return 2 * n * n
    if ct.family == "D":
        return 2 * n * (n - 1)
    if ct.family == "E":
        return {6: 72, 7: 126, 8: 240}[n]
    return 48 if ct.family == "F" else 12


def _add(x: Root, y: Root) -> Root:
    return tuple(a + b for a, b in zip(x, y))


def _sub(x: Root, y: Root) -> Root:
    return tuple(a - b for a, b in zip(x, y))


def _neg(x: Root) -> Root:
    return tuple(-a for a in x)


class RootSystem:
    """Roots, simple basis, and pairing data for one Cartan type."""

    def __init__(self, ct: CartanType):
        self.cartan_type = ct
        self.rank = ct.rank
        self.cartan = cartan_matrix(ct)
        self.simple: List[Root] = [tuple(1 if j == i else 0 for j in range(ct.rank))
                                   for i in range(ct.rank)]
        self.positive: List[Root] = self._generate_positive()
        self.positive_set: FrozenSet[Root] = frozenset(self.positive)
        self.roots: FrozenSet[Root] = frozenset(self.positive) | frozenset(map(_neg, self.positive))
        if len(self.roots) != _expected_root_count(ct):
            raise AssertionError(f"root generation for {ct} produced {len(self.roots)} roots")
        self._realization: Optional[Realization] = None

    def _generate_positive(self) -> List[Root]:
        roots: Set[Root] = set(self.simple)
        layer = list(self.simple)
        while layer:
            nxt: Set[Root] = set()
            for beta in layer:
                for i, alpha in enumerate(self.simple):
                    # length of the alpha_i-string below beta
                    p = 0
                    cur = _sub(beta, alpha)
                    while cur in roots:
                        p += 1
                        cur = _sub(cur, alpha)
                    q = p - self.pairing(beta, i)
                    if q > 0:
                        cand = _add(beta, alpha)
                        if cand not in roots:
                            nxt.add(cand)
            roots |= nxt
            layer = list(nxt)
        return sorted(roots, key=lambda r: (sum(r), r))

    def pairing(self, root: Root, i: int) -> int:
        """Value of the root on the i-th simple coroot."""
        return sum(c * self.cartan[j][i] for j, c in enumerate(root) if c)

    def coroot_values(self, root: Root) -> Tuple[Fraction, ...]:
        return tuple(Fraction(self.pairing(root, i)) for i in range(self.rank))

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.roots

    def is_positive(self, root: Root) -> bool:
        return sum(root) > 0

    def height(self, root: Root) -> int:
        return sum(root)

    def simple_root(self, i: int) -> Root:
        """Simple root e_i, 1-based."""
        return self.simple[i - 1]

    def span_closure(self, simple_indices: Iterable[int]) -> FrozenSet[Root]:
        """All roots supported on the given simple roots (1-based indices)."""
        allowed = set(simple_indices)
        out = set()
        for r in self.roots:
            if all(c == 0 or (j + 1) in allowed for j, c in enumerate(r)):
                out.add(r)
        return frozenset(out)

    def adjacency(self) -> Dict[int, Set[int]]:
        """Dynkin-diagram adjacency on 1-based simple indices."""
        adj: Dict[int, Set[int]] = {i: set() for i in range(1, self.rank + 1)}
        for i in range(self.rank):
            for j in range(self.rank):
                if i != j and self.cartan[i][j] != 0:
                    adj[i + 1].add(j + 1)
        return adj

    def connected_components(self, simple_indices: Iterable[int]) -> List[FrozenSet[int]]:
        nodes = set(simple_indices)
        adj = self.adjacency()
        comps: List[FrozenSet[int]] = []
        seen: Set[int] = set()
        for s in sorted(nodes):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for v in adj[u] & nodes:
                    if v not in comp:
                        comp.add(v)
                        stack.append(v)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    @property
    def realization(self) -> "Realization":
        if self._realization is None:
            self._realization = Realization(self)
        return self._realization

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_type})"


def build_root_system(ct) -> RootSystem:
    if isinstance(ct, str):
        ct = CartanType.parse(ct)
    return RootSystem(ct)


# ---------------------------------------------------------------------------
# Concrete realizations (types A and C)
# ---------------------------------------------------------------------------

class Realization:
    """Weyl-algebra realization of the root vectors and coroots.

    Type A_n lives on N = n+1 generator pairs with X_{eps_i - eps_j} = q_i p_j;
    type C_n lives on N = n generator pairs with the symmetric quadratics.
    All structure constants are derived from these elements by commutators.
    """

    def __init__(self, system: RootSystem):
        fam = system.cartan_type.family
        if fam not in ("A", "C"):
            raise RealizationUnavailableError(
                f"no bracket realization for type {system.cartan_type}; only A and C are realized")
        self.system = system
        self.family = fam
        self.nvars = system.rank + 1 if fam == "A" else system.rank
        self._root_polys: Dict[Root, WeylPolynomial] = {}
        self._coroot_polys: List[WeylPolynomial] = [self._build_coroot(i) for i in range(1, system.rank + 1)]
        self._nconst: Dict[Tuple[Root, Root], Fraction] = {}
        self._cartan_coeffs: Dict[Root, Tuple[Fraction, ...]] = {}

    # -- epsilon coordinates -------------------------------------------------
    def epsilon_vector(self, root: Root) -> Tuple[int, ...]:
        n = self.system.rank
        if self.family == "A":
            v = [0] * (n + 1)
            for t, c in enumerate(root):
                v[t] += c
                v[t + 1] -= c
        else:
            v = [0] * n
            for t, c in enumerate(root):
                if t < n - 1:
                    v[t] += c
                    v[t + 1] -= c
                else:
                    v[t] += 2 * c
        return tuple(v)

    # -- realized elements ----------------------------------------------------
    def root_vector(self, root: Root) -> WeylPolynomial:
        root = tuple(root)
        if root in self._root_polys:
            return self._root_polys[root]
        if root not in self.system.roots:
            raise ValueError(f"{root} is not a root of {self.system.cartan_type}")
        eps = self.epsilon_vector(root)
        N = self.nvars
        pos = [i for i, v in enumerate(eps) if v > 0]
        neg = [i for i, v in enumerate(eps) if v < 0]
        qexp = [0] * N
        pexp = [0] * N
        coeff = Fraction(1)
        if pos and neg:  # eps_i - eps_j
            qexp[pos[0]] = 1
            pexp[neg[0]] = 1
        elif len(pos) == 2:  # eps_i + eps_j
            qexp[pos[0]] = 1
            qexp[pos[1]] = 1
        elif len(pos) == 1:  # 2 eps_i
            qexp[pos[0]] = 2
            coeff = Fraction(1, 2)
        elif len(neg) == 2:  # -(eps_i + eps_j)
            pexp[neg[0]] = 1
            pexp[neg[1]] = 1
            coeff = Fraction(-1)
        else:  # -2 eps_i
            pexp[neg[0]] = 2
            coeff = Fraction(-1, 2)
        poly = WeylPolynomial.monomial(N, qexp, pexp, coeff)
        self._root_polys[root] = poly
        return poly

    def _build_coroot(self, i: int) -> WeylPolynomial:
        N = self.nvars
        n = self.system.rank

        def qp(t):
            qe = [0] * N
            pe = [0] * N
            qe[t] = 1
            pe[t] = 1
            return WeylPolynomial.monomial(N, qe, pe)

        if self.family == "A" or i < n:
            return qp(i - 1) - qp(i)
        return qp(n - 1) + WeylPolynomial.constant(N, Fraction(1, 2))

    def coroot(self, i: int) -> WeylPolynomial:
        """Coroot of the simple root e_i (1-based)."""
        return self._coroot_polys[i - 1]

    def cartan_element(self, coeffs: Sequence[Fraction]) -> WeylPolynomial:
        out = WeylPolynomial(self.nvars)
        for i, c in enumerate(coeffs):
            if c:
                out = out + self.coroot(i + 1).scale(c)
        return out

    def bracket(self, x: WeylPolynomial, y: WeylPolynomial) -> WeylPolynomial:
        return x.commutator(y)

    # -- structure constants ----------------------------------------------------
    def structure_constant(self, mu: Root, nu: Root) -> Fraction:
        """N with [X_mu, X_nu] = N * X_{mu+nu}; zero when mu+nu is not a root."""
        key = (tuple(mu), tuple(nu))
        if key in self._nconst:
            return self._nconst[key]
        s = _add(mu, nu)
        br = self.bracket(self.root_vector(mu), self.root_vector(nu))
        if s in self.system.roots:
            t = br.proportional_to(self.root_vector(s))
            if t is None:
                raise AssertionError(f"bracket of {mu},{nu} not proportional to X_{s}")
            val = t
        else:
            if not br.is_zero() and any(s):
                raise AssertionError(f"bracket of {mu},{nu} nonzero but {s} is not a root")
            val = Fraction(0)
        self._nconst[key] = val
        return val

    def cartan_coefficients(self, nu: Root) -> Tuple[Fraction, ...]:
        """Coefficients c with [X_nu, X_{-nu}] = sum_i c_i H_{e_i}."""
        nu = tuple(nu)
        if nu in self._cartan_coeffs:
            return self._cartan_coeffs[nu]
        br = self.bracket(self.root_vector(nu), self.root_vector(_neg(nu)))
        keys = sorted({k for h in self._coroot_polys for k in h.terms} | set(br.terms))
        mat = [[self._coroot_polys[j].terms.get(key, Fraction(0)) for j in range(self.system.rank)]
               for key in keys]
        rhs = [br.terms.get(key, Fraction(0)) for key in keys]
        sol = linalg.solve(mat, rhs)
        if sol is None:
            raise AssertionError(f"[X_{nu}, X_{-nu}] is not in the coroot span")
        coeffs = tuple(sol)
        self._cartan_coeffs[nu] = coeffs
        return coeffs


def bracket(system: RootSystem, x: WeylPolynomial, y: WeylPolynomial) -> WeylPolynomial:
    """Bracket of two realized elements (types A and C only)."""
    return system.realization.bracket(x, y)


# ---------------------------------------------------------------------------
# Root subsets and their predicates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootSubset:
    system: RootSystem
    members: FrozenSet[Root]

    @classmethod
    def of(cls, system: RootSystem, roots: Iterable[Sequence[int]]) -> "RootSubset":
        mem = frozenset(tuple(r) for r in roots)
        bad = mem - system.roots
        if bad:
            raise ValueError(f"not roots of {system.cartan_type}: {sorted(bad)}")
        return cls(system, mem)

    @classmethod
    def generated_by_simples(cls, system: RootSystem, simple_indices: Iterable[int]) -> "RootSubset":
        return cls(system, system.span_closure(simple_indices))

    def lattice_basis(self) -> List[List[int]]:
        return linalg.integer_row_reduce([list(r) for r in sorted(self.members)])

    def lattice_rank(self) -> int:
        return len(self.lattice_basis())


@dataclass(frozen=True)
class SubsetFlags:
    symmetric: bool
    closed: bool
    parabolic: bool
    levi: bool
    levi_part: FrozenSet[Root]
    unipotent_part: FrozenSet[Root]


def classify_subset(subset: RootSubset) -> SubsetFlags:
    system, S = subset.system, subset.members
    neg = frozenset(_neg(r) for r in S)
    symmetric = S == neg
    closed = True
    for x in S:
        for y in S:
            s = _add(x, y)
            if s in system.roots and s not in S:
                closed = False
                break
        if not closed:
            break
    parabolic = closed and (S | neg) == system.roots
    levi = closed and symmetric
    levi_part = S & neg
    return SubsetFlags(symmetric, closed, parabolic, levi, levi_part, S - levi_part)


def lattice_disjoint(S: RootSubset, T: RootSubset) -> bool:
    """True iff the lattices generated by S and T meet only in 0."""
    if S.system is not T.system and S.system.cartan_type != T.system.cartan_type:
        raise ValueError("subsets of different root systems")
    rows_s = [list(r) for r in sorted(S.members)]
    rows_t = [list(r) for r in sorted(T.members)]
    return linalg.lattice_rank(rows_s) + linalg.lattice_rank(rows_t) == linalg.lattice_rank(rows_s + rows_t)


def levi_decomposition(system: RootSystem, theta: Iterable[int]):
    """Split the root set for the standard parabolic attached to theta (1-based).

    Returns (levi_roots, n_plus, n_minus): the roots of the Levi factor and
    of the positive/negative nilradicals.
    """
    theta = frozenset(theta)
    span = system.span_closure(theta)
    n_plus = frozenset(r for r in system.positive_set if r not in span)
    return span, n_plus, frozenset(_neg(r) for r in n_plus)


def center_basis(system: RootSystem, block: Iterable[int]) -> List[Tuple[Fraction, ...]]:
    """Rational basis of {H in h : alpha(H) = 0 for all simple alpha in block}.

    Each vector gives coefficients over the simple coroots H_{e_1}..H_{e_n};
    together with h itself this is the center of the Levi subalgebra on the
    block.  Vectors are scaled to primitive integer form.
    """
    block = sorted(set(block))
    n = system.rank
    rows = [[Fraction(system.cartan[b - 1][i]) for i in range(n)] for b in block]
    basis = linalg.nullspace(rows, n)
    out = []
    for v in basis:
        den = 1
        for x in v:
            den = den * x.denominator // __import__("math").gcd(den, x.denominator)
        scaled = [x * den for x in v]
        out.append(tuple(scaled))
    return out


def validate_category_data(system: RootSystem, P: RootSubset, S: RootSubset,
                           T: RootSubset, B: Iterable[Sequence[int]]) -> Dict[str, bool]:
    """Predicate bundle for a (parabolic, Levi, Levi, basis) quadruple.

    Checks: S and T are Levi subsets, their lattices are independent, P is a
    parabolic subset containing S and T, and B is a basis of T (independent,
    with every member of T a signed nonnegative integer combination).
    """
    flags_s = classify_subset(S)
    flags_t = classify_subset(T)
    flags_p = classify_subset(P)
    basis = [tuple(b) for b in B]
    basis_ok = (set(basis) <= T.members
                and linalg.lattice_rank([list(b) for b in basis]) == len(basis)
                and len(basis) == T.lattice_rank())
    if basis_ok:
        mat = [[Fraction(basis[j][i]) for j in range(len(basis))] for i in range(system.rank)]
        for t in T.members:
            coeffs = linalg.solve(mat, list(t))
            if coeffs is None:
                basis_ok = False
                break
            resid = [sum(coeffs[j] * mat[i][j] for j in range(len(basis))) for i in range(system.rank)]
            if any(r != Fraction(x) for r, x in zip(resid, t)):
                basis_ok = False
                break
            if any(c.denominator != 1 for c in coeffs):
                basis_ok = False
                break
            signs = {1 if c > 0 else -1 for c in coeffs if c != 0}
            if len(signs) > 1:
                basis_ok = False
                break
    return {
        "S_levi": flags_s.levi,
        "T_levi": flags_t.levi,
        "lattices_disjoint": lattice_disjoint(S, T),
        "P_parabolic": flags_p.parabolic,
        "P_contains_S_and_T": (S.members | T.members) <= P.members,
        "B_basis_of_T": basis_ok,
    }
