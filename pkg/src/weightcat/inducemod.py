"""Truncated parabolically induced modules and their simple quotients.

Given a Levi module C on the block Phi\\theta, the induced module is spanned
by PBW monomials in the negative nilradical roots tensored with C basis
vectors, truncated at a fixed monomial depth.  The maximal submodule is cut
out weight space by weight space as the joint kernel of the "project to
1 (x) C after acting by a positive nilradical monomial" functionals; this is
exact linear algebra over Q, and because positive actions never raise the
monomial depth the computed kernel is the true kernel intersected with the
truncation.

The module exposes projection to the simple quotient with a canonical
reduced-echelon representative, proportionality extraction, central
character evaluation, zero-weight monomial comparison between two modules,
and the lemma-style probe that detects when no induced module can satisfy
the highest-weight restriction condition.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from . import linalg
from .degonemod import DegreeOneModule, build_M, build_N
from .rootsys import Root, RootSystem, center_basis

Index = Tuple[int, ...]
Monomial = Tuple[Root, ...]          # negative nilradical roots, sorted
VectorKey = Tuple[Monomial, Index]
InducedVector = Dict[VectorKey, Fraction]


class DepthOverflowError(RuntimeError):
    """A product left the truncation depth of the induced module."""


class NonScalarActionError(RuntimeError):
    """An operator expected to act by a scalar did not."""


def _neg(r: Root) -> Root:
    return tuple(-x for x in r)


def _addr(x: Root, y: Root) -> Root:
    return tuple(a + b for a, b in zip(x, y))


def vec_add(acc: InducedVector, key: VectorKey, c: Fraction) -> None:
    tot = acc.get(key, Fraction(0)) + c
    if tot:
        acc[key] = tot
    else:
        acc.pop(key, None)


def vec_scale(v: InducedVector, f: Fraction) -> InducedVector:
    f = Fraction(f)
    return {k: f * c for k, c in v.items()} if f else {}


def vec_combine(a: InducedVector, b: InducedVector, f: Fraction = Fraction(1)) -> InducedVector:
    out = dict(a)
    for k, c in b.items():
        vec_add(out, k, f * c)
    return out


class LeviModule:
    """A degree-one module over the Levi subalgebra of a set of simple roots.

    The block may have several connected components; each carries an inner
    type A/C module, and the module is their tensor product (indices are
    concatenated).  Block coroot values come from the inner modules, the
    remaining coroot values at the base vector are the central character
    data.
    """

    def __init__(self, system: RootSystem, components: Sequence[Tuple[Sequence[int], DegreeOneModule]],
                 central: Dict[int, Fraction]):
        self.system = system
        self.components: List[Tuple[Tuple[int, ...], DegreeOneModule]] = \
            [(tuple(sorted(pos)), inner) for pos, inner in components]
        self.block = tuple(sorted(b for pos, _ in self.components for b in pos))
        if len(self.block) != len(set(self.block)):
            raise ValueError("overlapping block components")
        for pos, inner in self.components:
            if len(pos) != inner.system.rank:
                raise ValueError("component size does not match its inner module rank")
        missing = [i for i in range(1, system.rank + 1)
                   if i not in self.block and i not in central]
        if missing:
            raise ValueError(f"central character values missing for coroots {missing}")
        self._offsets: List[int] = []
        off = 0
        for pos, inner in self.components:
            self._offsets.append(off)
            off += inner.nvars
        self._total_vars = off
        # block simple index -> (component number, local 0-based simple position)
        self._pos_of: Dict[int, Tuple[int, int]] = {}
        for ci, (pos, inner) in enumerate(self.components):
            for u, b in enumerate(pos):
                self._pos_of[b] = (ci, u)
        lam0: List[Fraction] = []
        for i in range(1, system.rank + 1):
            if i in self._pos_of:
                ci, u = self._pos_of[i]
                inner = self.components[ci][1]
                lam0.append(inner.weight_of(inner.zero_index())[u])
            else:
                lam0.append(Fraction(central[i]))
        self.lam0 = tuple(lam0)
        self._wcache: Dict[Index, Tuple[Fraction, ...]] = {}

    # -- index slicing -----------------------------------------------------------
    def _slice(self, t: Index, ci: int) -> Index:
        lo = self._offsets[ci]
        return tuple(t[lo:lo + self.components[ci][1].nvars])

    def _replace(self, t: Index, ci: int, piece: Index) -> Index:
        lo = self._offsets[ci]
        return t[:lo] + tuple(piece) + t[lo + len(piece):]

    def zero_index(self) -> Index:
        return (0,) * self._total_vars

    def in_basis(self, t: Sequence[int]) -> bool:
        t = tuple(t)
        if len(t) != self._total_vars:
            return False
        return all(inner.in_basis(self._slice(t, ci))
                   for ci, (_, inner) in enumerate(self.components))

    # -- action ------------------------------------------------------------------
    def act_root(self, root: Root, t: Index) -> Tuple[Fraction, Index]:
        support = {j + 1 for j, c in enumerate(root) if c}
        comps = {self._pos_of[b][0] for b in support}
        if len(comps) != 1:
            raise ValueError(f"root {root} is not supported on one block component")
        ci = next(iter(comps))
        pos, inner = self.components[ci]
        inner_coords = [0] * inner.system.rank
        for j, c in enumerate(root):
            if c:
                inner_coords[self._pos_of[j + 1][1]] = c
        coeff, piece = inner.act_root(tuple(inner_coords), self._slice(tuple(t), ci))
        return coeff, self._replace(tuple(t), ci, piece)

    # -- weights ----------------------------------------------------------------
    def _displacement(self, t: Index) -> List[Fraction]:
        """Root-lattice displacement of x(t) from the base vector, over Phi."""
        coords = [Fraction(0)] * self.system.rank
        for ci, (pos, inner) in enumerate(self.components):
            k = list(self._slice(t, ci))
            m = len(k)
            partial = 0
            for u in range(m - 1):
                partial += k[u]
                coords[pos[u] - 1] = Fraction(partial)
            if inner.kind == "M":
                coords[pos[m - 1] - 1] = Fraction(sum(k), 2)
        return coords

    def weight_of(self, t: Index) -> Tuple[Fraction, ...]:
        t = tuple(t)
        hit = self._wcache.get(t)
        if hit is not None:
            return hit
        disp = self._displacement(t)
        vals = []
        for i in range(1, self.system.rank + 1):
            shift = sum(d * self.system.cartan[j][i - 1] for j, d in enumerate(disp) if d)
            vals.append(self.lam0[i - 1] + shift)
        w = tuple(vals)
        self._wcache[t] = w
        return w

    def index_of_weight(self, mu: Sequence[Fraction]) -> Optional[Index]:
        pieces: List[Index] = []
        for pos, inner in self.components:
            inner_mu = tuple(Fraction(mu[b - 1]) for b in pos)
            piece = inner.index_of_weight(inner_mu)
            if piece is None:
                return None
            pieces.append(piece)
        t = tuple(x for piece in pieces for x in piece)
        return t if self.weight_of(t) == tuple(Fraction(x) for x in mu) else None


def levi_module(system: RootSystem, block: Sequence[int], inner: DegreeOneModule,
                central: Optional[Dict[int, Fraction]] = None) -> LeviModule:
    """Levi module on one connected block."""
    return LeviModule(system, [(tuple(block), inner)],
                      {k: Fraction(v) for k, v in (central or {}).items()})


def levi_module_product(system: RootSystem,
                        components: Sequence[Tuple[Sequence[int], DegreeOneModule]],
                        central: Optional[Dict[int, Fraction]] = None) -> LeviModule:
    """Levi module on several disjoint block components (tensor product)."""
    return LeviModule(system, list(components),
                      {k: Fraction(v) for k, v in (central or {}).items()})


def restrict_family(module: DegreeOneModule) -> LeviModule:
    """Levi restriction of a degree-one module to its cuspidal block.

    The inner module is the degree-one module of the block's own type built
    from the middle parameters; the central data is read off the weight of
    the base highest-weight vector.
    """
    block = module.cuspidal_block()
    if not block:
        raise ValueError("module has an empty cuspidal block")
    if module.kind == "N":
        j, m = module.spec.minus_ones, module.spec.middle_end
        inner = build_N(module.spec.a[j:m])
    else:
        l = module.spec.minus_ones
        inner = build_M(module.spec.a[l:])
    w0 = module.weight_of(module.zero_index())
    central = {i: w0[i - 1] for i in range(1, module.system.rank + 1) if i not in set(block)}
    return levi_module(module.system, block, inner, central)


# ---------------------------------------------------------------------------
# Truncated induced module
# ---------------------------------------------------------------------------

class TruncatedVerma:
    def __init__(self, C: LeviModule, depth: int):
        if depth < 1:
            raise ValueError("depth must be at least 1")
        self.C = C
        self.depth = depth
        self.system = C.system
        self.real = self.system.realization
        self.levi_roots: FrozenSet[Root] = self.system.span_closure(C.block)
        self.ideal_pos: List[Root] = sorted(
            (r for r in self.system.positive_set if r not in self.levi_roots),
            key=lambda r: (sum(r), r))
        self.ideal_pos_set = frozenset(self.ideal_pos)
        self.nminus: List[Root] = [_neg(r) for r in self.ideal_pos]
        self._order = {r: i for i, r in enumerate(self.nminus)}
        self.nminus_set = frozenset(self.nminus)
        self._act_memo: Dict[Tuple[Root, Monomial, Index], InducedVector] = {}
        self._kernel_cache: Dict[Tuple[Tuple[Fraction, ...], int], Tuple[List, List[int], List[VectorKey]]] = {}
        self._space_cache: Dict[Tuple[Fraction, ...], List[VectorKey]] = {}
        self._monomials: Optional[List[Tuple[Monomial, Root]]] = None

    # -- constructors ------------------------------------------------------------
    def one_tensor(self, t: Optional[Index] = None, coeff: Fraction = Fraction(1)) -> InducedVector:
        t = self.C.zero_index() if t is None else tuple(t)
        return {((), t): Fraction(coeff)}

    def monomial_tensor(self, roots: Sequence[Root], t: Index,
                        coeff: Fraction = Fraction(1)) -> InducedVector:
        """w (x) x(t) for w a product of negative nilradical root vectors.

        The factors are multiplied in the given left-to-right order.
        """
        vec = self.one_tensor(t, coeff)
        for root in reversed([tuple(r) for r in roots]):
            vec = self.act_root(root, vec)
        return vec

    # -- weights -----------------------------------------------------------------
    def root_weight(self, root: Root) -> Tuple[Fraction, ...]:
        return self.system.coroot_values(root)

    def weight_of_key(self, key: VectorKey) -> Tuple[Fraction, ...]:
        mono, t = key
        w = list(self.C.weight_of(t))
        for r in mono:
            for i, v in enumerate(self.root_weight(r)):
                w[i] += v
        return tuple(w)

    def weight_of(self, vec: InducedVector) -> Tuple[Fraction, ...]:
        weights = {self.weight_of_key(k) for k in vec}
        if len(weights) != 1:
            raise ValueError(f"vector is not weight-homogeneous: {weights}")
        return next(iter(weights))

    # -- action ------------------------------------------------------------------
    def act_root(self, root: Root, vec: InducedVector) -> InducedVector:
        root = tuple(root)
        out: InducedVector = {}
        for (mono, t), c in vec.items():
            for key, c2 in self._act_basis(root, mono, t).items():
                vec_add(out, key, c * c2)
        return out

    def act_coroot_combo(self, coeffs: Sequence[Fraction], vec: InducedVector) -> InducedVector:
        out: InducedVector = {}
        for key, c in vec.items():
            w = self.weight_of_key(key)
            val = sum((Fraction(a) * b for a, b in zip(coeffs, w)), Fraction(0))
            if val:
                vec_add(out, key, c * val)
        return out

    def act_word(self, word: Sequence, vec: InducedVector) -> InducedVector:
        """Apply a product of root vectors / coroot combinations, rightmost first.

        Entries are either root tuples or ("H", coeff-tuple).
        """
        for entry in reversed(list(word)):
            if isinstance(entry, tuple) and entry and entry[0] == "H":
                vec = self.act_coroot_combo(entry[1], vec)
            else:
                vec = self.act_root(tuple(entry), vec)
            if not vec:
                return {}
        return vec

    def _act_basis(self, root: Root, mono: Monomial, t: Index) -> InducedVector:
        key = (root, mono, t)
        hit = self._act_memo.get(key)
        if hit is not None:
            return hit
        out: InducedVector = {}
        if not mono:
            if root in self.levi_roots:
                coeff, t2 = self.C.act_root(root, t)
                if coeff:
                    out[((), t2)] = coeff
            elif root in self.nminus_set:
                out[((root,), t)] = Fraction(1)
            # positive nilradical roots annihilate 1 (x) C
        else:
            gamma = mono[0]
            if root in self.nminus_set and self._order[root] <= self._order[gamma]:
                if len(mono) + 1 > self.depth:
                    raise DepthOverflowError(
                        f"monomial depth {len(mono) + 1} exceeds truncation {self.depth}")
                out[((root,) + mono, t)] = Fraction(1)
            else:
                rest = mono[1:]
                # X_root X_gamma = X_gamma X_root + [X_root, X_gamma]
                for key2, c2 in self._act_basis(root, rest, t).items():
                    for key3, c3 in self._act_basis(gamma, key2[0], key2[1]).items():
                        vec_add(out, key3, c2 * c3)
                s = _addr(root, gamma)
                if s in self.system.roots:
                    n = self.real.structure_constant(root, gamma)
                    if n:
                        for key2, c2 in self._act_basis(s, rest, t).items():
                            vec_add(out, key2, n * c2)
                elif not any(s):
                    coeffs = self.real.cartan_coefficients(root)
                    w = self.weight_of_key((rest, t))
                    val = sum((a * b for a, b in zip(coeffs, w)), Fraction(0))
                    if val:
                        vec_add(out, (rest, t), val)
        self._act_memo[key] = out
        return out

    # -- weight spaces and kernels -------------------------------------------------
    def _all_monomials(self) -> List[Tuple[Monomial, Root]]:
        """Every PBW monomial up to the truncation depth with its total root."""
        if self._monomials is not None:
            return self._monomials
        out: List[Tuple[Monomial, Root]] = []
        zero = (0,) * self.system.rank

        def rec(start: int, mono: Monomial, total: Root):
            out.append((mono, total))
            if len(mono) == self.depth:
                return
            for i in range(start, len(self.nminus)):
                r = self.nminus[i]
                rec(i, mono + (r,), _addr(total, r))

        rec(0, (), zero)
        self._monomials = out
        return out

    def weight_space(self, mu: Sequence[Fraction]) -> List[VectorKey]:
        mu = tuple(Fraction(x) for x in mu)
        hit = self._space_cache.get(mu)
        if hit is not None:
            return hit
        basis: List[VectorKey] = []
        for mono, total in self._all_monomials():
            resid = tuple(m - v for m, v in zip(mu, self.system.coroot_values(total))) \
                if any(total) else mu
            t = self.C.index_of_weight(resid)
            if t is not None:
                basis.append((mono, t))
        basis.sort(key=lambda key: (len(key[0]), key[0], key[1]))
        self._space_cache[mu] = basis
        return basis

    def _levi_shift_sums(self, max_terms: int) -> Set[Root]:
        sums: Set[Root] = {(0,) * self.system.rank}
        frontier = set(sums)
        for _ in range(max_terms):
            new = set()
            for s in frontier:
                for r in self.levi_roots:
                    new.add(_addr(s, r))
            frontier = new - sums
            sums |= new
        return sums

    def _pos_monomials_of_weight(self, nu: Root) -> List[Monomial]:
        """PBW monomials over the positive nilradical with total root nu."""
        out: List[Monomial] = []

        def rec(start: int, remaining: Root, acc: Monomial):
            if not any(remaining):
                out.append(acc)
                return
            if any(x < 0 for x in remaining):
                return
            for i in range(start, len(self.ideal_pos)):
                r = self.ideal_pos[i]
                if all(x <= y for x, y in zip(r, remaining)):
                    rec(i, tuple(y - x for x, y in zip(r, remaining)), acc + (r,))

        rec(0, tuple(nu), ())
        return out

    def kernel_data(self, mu: Sequence[Fraction]):
        """RREF of the maximal-submodule subspace of the mu weight space.

        Returns (rref rows, pivot columns, basis keys).  The kernel is the
        set of vectors all of whose images under positive nilradical
        monomials project to zero in 1 (x) C; the relevant monomial weights
        are bounded through the weight grading.
        """
        mu = tuple(Fraction(x) for x in mu)
        basis = self.weight_space(mu)
        ck = (mu, len(basis))
        hit = self._kernel_cache.get(ck)
        if hit is not None:
            return hit
        if not basis:
            res = ([], [], basis)
            self._kernel_cache[ck] = res
            return res
        maxdepth = max(len(key[0]) for key in basis)
        # candidate monomial total roots for the functionals
        mono_roots = set()
        for key in basis:
            total = (0,) * self.system.rank
            for r in key[0]:
                total = _addr(total, r)
            mono_roots.add(total)
        shifts = self._levi_shift_sums(maxdepth)
        candidates: Set[Root] = set()
        for m in mono_roots:
            for s in shifts:
                nu = tuple(a - b for a, b in zip(s, m))
                if all(x >= 0 for x in nu):
                    candidates.add(nu)
        rows: List[List[Fraction]] = []
        for nu in sorted(candidates, key=lambda r: (sum(r), r)):
            target_mu = tuple(m + v for m, v in zip(mu, self.system.coroot_values(nu))) \
                if any(nu) else mu
            t_target = self.C.index_of_weight(target_mu)
            if t_target is None:
                continue
            for word in self._pos_monomials_of_weight(nu):
                row = [Fraction(0)] * len(basis)
                nonzero = False
                for j, key in enumerate(basis):
                    image = self._act_basis_word(word, key)
                    c = image.get(((), t_target), Fraction(0))
                    if c:
                        row[j] = c
                        nonzero = True
                if nonzero:
                    rows.append(row)
        null = linalg.nullspace(rows, len(basis))
        rref_rows, pivots = linalg.rref(null)
        res = (rref_rows, pivots, basis)
        self._kernel_cache[ck] = res
        return res

    def _act_basis_word(self, word: Monomial, key: VectorKey) -> InducedVector:
        vec: InducedVector = {key: Fraction(1)}
        for root in reversed(word):
            nxt: InducedVector = {}
            for (mono, t), c in vec.items():
                for k2, c2 in self._act_basis(root, mono, t).items():
                    vec_add(nxt, k2, c * c2)
            vec = nxt
            if not vec:
                break
        return vec

    # -- quotient ----------------------------------------------------------------
    def project(self, vec: InducedVector) -> InducedVector:
        """Canonical representative of vec in the simple quotient."""
        if not vec:
            return {}
        mu = self.weight_of(vec)
        rref_rows, pivots, basis = self.kernel_data(mu)
        coords = [vec.get(key, Fraction(0)) for key in basis]
        red = linalg.reduce_mod_rowspace(coords, rref_rows, pivots)
        return {key: c for key, c in zip(basis, red) if c}

    def is_zero_in_quotient(self, vec: InducedVector) -> bool:
        return not self.project(vec)

    def proportionality(self, v: InducedVector, w: InducedVector) -> Optional[Fraction]:
        """t with v = t*w in the simple quotient, or None."""
        pw = self.project(w)
        if not pw:
            raise ValueError("denominator vector is zero in the quotient")
        pv = self.project(v)
        if not pv:
            return Fraction(0)
        if self.weight_of(pv) != self.weight_of(pw):
            return None
        key, c = next(iter(sorted(pw.items())))
        t = pv.get(key, Fraction(0)) / c
        return t if vec_combine(pv, pw, -t) == {} else None


def induce(C: LeviModule, depth: int) -> TruncatedVerma:
    return TruncatedVerma(C, depth)


def project_L(verma: TruncatedVerma, vec: InducedVector) -> InducedVector:
    return verma.project(vec)


def proportionality(verma: TruncatedVerma, v: InducedVector, w: InducedVector) -> Optional[Fraction]:
    return verma.proportionality(v, w)


# ---------------------------------------------------------------------------
# Central characters
# ---------------------------------------------------------------------------

def central_scalars(C: LeviModule, samples: Sequence[Index]) -> Dict[Tuple[Fraction, ...], Fraction]:
    """Scalars of the center of the Levi subalgebra on the given basis vectors.

    Keys are the central elements as coefficient tuples over the simple
    coroots.  Raises if any central element fails to act by one scalar.
    """
    if not samples:
        raise ValueError("need at least one sample index")
    out: Dict[Tuple[Fraction, ...], Fraction] = {}
    for z in center_basis(C.system, C.block):
        vals = set()
        for t in samples:
            w = C.weight_of(tuple(t))
            vals.add(sum((a * b for a, b in zip(z, w)), Fraction(0)))
        if len(vals) != 1:
            raise NonScalarActionError(f"central element {z} acts non-constantly: {sorted(vals)}")
        out[z] = next(iter(vals))
    return out


# ---------------------------------------------------------------------------
# Zero-weight monomial comparison
# ---------------------------------------------------------------------------

def _zero_weight_words(system: RootSystem, max_len: int) -> List[Tuple[Root, ...]]:
    roots = sorted(system.roots, key=lambda r: (sum(r), r))
    zero = (0,) * system.rank
    out: List[Tuple[Root, ...]] = []
    maxh = max(abs(sum(r)) for r in roots)

    def rec(start: int, word: Tuple[Root, ...], total: Root):
        if word and total == zero:
            out.append(word)
        if len(word) == max_len:
            return
        room = max_len - len(word)
        if abs(sum(total)) > room * maxh:
            return
        for i in range(start, len(roots)):
            rec(i, word + (roots[i],), _addr(total, roots[i]))

    rec(0, (), zero)
    return out


@dataclass
class _Deg1Side:
    module: DegreeOneModule
    base: Index

    def weight(self):
        return self.module.weight_of(self.base)

    def scalar(self, word) -> Fraction:
        coeff = Fraction(1)
        cur = self.base
        for root in reversed(word):
            c, cur = self.module.act_root(root, cur)
            coeff *= c
            if coeff == 0:
                return Fraction(0)
        if cur != self.base:
            raise NonScalarActionError(f"word {word} did not return to the base vector")
        return coeff


@dataclass
class _QuotientSide:
    verma: TruncatedVerma
    base: InducedVector
    _pbase: InducedVector = field(default=None, repr=False)

    def __post_init__(self):
        self._pbase = self.verma.project(self.base)
        if not self._pbase:
            raise ValueError("base vector is zero in the quotient")

    def weight(self):
        return self.verma.weight_of(self._pbase)

    def scalar(self, word) -> Fraction:
        image = self.verma.act_word(list(word), self._pbase)
        if not image:
            return Fraction(0)
        t = self.verma.proportionality(image, self._pbase)
        if t is None:
            raise NonScalarActionError(f"word {word} acted non-scalarly on the quotient vector")
        return t


def side_of(handle, base) -> object:
    """Adapter: (DegreeOneModule, index) or (TruncatedVerma, vector)."""
    if isinstance(handle, DegreeOneModule):
        return _Deg1Side(handle, tuple(base))
    if isinstance(handle, TruncatedVerma):
        return _QuotientSide(handle, base)
    raise TypeError(f"unsupported handle {type(handle)!r}")


def u0_compare(handle1, v1, handle2, v2, depth: int = 4) -> bool:
    """Equality of all zero-weight monomial scalars (and weights) on two vectors."""
    s1 = side_of(handle1, v1)
    s2 = side_of(handle2, v2)
    if s1.weight() != s2.weight():
        return False
    system = handle1.system if isinstance(handle1, DegreeOneModule) else handle1.system
    for word in _zero_weight_words(system, depth):
        if s1.scalar(word) != s2.scalar(word):
            return False
    return True


# ---------------------------------------------------------------------------
# Restriction-failure probe
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ProbeCandidate:
    alpha: Root
    chain_weight: Root
    delta: Root
    witness_root: Root


@dataclass
class ProbeReport:
    restriction_impossible: bool
    witness: Optional[ProbeCandidate]
    candidates_checked: int


def _chain_exists(system: RootSystem, theta_pos: Sequence[Root], alpha: Root, rem: Root) -> bool:
    """Can rem be written as an ordered sum of theta-positive roots with all
    partial sums alpha + ... remaining roots?"""
    if not any(rem):
        return True
    for beta in theta_pos:
        if all(b <= r for b, r in zip(beta, rem)):
            nxt = _addr(alpha, beta)
            if nxt in system.roots and _chain_exists(
                    system, theta_pos, nxt, tuple(r - b for r, b in zip(rem, beta))):
                return True
    return False


def probe_restriction_failure(C: LeviModule, depth: int = 3) -> ProbeReport:
    """Replays the induced-module contradiction pattern for a Levi module.

    Searches for a negative nilradical root -delta with delta = alpha +
    (chain of theta roots) and a positive nilradical root nu = delta + mu
    whose adjoint action kills every theta-negative monomial of the chain
    weight.  For such data, membership of the projected vector
    p(X_{-delta} (x) v) in the span of the theta-lowered images of
    p(1 (x) X_{-alpha} v) is forced whenever the simple quotient satisfies
    the highest-weight restriction condition; its failure certifies that no
    such module lies in the category.
    """
    system = C.system
    verma = TruncatedVerma(C, depth)
    theta = [i for i in range(1, system.rank + 1) if i not in set(C.block)]
    theta_pos = sorted((r for r in system.span_closure(theta) if sum(r) > 0),
                       key=lambda r: (sum(r), r))
    levi_pos = sorted((r for r in verma.levi_roots if sum(r) > 0), key=lambda r: (sum(r), r))
    theta_support = [i - 1 for i in theta]

    candidates: List[ProbeCandidate] = []
    for delta in verma.ideal_pos:
        for alpha in levi_pos:
            rem = tuple(d - a for d, a in zip(delta, alpha))
            if any(x < 0 for x in rem):
                continue
            if any(rem[i] for i in range(system.rank) if i not in theta_support):
                continue
            if not any(rem):
                continue
            if not _chain_exists(system, theta_pos, alpha, rem):
                continue
            for mu in levi_pos:
                nu = _addr(delta, mu)
                if nu not in system.roots:
                    continue
                ok = True
                for gamma in theta_pos:
                    if all(g <= r for g, r in zip(gamma, rem)):
                        d = tuple(n - g for n, g in zip(nu, gamma))
                        if d in system.roots or not any(d):
                            ok = False
                            break
                if ok:
                    candidates.append(ProbeCandidate(alpha, rem, delta, nu))

    base = C.zero_index()
    for cand in candidates:
        lhs = verma.project(verma.monomial_tensor([_neg(cand.delta)], base))
        c0, t0 = C.act_root(_neg(cand.alpha), base)
        span_vectors: List[InducedVector] = []
        for word in verma._pos_monomials_of_weight(cand.chain_weight):
            neg_word = tuple(_neg(r) for r in word)
            vec = verma.act_word(list(neg_word), verma.one_tensor(t0, c0))
            pv = verma.project(vec)
            if pv:
                span_vectors.append(pv)
        keys = sorted({k for v in span_vectors for k in v} | set(lhs))
        basis_rows = [[v.get(k, Fraction(0)) for k in keys] for v in span_vectors]
        target = [lhs.get(k, Fraction(0)) for k in keys]
        if linalg.in_span(target, basis_rows) is None:
            return ProbeReport(True, cand, len(candidates))
    return ProbeReport(False, None, len(candidates))
