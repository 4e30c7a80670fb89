"""Cocycles, extensions and the linear systems that certify Ext vanishing.

A cocycle between two weight modules assigns to each root vector a
weight-graded linear map; the Cartan subalgebra is always sent to zero,
which is exactly the condition for the glued extension module to stay a
weight module.  Because both modules here have one-dimensional weight
spaces, a graded map is a single rational coefficient per basis vector,
and the cocycle identity over all pairs of root vectors becomes a sparse
exact linear system.

Two solvers are provided.  `cocycle_space` parametrises every graded
cocycle on a window and `coboundary_quotient_dim` measures the quotient by
coboundaries; `ext_solve_typeA` / `ext_solve_typeC` instead impose the
inverse-shift normal form on the distinguished cuspidal direction of a
degree-one family and reduce self-extension vanishing to a system in the
orbit labels b(k).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

from . import linalg
from .degonemod import DegreeOneModule, build_M, build_N
from .rootsys import Root
from .weylmod import parse_rational

Index = Tuple[int, ...]


class CertificationError(RuntimeError):
    """The window is too small to assemble a meaningful constraint system."""


class CocycleError(ValueError):
    """A map fails the cocycle identity."""


# ---------------------------------------------------------------------------
# Explicit graded cocycles between two degree-one modules
# ---------------------------------------------------------------------------

@dataclass
class Cocycle:
    """Weight-graded maps c(X_root): source -> target, zero on the Cartan."""

    source: DegreeOneModule
    target: DegreeOneModule
    maps: Dict[Root, Dict[Index, Tuple[Fraction, Index]]] = field(default_factory=dict)

    def value(self, root: Root, k: Index) -> Optional[Tuple[Fraction, Index]]:
        return self.maps.get(tuple(root), {}).get(tuple(k))

    def is_zero(self) -> bool:
        return all(c == 0 for m in self.maps.values() for c, _ in m.values())


def make_sl2_cocycle(b, module: DegreeOneModule, radius: int = 6) -> Cocycle:
    """Inverse-lowering cocycle on a cuspidal rank-one module.

    c(H) = c(X^-) = 0 and c(X^+) x(k) = b * (X^-)^{-1} x(k); requires the
    lowering operator to be invertible (nonzero coefficients) on the window.
    """
    b = parse_rational(b)
    system = module.system
    if system.rank != 1:
        raise ValueError("rank-one module expected")
    alpha = system.simple_root(1)
    nalpha = tuple(-x for x in alpha)
    plus: Dict[Index, Tuple[Fraction, Index]] = {}
    minus: Dict[Index, Tuple[Fraction, Index]] = {}
    for k in module.window(radius + 1):
        coeff, down = module.act_root(nalpha, k)
        if coeff == 0:
            raise ValueError(f"lowering operator vanishes at {k}: module is not cuspidal")
        # (X^-)^{-1} x(down) = x(k)/coeff
        plus[down] = (b / coeff, k)
        minus[k] = (Fraction(0), down)
    return Cocycle(module, module, {alpha: plus, nalpha: minus})


def cocycle_identity_violations(c: Cocycle, radius: int) -> List[str]:
    """Check the identity on all root pairs and window vectors where defined."""
    M, N = c.source, c.target
    system = M.system
    roots = sorted(system.roots, key=lambda r: (sum(r), r))
    window = set(M.window(radius))
    out: List[str] = []

    def cval(root, k):
        v = c.value(root, k)
        return v if v is not None else (Fraction(0), k)

    for i, mu in enumerate(roots):
        for nu in roots[i + 1:]:
            s = tuple(a + b for a, b in zip(mu, nu))
            for k in window:
                # left side: c([X_mu, X_nu]) x(k)
                lhs: Dict[Index, Fraction] = {}
                if s in system.roots:
                    n = system.realization.structure_constant(mu, nu)
                    cc, t = cval(s, k)
                    if n and cc:
                        lhs[t] = n * cc
                ok = True
                rhs: Dict[Index, Fraction] = {}

                def add(t, v):
                    tot = rhs.get(t, Fraction(0)) + v
                    if tot:
                        rhs[t] = tot
                    else:
                        rhs.pop(t, None)

                # [c(mu), X_nu] x(k)
                for (a, bb, sign) in ((mu, nu, 1), (nu, mu, -1)):
                    cm, k2 = M.act_root(bb, k)
                    if cm:
                        if k2 not in window:
                            ok = False
                            break
                        cc, t = cval(a, k2)
                        if cc:
                            add(t, sign * cm * cc)
                    cc, t = cval(a, k)
                    if cc:
                        cn, t2 = N.act_root(bb, t)
                        if cn:
                            add(t2, -sign * cc * cn)
                if not ok:
                    continue
                diff = dict(lhs)
                for t, v in rhs.items():
                    tot = diff.get(t, Fraction(0)) - v
                    if tot:
                        diff[t] = tot
                    else:
                        diff.pop(t, None)
                if diff:
                    out.append(f"pair {mu},{nu} fails at {k}: {diff}")
    return out


class ExtensionModule:
    """Module structure on target + source glued along a cocycle."""

    def __init__(self, c: Cocycle, radius: int = 4, validate: bool = True):
        if validate:
            bad = cocycle_identity_violations(c, radius)
            if bad:
                raise CocycleError(f"not a cocycle ({len(bad)} violations): {bad[0]}")
        self.cocycle = c
        self.source = c.source
        self.target = c.target
        self.system = c.source.system

    def act_root(self, root: Root, vec: Dict[Tuple[str, Index], Fraction]) -> Dict[Tuple[str, Index], Fraction]:
        out: Dict[Tuple[str, Index], Fraction] = {}

        def add(key, v):
            tot = out.get(key, Fraction(0)) + v
            if tot:
                out[key] = tot
            else:
                out.pop(key, None)

        for (side, k), coeff in vec.items():
            mod = self.target if side == "n" else self.source
            cm, k2 = mod.act_root(root, k)
            if cm:
                add((side, k2), coeff * cm)
            if side == "m":
                cv = self.cocycle.value(root, k)
                if cv and cv[0]:
                    add(("n", cv[1]), coeff * cv[0])
        return out

    def bracket_violations(self, radius: int) -> List[str]:
        system = self.system
        roots = sorted(system.roots, key=lambda r: (sum(r), r))
        win_m = set(self.source.window(radius))
        win_n = set(self.target.window(radius))
        bad = []
        for i, mu in enumerate(roots):
            for nu in roots[i + 1:]:
                s = tuple(a + b for a, b in zip(mu, nu))
                for side, win in (("m", win_m), ("n", win_n)):
                    for k in win:
                        v = {(side, k): Fraction(1)}
                        got = _msub(self.act_root(mu, self.act_root(nu, v)),
                                    self.act_root(nu, self.act_root(mu, v)))
                        want: Dict[Tuple[str, Index], Fraction] = {}
                        if s in system.roots:
                            n = system.realization.structure_constant(mu, nu)
                            want = {kk: n * cc for kk, cc in self.act_root(s, v).items()}
                        elif not any(s):
                            coeffs = system.realization.cartan_coefficients(mu)
                            mod = self.target if side == "n" else self.source
                            val = sum((a * b for a, b in zip(coeffs, mod.weight_of(k))), Fraction(0))
                            if val:
                                want = {(side, k): val}
                        if _msub(got, want):
                            bad.append(f"{side} {k} pair {mu},{nu}")
        return bad


def _msub(a: Dict, b: Dict) -> Dict:
    out = dict(a)
    for k, v in b.items():
        tot = out.get(k, Fraction(0)) - v
        if tot:
            out[k] = tot
        else:
            out.pop(k, None)
    return out


def build_extension(c: Cocycle, radius: int = 3) -> ExtensionModule:
    return ExtensionModule(c, radius=radius, validate=True)


# ---------------------------------------------------------------------------
# The full graded cocycle space on a window
# ---------------------------------------------------------------------------

@dataclass
class CocycleSpace:
    source: DegreeOneModule
    target: DegreeOneModule
    radius: int
    unknowns: List[Tuple[Root, Index]]
    targets: Dict[Tuple[Root, Index], Tuple[Index, Tuple[Fraction, ...]]]
    basis: List[List[Fraction]]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def materialize(self, coeffs: Sequence[Fraction]) -> Cocycle:
        maps: Dict[Root, Dict[Index, Tuple[Fraction, Index]]] = {}
        vec = [Fraction(0)] * len(self.unknowns)
        for b, c in zip(self.basis, coeffs):
            for i, x in enumerate(b):
                vec[i] += Fraction(c) * x
        for (root, k), val in zip(self.unknowns, vec):
            t, _ = self.targets[(root, k)]
            maps.setdefault(root, {})[k] = (val, t)
        return Cocycle(self.source, self.target, maps)

    def random_cocycle(self, rng: random.Random) -> Cocycle:
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in self.basis]
        return self.materialize(coeffs)


def cocycle_space(source: DegreeOneModule, target: DegreeOneModule, radius: int) -> CocycleSpace:
    """All weight-graded cocycles with data on the window, Cartan sent to zero."""
    system = source.system
    if target.system.cartan_type != system.cartan_type:
        raise ValueError("modules over different algebras")
    roots = sorted(system.roots, key=lambda r: (sum(r), r))
    window = source.window(radius)
    winset = set(window)
    unknowns: List[Tuple[Root, Index]] = []
    targets: Dict[Tuple[Root, Index], Tuple[Index, Tuple[Fraction, ...]]] = {}
    for root in roots:
        shift = system.coroot_values(root)
        for k in window:
            w = tuple(a + b for a, b in zip(source.weight_of(k), shift))
            t = target.index_of_weight(w)
            if t is not None:
                unknowns.append((root, k))
                targets[(root, k)] = (t, w)
    pos = {u: i for i, u in enumerate(unknowns)}
    rows: List[List[Fraction]] = []
    for i, mu in enumerate(roots):
        for nu in roots[i + 1:]:
            s = tuple(a + b for a, b in zip(mu, nu))
            nconst = system.realization.structure_constant(mu, nu) if s in system.roots else None
            for k in window:
                entries: Dict[Tuple[int, Index], Fraction] = {}
                ok = True

                def add(uid, tgt, v):
                    key = (uid, tgt)
                    tot = entries.get(key, Fraction(0)) + v
                    if tot:
                        entries[key] = tot
                    else:
                        entries.pop(key, None)

                if nconst:
                    uid = pos.get((s, k))
                    if uid is None and (s, k) in targets:
                        ok = False
                    elif uid is not None:
                        add(uid, targets[(s, k)][0], nconst)
                if ok:
                    for (a, bb, sign) in ((mu, nu, 1), (nu, mu, -1)):
                        cm, k2 = source.act_root(bb, k)
                        if cm:
                            if k2 not in winset:
                                ok = False
                                break
                            uid = pos.get((a, k2))
                            if uid is not None:
                                add(uid, targets[(a, k2)][0], -sign * cm)
                        uid = pos.get((a, k))
                        if uid is not None:
                            cn, t2 = target.act_root(bb, targets[(a, k)][0])
                            if cn:
                                add(uid, t2, sign * cn)
                if not ok:
                    continue
                per_target: Dict[Index, List[Fraction]] = {}
                for (uid, tgt), v in entries.items():
                    per_target.setdefault(tgt, [Fraction(0)] * len(unknowns))[uid] += v
                for row in per_target.values():
                    if any(row):
                        rows.append(row)
    basis = linalg.nullspace(rows, len(unknowns))
    return CocycleSpace(source, target, radius, unknowns, targets, basis)


def _phi_domain(source: DegreeOneModule, target: DegreeOneModule, radius: int):
    """Weight-matched pairs (k, t) for phi, on the window extended one root step."""
    system = source.system
    window = list(source.window(radius))
    extended: Set[Index] = set(window)
    for k in window:
        for root in system.roots:
            _, k2 = source.act_root(root, k)
            extended.add(k2)
    pairs = {}
    for k in sorted(extended):
        if not source.in_basis(k):
            continue
        t = target.index_of_weight(source.weight_of(k))
        if t is not None:
            pairs[k] = t
    return pairs


def coboundary_vector(source, target, pairs, fvals, unknowns, targets) -> List[Fraction]:
    vec = []
    for (root, k) in unknowns:
        t_target, _ = targets[(root, k)]
        val = Fraction(0)
        if k in pairs and fvals.get(k):
            cn, t2 = target.act_root(root, pairs[k])
            if cn and t2 == t_target:
                val += fvals[k] * cn
        cm, k2 = source.act_root(root, k)
        if cm and k2 in pairs and fvals.get(k2):
            val -= cm * fvals[k2]
        vec.append(val)
    return vec


def coboundary_quotient_dim(source: DegreeOneModule, target: DegreeOneModule, radius: int) -> int:
    """Dimension of window cocycles modulo window coboundaries."""
    space = cocycle_space(source, target, radius)
    pairs = _phi_domain(source, target, radius)
    order = sorted(pairs)
    dvecs = []
    for k0 in order:
        fv = {k0: Fraction(1)}
        dvecs.append(coboundary_vector(source, target, pairs, fv, space.unknowns, space.targets))
    return space.dimension - linalg.rank(dvecs)


def is_coboundary(c: Cocycle, radius: int) -> Optional[Dict[Index, Fraction]]:
    """Solve c = boundary(phi) for a weight-preserving phi; None if infeasible.

    phi lives on the window extended by one root step; equations are taken at
    every stored value of c.
    """
    source, target = c.source, c.target
    pairs = _phi_domain(source, target, radius)
    order = sorted(pairs)
    col = {k: i for i, k in enumerate(order)}
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for root, cmap in c.maps.items():
        for k, (cval, t_target) in cmap.items():
            row = [Fraction(0)] * len(order)
            if k in pairs:
                cn, t2 = target.act_root(root, pairs[k])
                if cn and t2 == t_target:
                    row[col[k]] += cn
            cm, k2 = source.act_root(root, k)
            if cm and k2 in pairs:
                row[col[k2]] -= cm
            rows.append(row)
            rhs.append(cval)
    sol = linalg.solve(rows, rhs)
    if sol is None:
        return None
    # verify exactly (solve only guarantees pivot-row consistency)
    for row, want in zip(rows, rhs):
        if sum((a * b for a, b in zip(row, sol)), Fraction(0)) != want:
            return None
    return {k: sol[col[k]] for k in order if sol[col[k]]}


# ---------------------------------------------------------------------------
# Support comparison
# ---------------------------------------------------------------------------

def support_disjoint(mod_a: DegreeOneModule, mod_b: DegreeOneModule,
                     radius: Optional[int] = None) -> bool:
    """Exact disjointness of the two weight supports.

    For modules of the same kind and block shape this is decided exactly from
    the parameter differences; otherwise it falls back to comparing window
    weights (radius required), which is window-relative evidence only.
    """
    same_shape = (mod_a.kind == mod_b.kind and mod_a.nvars == mod_b.nvars
                  and mod_a.spec.minus_ones == mod_b.spec.minus_ones)
    if same_shape:
        diffs = [b - a for a, b in zip(mod_a.spec.a, mod_b.spec.a)]
        if any(d.denominator != 1 for d in diffs):
            return True
        total = sum(diffs)
        if mod_a.kind == "N":
            return total % (mod_a.nvars) != 0
        return total % 2 != 0
    if radius is None:
        raise ValueError("window radius required for modules of different shapes")
    wa = {mod_a.weight_of(k) for k in mod_a.window(radius)}
    wb = {mod_b.weight_of(k) for k in mod_b.window(radius)}
    return not (wa & wb)


# ---------------------------------------------------------------------------
# Normal-form self-extension systems for degree-one families
# ---------------------------------------------------------------------------

@dataclass
class ConstraintSystem:
    dimension: int
    basis: List[Dict[Index, Fraction]]
    window: int
    labels: List[Index]
    status: str
    reason: str = ""

    def to_json(self) -> Dict:
        from .weylmod import format_rational
        return {
            "dimension": self.dimension,
            "window": self.window,
            "status": self.status,
            "reason": self.reason,
            "labels": [list(l) for l in self.labels],
            "basis": [{str(list(k)): format_rational(v) for k, v in b.items()} for b in self.basis],
        }


class _NormalFormAssembler:
    """Rows of the cocycle identity under the inverse-shift normal form.

    The unknowns are one coefficient per orbit label (the index coordinates
    not moved by the distinguished cuspidal root); the cocycle is zero on the
    Cartan, on the Levi complement and on the lowering direction, is the
    b-weighted inverse shift on the raising direction, and extends to every
    other root vector through bracket decompositions.
    """

    def __init__(self, module: DegreeOneModule, radius: int):
        if radius < 1:
            raise CertificationError("window radius must be at least 1 to see a boundary row")
        block = module.cuspidal_block()
        if len(block) != 1:
            raise ValueError("normal-form system needs a single cuspidal simple root")
        self.module = module
        self.system = module.system
        self.radius = radius
        self.alpha = self.system.simple_root(block[0])
        self.nalpha = tuple(-x for x in self.alpha)
        poly = self.system.realization.root_vector(self.alpha)
        ((qe, pe), _), = poly.terms.items()
        self.delta = tuple(q - p for q, p in zip(qe, pe))
        self.moved = tuple(i for i, d in enumerate(self.delta) if d)
        self._ops: Dict[Root, Callable] = {}
        self.window = module.window(radius)
        self.labelset = {self.label(k) for k in self.window}

    def label(self, k: Index) -> Index:
        return tuple(x for i, x in enumerate(k) if i not in self.moved)

    def alpha_coordinate(self, root: Root) -> int:
        idx = list(self.alpha).index(1)
        return root[idx]

    def op(self, root: Root) -> Callable:
        root = tuple(root)
        if root in self._ops:
            return self._ops[root]
        if self.alpha_coordinate(root) == 0 or root == self.nalpha:
            fn = lambda k: []
        elif root == self.alpha:
            def fn(k):
                k2 = tuple(a + d for a, d in zip(k, self.delta))
                coeff, back = self.module.act_root(self.nalpha, k2)
                if coeff == 0 or back != k:
                    raise CertificationError(f"lowering operator not invertible at {k}")
                return [({self.label(k): 1 / coeff}, k2)]
        else:
            positive = sum(root) > 0
            base = root if positive else tuple(-x for x in root)
            i = next(j for j in range(self.system.rank)
                     if self.system.is_root(tuple(
                         (base[t] - (1 if t == j else 0)) for t in range(self.system.rank))))
            e = self.system.simple_root(i + 1)
            if positive:
                sigma, tau = e, tuple(a - b for a, b in zip(root, e))
            else:
                sigma, tau = tuple(-x for x in e), tuple(a + b for a, b in zip(root, e))
            n = self.system.realization.structure_constant(sigma, tau)
            op_sig, op_tau = self.op(sigma), self.op(tau)

            def fn(k, sigma=sigma, tau=tau, n=n, op_sig=op_sig, op_tau=op_tau):
                out = []
                for (a, bb, cop, sign) in ((sigma, tau, op_sig, 1), (tau, sigma, op_tau, -1)):
                    cm, k2 = self.module.act_root(bb, k)
                    if cm:
                        for bd, t in cop(k2):
                            out.append(({l: sign * cm * v / n for l, v in bd.items()}, t))
                    for bd, t in cop(k):
                        cn, t2 = self.module.act_root(bb, t)
                        if cn:
                            out.append(({l: -sign * cn * v / n for l, v in bd.items()}, t2))
                return out
        self._ops[root] = fn
        return fn

    def assemble(self) -> Tuple[List[Dict[Index, Fraction]], List[Index], int]:
        roots = sorted(self.system.roots, key=lambda r: (sum(r), r))
        rows: List[Dict[Index, Fraction]] = []
        dropped = 0
        for i, mu in enumerate(roots):
            amu = self.alpha_coordinate(mu)
            for nu in roots[i + 1:]:
                anu = self.alpha_coordinate(nu)
                s = tuple(a + b for a, b in zip(mu, nu))
                s_is_root = s in self.system.roots
                if amu == 0 and anu == 0 and (not s_is_root or self.alpha_coordinate(s) == 0):
                    continue
                nconst = self.system.realization.structure_constant(mu, nu) if s_is_root else None
                op_mu, op_nu, op_s = self.op(mu), self.op(nu), (self.op(s) if s_is_root else None)
                for k in self.window:
                    per_target: Dict[Index, Dict[Index, Fraction]] = {}

                    def add(bd, t, scale):
                        tgt = per_target.setdefault(t, {})
                        for l, v in bd.items():
                            tot = tgt.get(l, Fraction(0)) + scale * v
                            if tot:
                                tgt[l] = tot
                            else:
                                tgt.pop(l, None)

                    if op_s is not None and nconst:
                        for bd, t in op_s(k):
                            add(bd, t, nconst)
                    for (a, bb, cop, sign) in ((mu, nu, op_mu, 1), (nu, mu, op_nu, -1)):
                        cm, k2 = self.module.act_root(bb, k)
                        if cm:
                            for bd, t in cop(k2):
                                add(bd, t, -sign * cm)
                        for bd, t in cop(k):
                            cn, t2 = self.module.act_root(bb, t)
                            if cn:
                                add(bd, t2, sign * cn)
                    for row in per_target.values():
                        if not row:
                            continue
                        if all(l in self.labelset for l in row):
                            rows.append(row)
                        else:
                            dropped += 1
        labels = sorted(self.labelset)
        return rows, labels, dropped


def _normal_form_system(module: DegreeOneModule, radius: int, reason: str) -> ConstraintSystem:
    asm = _NormalFormAssembler(module, radius)
    rows, labels, dropped = asm.assemble()
    if not rows and dropped:
        raise CertificationError("every identity left the window; enlarge it")
    col = {l: i for i, l in enumerate(labels)}
    mat = []
    seen = set()
    for row in rows:
        key = tuple(sorted((l, v) for l, v in row.items()))
        if key in seen:
            continue
        seen.add(key)
        vec = [Fraction(0)] * len(labels)
        for l, v in row.items():
            vec[col[l]] = v
        mat.append(vec)
    null = linalg.nullspace(mat, len(labels))
    basis = [{labels[i]: v for i, v in enumerate(b) if v} for b in null]
    return ConstraintSystem(len(null), basis, radius, labels, "solved", reason)


def ext_solve_typeA(params_a: Sequence, params_b: Sequence, radius: int = 3) -> ConstraintSystem:
    """Self-extension system for interior type A degree-one families.

    Both parameter vectors must have the shape (-1..,-1, z1, z2, 0..,0) with
    at least one -1 and one 0.  Non-isomorphic pairs are dispatched by the
    highest-weight support argument and give an empty system.
    """
    mod_a = build_N(params_a)
    mod_b = build_N(params_b)
    for m in (mod_a, mod_b):
        if len(m.cuspidal_block()) != 1 or m.spec.minus_ones < 1 or m.spec.zeros < 1:
            raise ValueError("interior family required: shape (-1..,z1,z2,0..)")
    if (mod_a.nvars, mod_a.spec.minus_ones) != (mod_b.nvars, mod_b.spec.minus_ones):
        raise ValueError("families live in different categories")
    j = mod_a.spec.minus_ones
    d1 = mod_b.spec.a[j] - mod_a.spec.a[j]
    d2 = mod_b.spec.a[j + 1] - mod_a.spec.a[j + 1]
    iso = d1.denominator == 1 and d2.denominator == 1 and d1 + d2 == 0
    if not iso:
        return ConstraintSystem(0, [], radius, [], "support-disjoint",
                                "no shared highest-weight support; graded cocycles vanish")
    return _normal_form_system(mod_a, radius, "self pair")


def ext_solve_typeC(params_a: Sequence, params_b: Sequence, radius: int = 3) -> ConstraintSystem:
    """Self-extension system for the long-root type C degree-one families."""
    mod_a = build_M(params_a)
    mod_b = build_M(params_b)
    for m in (mod_a, mod_b):
        if m.spec.middle != 1 or m.spec.minus_ones != m.nvars - 1:
            raise ValueError("family of shape (-1,..,-1,a) required")
    if mod_a.nvars != mod_b.nvars:
        raise ValueError("families live in different categories")
    d = mod_b.spec.a[-1] - mod_a.spec.a[-1]
    if d.denominator != 1 or d % 2 != 0:
        return ConstraintSystem(0, [], radius, [], "support-disjoint",
                                "weight supports are disjoint; graded cocycles vanish")
    return _normal_form_system(mod_a, radius, "self pair")
