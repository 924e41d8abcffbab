"""Graded subalgebras of W(m;N|n;r) and their representation theory over GF(p).

Every graded piece is kept as a reduced row echelon basis over the monomial
basis of ``W_k`` (see :func:`vecfields.field_basis`), so two subalgebras are
equal exactly when their stored matrices agree.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .dpsuper import Signature
from .vecfields import VectorField, bracket, field_basis_keys, from_vector, to_vector, w_dimension


class Component:
    """A subspace of W_k in canonical (RREF) form."""

    __slots__ = ("sig", "degree", "E", "pivots", "_parities")

    def __init__(self, sig: Signature, degree: int, rows=None, *, reduced=False):
        self.sig = sig
        self.degree = degree
        n = w_dimension(sig, degree)
        if rows is None or len(rows) == 0:
            self.E = np.zeros((0, n), dtype=np.int64)
            self.pivots = []
        elif reduced:
            self.E = np.asarray(rows, dtype=np.int64)
            self.pivots = [int(np.flatnonzero(r)[0]) for r in self.E]
        else:
            self.E, self.pivots = linalg.rref(np.asarray(rows, dtype=np.int64).reshape(-1, n), sig.p)
        self._parities = None

    @classmethod
    def from_fields(cls, sig, degree, fields):
        rows = [to_vector(X, degree) for X in fields if not X.is_zero()]
        return cls(sig, degree, rows)

    def __len__(self):
        return len(self.E)

    @property
    def dim(self):
        return len(self.E)

    def __eq__(self, other):
        return (
            isinstance(other, Component)
            and self.degree == other.degree
            and self.E.shape == other.E.shape
            and bool(np.array_equal(self.E, other.E))
        )

    def basis(self) -> list:
        return [from_vector(self.sig, self.degree, row) for row in self.E]

    def parities(self) -> list:
        if self._parities is None:
            keys = field_basis_keys(self.sig, self.degree)
            par = self.sig.parities
            out = []
            for row in self.E:
                ps = {(self.sig.parity(keys[j][0]) + par[keys[j][1]]) & 1 for j in np.flatnonzero(row)}
                if len(ps) != 1:
                    raise ValueError(f"degree {self.degree} component is not parity-homogeneous")
                out.append(ps.pop())
            self._parities = out
        return self._parities

    def sdim(self) -> tuple:
        ps = self.parities()
        return (ps.count(0), ps.count(1))

    def coordinates(self, X):
        v = X if isinstance(X, np.ndarray) else to_vector(X, self.degree)
        return linalg.coordinates(v, self.E, self.pivots, self.sig.p)

    def contains(self, X) -> bool:
        if isinstance(X, VectorField) and X.is_zero():
            return True
        if isinstance(X, VectorField) and X.degrees() != {self.degree}:
            return False
        return self.coordinates(X) is not None

    def reduce(self, v):
        return linalg.reduce_vector(v, self.E, self.pivots, self.sig.p)

    def issubspace(self, other: "Component") -> bool:
        return all(other.coordinates(row) is not None for row in self.E)

    def __add__(self, other: "Component") -> "Component":
        return Component(self.sig, self.degree, np.vstack([self.E, other.E]))

    def intersect(self, other: "Component") -> "Component":
        return Component(self.sig, self.degree, linalg.intersect_rowspaces(self.E, other.E, self.sig.p))


def span_membership(v: VectorField, component: Component):
    """Coordinates of ``v`` in the component basis, or None when outside the span."""
    if v.is_zero():
        return np.zeros(component.dim, dtype=np.int64)
    if v.degrees() != {component.degree}:
        return None
    return component.coordinates(v)


class GradedSubalgebra:
    """A Z-graded subspace ``g = sum_k g_k`` of W(m;N|n;r)."""

    def __init__(self, sig: Signature, components=None, name: str = ""):
        self.sig = sig
        self.name = name
        self.components = {}
        for k, comp in (components or {}).items():
            if not isinstance(comp, Component):
                comp = Component(sig, k, comp)
            if comp.dim:
                self.components[k] = comp
        self.warnings = []

    @classmethod
    def from_fields(cls, sig, fields, name=""):
        by_deg = {}
        for X in fields:
            if X.is_zero():
                continue
            if not X.is_homogeneous():
                raise ValueError("inhomogeneous field cannot enter a graded subalgebra")
            by_deg.setdefault(X.degree, []).append(to_vector(X, X.degree))
        return cls(sig, {k: Component(sig, k, rows) for k, rows in by_deg.items()}, name)

    def __getitem__(self, k) -> Component:
        return self.components.get(k) or Component(self.sig, k)

    def degrees(self) -> list:
        return sorted(self.components)

    @property
    def depth(self) -> int:
        neg = [k for k in self.components if k < 0]
        return -min(neg) if neg else 0

    @property
    def top(self) -> int:
        return max(self.components) if self.components else 0

    def dim(self, k=None) -> int:
        if k is None:
            return sum(c.dim for c in self.components.values())
        return self[k].dim

    def sdim(self, k=None) -> tuple:
        if k is not None:
            return self[k].sdim()
        ev = od = 0
        for c in self.components.values():
            e, o = c.sdim()
            ev += e
            od += o
        return (ev, od)

    def dims(self, lo=None, hi=None) -> list:
        lo = min(self.components) if lo is None else lo
        hi = max(self.components) if hi is None else hi
        return [self.dim(k) for k in range(lo, hi + 1)]

    def basis(self) -> list:
        """(degree, field) pairs, degree-major then echelon order."""
        out = []
        for k in self.degrees():
            out.extend((k, X) for X in self.components[k].basis())
        return out

    def fields(self) -> list:
        return [X for _, X in self.basis()]

    def parities(self) -> list:
        out = []
        for k in self.degrees():
            out.extend(self.components[k].parities())
        return out

    def contains(self, X: VectorField) -> bool:
        if X.is_zero():
            return True
        if not X.is_homogeneous():
            return all(self.contains(part) for part in split_by_degree(X))
        return self[X.degree].contains(X)

    def __eq__(self, other):
        if not isinstance(other, GradedSubalgebra) or other.sig != self.sig:
            return False
        return self.degrees() == other.degrees() and all(
            self.components[k] == other.components[k] for k in self.degrees()
        )

    def issubalgebra_of(self, other: "GradedSubalgebra") -> bool:
        return all(c.issubspace(other[k]) for k, c in self.components.items())

    def truncate(self, lo=None, hi=None, name=None) -> "GradedSubalgebra":
        comps = {
            k: c
            for k, c in self.components.items()
            if (lo is None or k >= lo) and (hi is None or k <= hi)
        }
        return GradedSubalgebra(self.sig, comps, name or self.name)

    def with_component(self, k, comp, name=None) -> "GradedSubalgebra":
        comps = dict(self.components)
        comps[k] = comp
        return GradedSubalgebra(self.sig, comps, name or self.name)

    def check_closure(self) -> list:
        """Brackets of basis elements that leave the algebra, as (i_deg, j_deg) pairs."""
        bad = []
        degs = self.degrees()
        for a in degs:
            A = self.components[a].basis()
            for b in degs:
                if b < a:
                    continue
                B = self.components[b].basis()
                target = self[a + b]
                for X in A:
                    for Y in B:
                        Z = bracket(X, Y)
                        if not Z.is_zero() and not target.contains(Z):
                            bad.append((a, b))
                            break
                    else:
                        continue
                    break
        return bad

    def structure_table(self):
        return SCAlgebra.from_graded(self)

    def summary(self) -> dict:
        return {k: self.sdim(k) for k in self.degrees()}

    def __repr__(self):
        body = ", ".join(f"{k}: {e}|{o}" for k, (e, o) in self.summary().items())
        return f"GradedSubalgebra({self.name!r}, {{{body}}})"


def split_by_degree(X: VectorField) -> list:
    sig = X.sig
    parts = {}
    for (r, i), c in X.terms.items():
        parts.setdefault(sig.degree(r) - sig.weights[i], {})[(r, i)] = c
    return [VectorField(sig, t) for _, t in sorted(parts.items())]


def bracket_closure(generators, sig: Signature | None = None, max_degree=None, name="") -> GradedSubalgebra:
    """Smallest bracket-closed graded span containing the generators."""
    gens = [X for X in generators if not X.is_zero()]
    if sig is None:
        if not gens:
            raise ValueError("cannot infer the signature of an empty generator set")
        sig = gens[0].sig
    p = sig.p
    rows = {}
    comps = {}
    elements = []
    queue = []
    for X in gens:
        queue.extend(split_by_degree(X))
    while queue:
        X = queue.pop(0)
        if X.is_zero():
            continue
        k = X.degree
        if max_degree is not None and k > max_degree:
            continue
        v = to_vector(X, k)
        comp = comps.get(k)
        if comp is not None and comp.coordinates(v) is not None:
            continue
        rows.setdefault(k, []).append(v)
        comps[k] = Component(sig, k, rows[k])
        for Y in elements:
            queue.append(bracket(Y, X))
        queue.append(bracket(X, X))
        elements.append(X)
    del p
    return GradedSubalgebra(sig, comps, name)


class SCAlgebra:
    """A finite-dimensional Lie superalgebra given by structure constants.

    ``table[i, j]`` is the coordinate vector of ``[e_i, e_j]``.
    """

    def __init__(self, p: int, parities, degrees, table: np.ndarray, name="", labels=None):
        self.p = p
        self.parities = list(parities)
        self.degrees = list(degrees)
        self.table = np.asarray(table, dtype=np.int64) % p
        self.name = name
        self.labels = labels
        n = len(self.parities)
        if self.table.shape != (n, n, n):
            raise ValueError("structure table has the wrong shape")

    @property
    def dim(self):
        return len(self.parities)

    def sdim(self):
        return (self.parities.count(0), self.parities.count(1))

    @classmethod
    def from_graded(cls, alg: GradedSubalgebra) -> "SCAlgebra":
        basis = alg.basis()
        return cls.from_fields(alg.sig, basis, name=alg.name, algebra=alg)

    @classmethod
    def from_fields(cls, sig, basis, name="", algebra=None):
        """``basis`` is a list of (degree, field) pairs spanning a subalgebra."""
        p = sig.p
        n = len(basis)
        offsets = {}
        comps = {}
        for idx, (k, _) in enumerate(basis):
            offsets.setdefault(k, idx)
        by_deg = {}
        for k, X in basis:
            by_deg.setdefault(k, []).append(to_vector(X, k))
        for k, rows in by_deg.items():
            M = np.array(rows, dtype=np.int64)
            # coordinates w.r.t. the given (not necessarily echelon) basis
            comps[k] = M
        table = np.zeros((n, n, n), dtype=np.int64)
        parities = []
        for k, X in basis:
            parities.append(X.parity)
        solvers = {}
        for k, M in comps.items():
            R, piv = linalg.rref(np.hstack([M.T, np.zeros((M.shape[1], 0), dtype=np.int64)]), p)
            if len(piv) != len(M):
                raise ValueError(f"basis vectors in degree {k} are dependent")
            solvers[k] = M
        for i, (a, X) in enumerate(basis):
            for j, (b, Y) in enumerate(basis):
                if j < i:
                    s = p - 1 if (parities[i] & parities[j]) == 0 else 1
                    table[i, j] = table[j, i] * s % p
                    continue
                Z = bracket(X, Y)
                if Z.is_zero():
                    continue
                c = a + b
                if c not in solvers:
                    raise ValueError(f"basis not closed: [{i}, {j}] leaves the span")
                x = linalg.solve(solvers[c].T, to_vector(Z, c), p)
                if x is None:
                    raise ValueError(f"basis not closed: [{i}, {j}] leaves the span")
                table[i, j, offsets[c] : offsets[c] + len(x)] = x
        labels = [f"{k}:{n}" for n, (k, _) in enumerate(basis)]
        return cls(p, parities, [k for k, _ in basis], table, name=name, labels=labels)

    def bracket(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        return np.einsum("i,j,ijk->k", x, y, self.table) % self.p

    def ad(self, i) -> np.ndarray:
        """Matrix of ad e_i acting on column vectors."""
        return self.table[i].T % self.p

    def constants(self) -> list:
        """Nonzero (i, j, k, c) with i <= j."""
        out = []
        n = self.dim
        for i in range(n):
            for j in range(i, n):
                for k in np.flatnonzero(self.table[i, j]):
                    out.append((i, j, int(k), int(self.table[i, j, k])))
        return out

    def super_antisymmetry_defects(self) -> int:
        bad = 0
        p = self.p
        for i in range(self.dim):
            for j in range(self.dim):
                s = 1 if (self.parities[i] & self.parities[j]) else p - 1
                if not np.array_equal(self.table[i, j], self.table[j, i] * s % p):
                    bad += 1
        return bad

    def jacobi_defects(self, triples=None) -> int:
        p = self.p
        n = self.dim
        if triples is None:
            triples = [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]
        bad = 0
        E = np.eye(n, dtype=np.int64)
        par = self.parities
        for i, j, k in triples:
            # [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
            lhs = self.bracket(E[i], self.bracket(E[j], E[k]))
            r1 = self.bracket(self.bracket(E[i], E[j]), E[k])
            r2 = self.bracket(E[j], self.bracket(E[i], E[k]))
            if par[i] & par[j]:
                r2 = -r2
            if ((lhs - r1 - r2) % p).any():
                bad += 1
        return bad

    def ideal_closure(self, vectors) -> np.ndarray:
        """RREF basis of the ideal generated by the given coordinate vectors."""
        p = self.p
        S, _ = linalg.rref(np.atleast_2d(np.asarray(vectors, dtype=np.int64)), p)
        ads = [self.ad(i) for i in range(self.dim)]
        while True:
            if len(S) == self.dim:
                return S
            new = [S]
            for A in ads:
                new.append((S @ A.T) % p)
            T, _ = linalg.rref(np.vstack(new), p)
            if len(T) == len(S):
                return T
            S = T

    def derived(self) -> np.ndarray:
        rows = self.table.reshape(-1, self.dim)
        return linalg.rref(rows, self.p)[0]

    def center(self) -> np.ndarray:
        n = self.dim
        # x in center iff sum_i x_i table[i, j] = 0 for all j
        M = np.transpose(self.table, (1, 2, 0)).reshape(n * n, n)
        return linalg.nullspace(M, self.p)

    def is_abelian(self) -> bool:
        return not self.table.any()

    def subalgebra(self, rows) -> "SCAlgebra":
        """Structure constants of the subalgebra spanned by RREF ``rows``."""
        p = self.p
        B = np.asarray(rows, dtype=np.int64)
        m = len(B)
        R, piv = linalg.rref(B, p)
        table = np.zeros((m, m, m), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                z = self.bracket(R[i], R[j])
                x = linalg.coordinates(z, R, piv, p)
                if x is None:
                    raise ValueError("rows do not span a subalgebra")
                table[i, j] = x
        pars = []
        degs = []
        for row in R:
            nz = np.flatnonzero(row)
            ps = {self.parities[t] for t in nz}
            if len(ps) != 1:
                raise ValueError("subalgebra basis is not parity-homogeneous")
            pars.append(ps.pop())
            degs.append(self.degrees[nz[0]])
        return SCAlgebra(p, pars, degs, table)


def structure_constants(alg, basis=None) -> list:
    """Nonzero (i, j, k, c) with i <= j for ``alg`` (GradedSubalgebra or SCAlgebra)."""
    if isinstance(alg, SCAlgebra):
        return alg.constants()
    if basis is None:
        return SCAlgebra.from_graded(alg).constants()
    return SCAlgebra.from_fields(alg.sig, basis).constants()


def derived_subalgebra(alg: GradedSubalgebra, name=None) -> GradedSubalgebra:
    sig = alg.sig
    rows = {}
    degs = alg.degrees()
    for a in degs:
        A = alg.components[a].basis()
        for b in degs:
            if b < a:
                continue
            B = alg.components[b].basis()
            for X in A:
                for Y in B:
                    Z = bracket(X, Y)
                    if not Z.is_zero():
                        rows.setdefault(a + b, []).append(to_vector(Z, a + b))
    return GradedSubalgebra(sig, {k: Component(sig, k, r) for k, r in rows.items()}, name or alg.name)


def center(alg: GradedSubalgebra) -> GradedSubalgebra:
    """All elements of ``alg`` bracketing to zero with every basis element."""
    sig = alg.sig
    p = sig.p
    others = alg.fields()
    comps = {}
    for k in alg.degrees():
        comp = alg.components[k]
        basis = comp.basis()
        cols = []
        for X in basis:
            col = []
            for Y in others:
                Z = bracket(X, Y)
                col.append(to_vector(Z, k + Y.degree) if not Z.is_zero() else np.zeros(w_dimension(sig, k + Y.degree), dtype=np.int64))
            cols.append(np.concatenate(col) if col else np.zeros(0, dtype=np.int64))
        M = np.array(cols, dtype=np.int64).T
        K = linalg.nullspace(M, p) if M.size else np.eye(len(basis), dtype=np.int64)
        if len(K):
            comps[k] = Component(sig, k, K @ comp.E % p)
    return GradedSubalgebra(sig, comps, f"center({alg.name})")


# -- module-theoretic helpers --------------------------------------------------


def _action_matrix(T: VectorField, comp: Component) -> np.ndarray:
    """Matrix (columns = images of basis vectors) of ad T restricted to ``comp``."""
    k = comp.degree + T.degree
    target = comp if k == comp.degree else None
    cols = []
    for X in comp.basis():
        Z = bracket(T, X)
        if target is None:
            raise ValueError("acting element must have degree 0")
        x = comp.coordinates(Z) if not Z.is_zero() else np.zeros(comp.dim, dtype=np.int64)
        if x is None:
            raise ValueError("component is not stable under the acting element")
        cols.append(x)
    return np.array(cols, dtype=np.int64).reshape(comp.dim, comp.dim).T


def weight_decompose(comp: Component, torus) -> dict:
    """Simultaneous eigenspace decomposition under commuting degree-0 fields.

    Returns ``{weight tuple: Component}``; raises if some torus element does not
    act diagonalizably over GF(p) on the component.
    """
    p = comp.sig.p
    if comp.dim == 0:
        return {}
    for a in range(len(torus)):
        for b in range(a + 1, len(torus)):
            if not bracket(torus[a], torus[b]).is_zero():
                raise ValueError(f"torus elements {a} and {b} do not commute")
    mats = [_action_matrix(T, comp) for T in torus]
    spaces = {(): np.eye(comp.dim, dtype=np.int64)}
    for n, M in enumerate(mats):
        refined = {}
        for w, S in spaces.items():
            total = 0
            for lam in range(p):
                # {x in S : M x = lam x}, S given by rows spanning coordinate vectors
                A = (M - lam * np.eye(comp.dim, dtype=np.int64)) % p
                K = linalg.nullspace((A @ S.T) % p, p)
                if len(K):
                    refined[w + (lam,)] = linalg.rref(K @ S % p, p)[0]
                    total += len(K)
            if total != len(S):
                raise ValueError(f"torus element {n} is not diagonalizable on degree {comp.degree}")
        spaces = refined
    return {w: Component(comp.sig, comp.degree, S @ comp.E % p) for w, S in spaces.items()}


def weight_of(X: VectorField, torus) -> tuple:
    """Eigenvalues of ad T on X for each T in ``torus`` (X must be a weight vector)."""
    p = X.sig.p
    out = []
    k = X.degree
    v = to_vector(X, k)
    j = int(np.flatnonzero(v)[0])
    for T in torus:
        Z = bracket(T, X)
        w = to_vector(Z, k) if not Z.is_zero() else np.zeros_like(v)
        lam = int(w[j]) * pow(int(v[j]), p - 2, p) % p
        if ((w - lam * v) % p).any():
            raise ValueError("not a weight vector")
        out.append(lam)
    return tuple(out)


def singular_vectors(comp: Component, border, torus=None) -> list:
    """Joint kernel of ad(b) for b in ``border`` on ``comp``, normalized.

    With a torus the kernel is split into weight spaces first, so each returned
    vector is also a weight vector.
    """
    p = comp.sig.p
    if comp.dim == 0:
        return []
    blocks = []
    for b in border:
        k = comp.degree + b.degree
        cols = []
        for X in comp.basis():
            Z = bracket(b, X)
            cols.append(to_vector(Z, k) if not Z.is_zero() else np.zeros(w_dimension(comp.sig, k), dtype=np.int64))
        blocks.append(np.array(cols, dtype=np.int64).T)
    M = np.vstack(blocks) if blocks else np.zeros((0, comp.dim), dtype=np.int64)
    K = linalg.nullspace(M, p) if len(M) else np.eye(comp.dim, dtype=np.int64)
    if len(K) == 0:
        return []
    kernel = Component(comp.sig, comp.degree, K @ comp.E % p)
    if torus:
        out = []
        for w, sub in sorted(weight_decompose(kernel, torus).items()):
            out.extend(sub.basis())
        return [from_vector(comp.sig, comp.degree, linalg.normalize(to_vector(X, comp.degree), p)) for X in out]
    return kernel.basis()


def generated_submodule(vectors, acting, degree: int, sig: Signature) -> Component:
    """Smallest subspace of W_degree containing ``vectors`` and stable under ad(acting)."""
    sub = Component.from_fields(sig, degree, vectors)
    frontier = sub.basis()
    while frontier:
        new = []
        for X in frontier:
            for A in acting:
                Z = bracket(A, X)
                if Z.is_zero() or sub.contains(Z):
                    continue
                sub = Component(sig, degree, np.vstack([sub.E, to_vector(Z, degree)]))
                new.append(Z)
        frontier = new
    return sub


def decompose_module(comp: Component, acting, lowering, torus=None) -> dict:
    """Submodules generated by the singular vectors of ``comp``.

    ``acting`` spans the degree-0 algebra, ``lowering`` its lowering generators.
    """
    sing = singular_vectors(comp, lowering, torus)
    subs = [generated_submodule([v], acting, comp.degree, comp.sig) for v in sing]
    total = sum(s.dim for s in subs)
    union = Component(comp.sig, comp.degree, np.vstack([s.E for s in subs])) if subs else Component(comp.sig, comp.degree)
    direct = bool(subs) and union.dim == total == comp.dim
    return {
        "singular": sing,
        "submodules": subs,
        "sdims": [s.sdim() for s in subs],
        "direct": direct,
    }


def _component_map(elements, comp_from: Component, target: Component):
    """Span of brackets [elements, comp_from] inside W_target.degree."""
    sig = comp_from.sig
    rows = []
    for A in elements:
        for X in comp_from.basis():
            Z = bracket(A, X)
            if not Z.is_zero():
                rows.append(to_vector(Z, target.degree))
    return Component(sig, target.degree, rows)


def is_simple_criterion(alg: GradedSubalgebra, acting=None, lowering=None, torus=None) -> dict:
    """Graded simplicity criterion, clause by clause.

    (a) g_{-1} irreducible over g_0: one singular vector generating g_{-1};
    (b) g_- generated by g_{-1};
    (c) [g_1, g_{-1}] = g_0;
    (d) the positive part generated by g_1;
    (e) transitivity: no nonzero X of degree >= 0 with [X, g_{-1}] = 0.
    """
    g = alg.components
    gm1 = alg[-1]
    g0 = alg[0]
    acting = g0.basis() if acting is None else acting
    clauses = {}
    if gm1.dim == 0:
        clauses["a"] = False
    else:
        if lowering is None:
            lowering = acting
        dec = decompose_module(gm1, acting, lowering, torus)
        clauses["a"] = len(dec["singular"]) == 1 and dec["direct"]
    # (b)
    ok = True
    gen = gm1
    for k in range(2, alg.depth + 1):
        gen = _component_map(gm1.basis(), gen, alg[-k])
        if not alg[-k].issubspace(gen):
            ok = False
            break
    clauses["b"] = ok
    # (c)
    g1 = alg[1]
    clauses["c"] = g1.dim > 0 and _component_map(g1.basis(), gm1, g0) == g0
    # (d)
    ok = g1.dim > 0
    gen = g1
    for k in range(2, alg.top + 1):
        if not ok:
            break
        gen = _component_map(g1.basis(), gen, alg[k])
        if not alg[k].issubspace(gen):
            ok = False
    clauses["d"] = ok
    # (e)
    ok = True
    border = gm1.basis()
    for k, comp in g.items():
        if k < 0:
            continue
        if singular_vectors(comp, border):
            ok = False
            break
    clauses["e"] = ok
    return {"simple": all(clauses.values()), "clauses": clauses}


def is_simple_bruteforce(alg, cap: int = 200) -> bool:
    """Every basis vector generates the whole algebra as an ideal, and it is non-abelian.

    Basis vectors are processed from the lowest degree up.  A closure stops
    early once it contains a basis vector already known to generate
    everything, since its ideal then contains the whole algebra too.
    """
    sc = alg if isinstance(alg, SCAlgebra) else SCAlgebra.from_graded(alg)
    if sc.dim > cap:
        raise ValueError(f"dimension {sc.dim} exceeds the brute-force cap {cap}")
    if sc.dim == 0 or sc.is_abelian():
        return False
    p, n = sc.p, sc.dim
    ads = [sc.ad(i) for i in range(n)]
    full = []
    for i in sorted(range(n), key=lambda j: (sc.degrees[j], j)):
        S = np.zeros((1, n), dtype=np.int64)
        S[0, i] = 1
        while True:
            # pivots of an RREF basis of S; e_j is in span(S) iff row with pivot j is e_j
            R, piv = linalg.rref(S, p)
            if len(R) == n or any(
                j in piv and np.count_nonzero(R[piv.index(j)]) == 1 for j in full
            ):
                break
            T, _ = linalg.rref(np.vstack([R] + [(R @ A.T) % p for A in ads]), p)
            if len(T) == len(R):
                return False
            S = T
        full.append(i)
    return True


def ideal_closure(alg: GradedSubalgebra, generators, name="") -> GradedSubalgebra:
    """Smallest graded ideal of ``alg`` containing the given homogeneous fields."""
    sig = alg.sig
    comps = {}
    for X in generators:
        if X.is_zero():
            continue
        k = X.degree
        comps[k] = comps.get(k, Component(sig, k)) + Component.from_fields(sig, k, [X])
    frontier = [X for X in generators if not X.is_zero()]
    others = alg.fields()
    while frontier:
        new = []
        for X in frontier:
            for Y in others:
                Z = bracket(Y, X)
                if Z.is_zero():
                    continue
                k = Z.degree
                c = comps.get(k, Component(sig, k))
                if c.contains(Z):
                    continue
                comps[k] = Component(sig, k, np.vstack([c.E, to_vector(Z, k)]))
                new.append(Z)
        frontier = new
    return GradedSubalgebra(sig, comps, name)


def simple_ideal(alg: GradedSubalgebra, name="", lowering=None, torus=None, bruteforce_cap=200) -> GradedSubalgebra:
    """Ideal generated by g_-, then derived passes until stable; verified simple.

    The criterion is sufficient but not necessary, so when it fails the
    brute-force test (run whenever the dimension is within ``bruteforce_cap``)
    decides.  Both verdicts are stored on the result as ``simplicity``.
    """
    neg = [X for k in alg.degrees() if k < 0 for X in alg.components[k].basis()]
    ideal = ideal_closure(alg, neg, name)
    while True:
        der = derived_subalgebra(ideal, name)
        if der == ideal:
            break
        ideal = der
    verdict = is_simple_criterion(ideal, lowering=lowering, torus=torus)
    brute = is_simple_bruteforce(ideal, bruteforce_cap) if ideal.dim() <= bruteforce_cap else None
    ideal.simplicity = {"criterion": verdict, "bruteforce": brute}
    if brute is False or (brute is None and not verdict["simple"]):
        raise ValueError(f"extracted ideal is not simple: {verdict['clauses']}, brute force {brute}")
    return ideal
