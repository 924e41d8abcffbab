"""Cartan-Tanaka-Shchepochkina prolongs inside W(m;N|n;r).

A component ``g_k`` (k >= 1) is the full solution set
``{X in W_k : [X, Y] in g_{k-1} for all Y in g_{-1}}``, found as the kernel
of one exact linear system over GF(p).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .dpsuper import Signature
from .liestruct import Component, GradedSubalgebra, _component_map
from .vecfields import VectorField, bracket, field_basis_keys, field_index, w_dimension


@dataclass
class ProlongProblem:
    """A non-positive part (g_-, g_0) inside W(m;N|n;r)."""

    sig: Signature
    components: dict
    max_degree: int | None = None
    name: str = ""
    checked: bool = field(default=False, init=False)

    def __post_init__(self):
        comps = {}
        for k, c in self.components.items():
            if k > 0:
                raise ValueError("a prolong problem holds only non-positive degrees")
            if not isinstance(c, Component):
                c = Component.from_fields(self.sig, k, c)
            comps[k] = c
        self.components = comps
        if not comps.get(-1) or comps[-1].dim == 0:
            raise ValueError("g_{-1} must be nonzero")

    @property
    def depth(self) -> int:
        return -min(k for k, c in self.components.items() if c.dim)

    def __getitem__(self, k) -> Component:
        return self.components.get(k) or Component(self.sig, k)

    def cap(self) -> int:
        """Largest degree any field of the ambient algebra can have."""
        if self.max_degree is not None:
            return self.max_degree
        sig = self.sig
        if sig.m == 1 and sig.weights[0] == 2 and all(w == 1 for w in sig.weights[1:]):
            # maximal generating-function degree minus the weight of t
            return 2 * (sig.p ** sig.N[0] - 1) + sig.n - 2
        return sig.max_degree - sig.min_weight

    def check(self):
        """Verify g_- is generated by g_{-1} and g_0 acts on every g_i, i < 0."""
        gm1 = self[-1]
        gen = gm1
        for k in range(2, self.depth + 1):
            gen = _component_map(gm1.basis(), gen, self[-k])
            if gen != self[-k]:
                raise ValueError(f"g_{-k} is not generated by g_{{-1}}")
        g0 = self[0].basis()
        for k in range(-self.depth, 0):
            comp = self[k]
            for A in g0:
                for X in comp.basis():
                    Z = bracket(A, X)
                    if not Z.is_zero() and not comp.contains(Z):
                        raise ValueError(f"g_0 does not preserve g_{k}")
        self.checked = True
        return self

    def algebra(self) -> GradedSubalgebra:
        return GradedSubalgebra(self.sig, dict(self.components), self.name)


def membership_matrix(sig: Signature, k: int, border, target: Component, order=None) -> np.ndarray:
    """Rows: residues of [X, Y] modulo ``target`` for Y in ``border``; columns: W_k basis.

    ``order`` permutes the W_k basis (used for shuffle checks).
    """
    keys = field_basis_keys(sig, k)
    p = sig.p
    n_in = len(keys)
    n_out = w_dimension(sig, k - 1)
    idx = field_index(sig, k - 1)
    order = range(n_in) if order is None else order
    blocks = []
    for Y in border:
        V = np.zeros((n_in, n_out), dtype=np.int64)
        for col, j in enumerate(order):
            Z = bracket(VectorField(sig, {keys[j]: 1}), Y)
            for key, c in Z.terms.items():
                V[col, idx[key]] = c
        if target.dim:
            V = (V - V[:, target.pivots] @ target.E) % p
        blocks.append(V)
    M = np.hstack(blocks).T if blocks else np.zeros((0, n_in), dtype=np.int64)
    return M[np.flatnonzero(M.any(axis=1))]


def prolong_step(sig: Signature, k: int, border, target: Component, order=None) -> Component:
    """g_k = {X in W_k : [X, Y] in target for Y in border}, in canonical form."""
    if k < 1:
        raise ValueError("prolong steps start at degree 1")
    n_in = w_dimension(sig, k)
    if n_in == 0:
        return Component(sig, k)
    M = membership_matrix(sig, k, border, target, order)
    K = linalg.nullspace(M, sig.p) if len(M) else np.eye(n_in, dtype=np.int64)
    if order is not None and len(K):
        # undo the permutation of coordinates
        full = np.zeros_like(K)
        full[:, list(order)] = K
        K = full
    return Component(sig, k, K)


def _run(problem: ProlongProblem, first: Component | None, log=None) -> GradedSubalgebra:
    sig = problem.sig
    if not problem.checked:
        problem.check()
    border = problem[-1].basis()
    comps = dict(problem.components)
    cap = problem.cap()
    timings = {}
    k = 1
    prev = comps[0] if 0 in comps else Component(sig, 0)
    warnings = []
    extra_zero = None
    while k <= cap:
        t0 = time.perf_counter()
        if k == 1 and first is not None:
            g = first
        else:
            g = prolong_step(sig, k, border, prev)
        timings[k] = time.perf_counter() - t0
        if log:
            log(f"degree {k}: dim {g.dim} ({timings[k]:.2f}s)")
        if g.dim == 0:
            # transitivity: one more step past the first zero must also vanish
            if k + 1 <= cap:
                extra_zero = prolong_step(sig, k + 1, border, g).dim == 0
            break
        comps[k] = g
        prev = g
        k += 1
    else:
        if prev.dim:
            warnings.append(f"cap {cap} reached with nonzero component")
    alg = GradedSubalgebra(sig, comps, problem.name)
    alg.warnings = warnings
    alg.timings = timings
    alg.transitive_tail = extra_zero
    return alg


def cts_prolong(problem: ProlongProblem, log=None) -> GradedSubalgebra:
    """Full prolong (g_-, g_0)_*."""
    return _run(problem, None, log)


def partial_prolong(problem: ProlongProblem, h1: Component, log=None, require_surjective=True) -> GradedSubalgebra:
    """Partial prolong with h_1 a g_0-submodule of g_1 and [g_{-1}, h_1] = g_0.

    With ``require_surjective=False`` a failing surjectivity condition is
    recorded on the result (``surjective``) instead of raising.
    """
    sig = problem.sig
    if not problem.checked:
        problem.check()
    g1 = prolong_step(sig, 1, problem[-1].basis(), problem[0])
    if not h1.issubspace(g1):
        raise ValueError("h_1 is not inside g_1")
    for A in problem[0].basis():
        for X in h1.basis():
            Z = bracket(A, X)
            if not Z.is_zero() and not h1.contains(Z):
                raise ValueError("h_1 is not a g_0-submodule")
    image = _component_map(problem[-1].basis(), h1, problem[0])
    surjective = image == problem[0]
    if not surjective and require_surjective:
        raise ValueError(f"[g_-1, h_1] has dimension {image.dim}, g_0 has {problem[0].dim}")
    alg = _run(problem, h1, log)
    alg.surjective = surjective
    alg.bracket_image_dim = image.dim
    return alg
