"""Super differential forms, the contact form and contact vector fields.

Forms follow the bigraded sign rule: ``du_i`` has form degree 1 and the
parity of ``u_i``, and swapping two objects of bidegrees (a, x), (b, y)
costs ``(-1)**(a*b + x*y)``.  A form is stored as ``(monomial, indices)
-> coefficient`` meaning ``c * u^r du_{i1} ... du_{ik}`` with the function
to the left and ``i1 <= ... <= ik`` (equal indices only for odd ``u_i``).
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from . import linalg
from .dpsuper import DPElement, Signature
from .vecfields import VectorField, field_basis_keys, from_vector


class Form:
    __slots__ = ("sig", "degree", "terms")

    def __init__(self, sig: Signature, degree: int, terms=None):
        self.sig = sig
        self.degree = degree
        p = sig.p
        clean = {}
        if terms:
            for key, c in terms.items():
                c %= p
                if c:
                    clean[key] = c
        self.terms = clean

    def __add__(self, other):
        if other.sig != self.sig or other.degree != self.degree:
            raise ValueError("incompatible forms")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return type(self)(self.sig, self.degree, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return type(self)(self.sig, self.degree, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.sig == other.sig and self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def component(self, idx) -> DPElement:
        idx = tuple(idx)
        return DPElement(self.sig, {r: c for (r, I), c in self.terms.items() if I == idx})

    def __str__(self):
        if not self.terms:
            return "0"
        sig = self.sig
        out = []
        for (r, I), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], sig.sort_key(kv[0][0]))):
            parts = [] if c == 1 else [str(c)]
            mono = sig.render_monomial(r)
            if mono != "1":
                parts.append(mono)
            parts.extend(f"d{sig.names[i]}" for i in I)
            out.append(" ".join(parts))
        return " + ".join(out)

    __repr__ = __str__


class OneForm(Form):
    def __init__(self, sig, degree=1, terms=None):
        if degree != 1:
            raise ValueError("OneForm has form degree 1")
        super().__init__(sig, 1, terms)

    @classmethod
    def from_coefficients(cls, sig, coeffs):
        terms = {}
        for i, f in enumerate(coeffs):
            if f is None:
                continue
            for r, c in f.terms.items():
                terms[(r, (i,))] = c
        return cls(sig, 1, terms)

    def coefficient(self, i) -> DPElement:
        if isinstance(i, str):
            i = self.sig.index(i)
        return self.component((i,))


class TwoForm(Form):
    def __init__(self, sig, degree=2, terms=None):
        if degree != 2:
            raise ValueError("TwoForm has form degree 2")
        super().__init__(sig, 2, terms)


def _make(sig, degree, terms):
    if degree == 1:
        return OneForm(sig, 1, terms)
    if degree == 2:
        return TwoForm(sig, 2, terms)
    return Form(sig, degree, terms)


def _prepend(sig, j, I):
    """Write du_j du_I in sorted order: (sign, indices) or None if zero."""
    par = sig.parities
    sign = 1
    pos = 0
    for i in I:
        if i > j:
            break
        if i == j and not par[j]:
            return None
        # du_j du_i = -(-1)^{p_i p_j} du_i du_j
        if not (par[i] and par[j]):
            sign = -sign
        pos += 1
    return sign, I[:pos] + (j,) + I[pos:]


def d(obj):
    """Exterior differential of a function or a form."""
    if isinstance(obj, DPElement):
        sig = obj.sig
        terms = {(r, ()): c for r, c in obj.terms.items()}
        degree = 0
    else:
        sig = obj.sig
        terms = obj.terms
        degree = obj.degree
    par = sig.parities
    out = {}
    for (r, I), c in terms.items():
        for j in range(sig.a):
            dr = sig.mono_derive(j, r)
            if dr is None:
                continue
            s, r1 = dr
            # du_j h = (-1)^{p_j |h|} h du_j
            if par[j] and sig.parity(r1):
                s = -s
            pre = _prepend(sig, j, I)
            if pre is None:
                continue
            s2, I1 = pre
            key = (r1, I1)
            out[key] = out.get(key, 0) + c * s * s2
    return _make(sig, degree + 1, out)


def _term_parity(sig, r, i):
    return (sig.parity(r) + sig.parities[i]) & 1


def interior(X: VectorField, omega):
    """Contraction of ``X`` into the first slot; returns a function for 1-forms."""
    sig = X.sig
    if omega.sig != sig:
        raise ValueError("signature mismatch")
    par = sig.parities
    p = sig.p
    out = {}
    for (s, j), a in X.terms.items():
        px = _term_parity(sig, s, j)
        for (r, I), c in omega.terms.items():
            # iota passes the coefficient u^r
            sign0 = -1 if (px and sig.parity(r)) else 1
            lead = 1
            for pos, i in enumerate(I):
                if i == j:
                    # u^s moves left past du_{I[:pos]}
                    sign = sign0 * lead
                    if sig.parity(s):
                        for q in I[:pos]:
                            if par[q]:
                                sign = -sign
                    prod = sig.mono_mul(r, s)
                    if prod is not None:
                        key = (prod[1], I[:pos] + I[pos + 1 :])
                        out[key] = (out.get(key, 0) + sign * a * c * prod[0]) % p
                # iota_X passes du_i: -(-1)^{|X| p_i}
                if not (px and par[i]):
                    lead = -lead
    if omega.degree == 1:
        return DPElement(sig, {r: c for (r, _), c in out.items()})
    return _make(sig, omega.degree - 1, out)


def lie_derivative(X: VectorField, omega):
    """L_X omega = iota_X d omega + d iota_X omega."""
    first = interior(X, d(omega))
    second = d(interior(X, omega))
    return first + second


def _kappa_alpha(sig: Signature, coefficients: str = "right", u_coefficient=None) -> OneForm:
    """dt - sum_{i=1,3,4} (v_i dw_i + w_i dv_i) + c u du.

    ``c`` defaults to 1/2 mod p, which is 2 when p = 3 and is the value for
    which the quadratic functions of the g(2) Chevalley generators close up
    to a 14-dimensional algebra for every odd p.  With
    ``coefficients="right"`` each product is read as differential times
    function (``dw_i v_i`` and so on); moving the odd function to the left
    flips the sign of every odd term.  ``"left"`` takes the products literally.
    """
    if coefficients not in ("left", "right"):
        raise ValueError("coefficients must be 'left' or 'right'")
    p = sig.p
    c = pow(2, p - 2, p) if u_coefficient is None else u_coefficient % p
    if not c:
        raise ValueError("the u du coefficient must be nonzero")
    s = -1 if coefficients == "right" else 1
    terms = {(sig.one, (sig.index("t"),)): 1}
    for k in ("1", "3", "4"):
        v, w = sig.index("v" + k), sig.index("w" + k)
        terms[(sig.generator(v), (w,))] = -s
        terms[(sig.generator(w), (v,))] = -s
    u = sig.index("u")
    terms[(sig.generator(u), (u,))] = c * s
    return OneForm(sig, 1, terms)


class ContactStructure:
    """A contact form normalized so that its dt-coefficient is 1."""

    def __init__(self, sig: Signature, alpha: OneForm | None = None, t: str = "t", coefficients: str = "right", u_coefficient=None):
        self.sig = sig
        self.t = sig.index(t)
        self.alpha = _kappa_alpha(sig, coefficients, u_coefficient) if alpha is None else alpha
        if self.alpha.coefficient(self.t) != DPElement.constant(sig, 1):
            raise ValueError("the dt-coefficient of the contact form must be 1")
        self._solved = {}

    def __eq__(self, other):
        return isinstance(other, ContactStructure) and self.sig == other.sig and self.alpha == other.alpha

    def __hash__(self):
        return hash((self.sig, self.alpha))

    def pairing(self, X: VectorField) -> DPElement:
        return interior(X, self.alpha)

    def defect(self, X: VectorField) -> OneForm:
        """L_X alpha - mu alpha with mu the dt-coefficient of L_X alpha."""
        L = lie_derivative(X, self.alpha)
        mu = L.coefficient(self.t)
        if not mu:
            return L
        terms = {}
        for (r, I), c in self.alpha.terms.items():
            for s, m in mu.terms.items():
                prod = self.sig.mono_mul(s, r)
                if prod is not None:
                    key = (prod[1], I)
                    terms[key] = terms.get(key, 0) + m * c * prod[0]
        return L - OneForm(self.sig, 1, terms)

    def conformal_factor(self, X: VectorField) -> DPElement:
        return lie_derivative(X, self.alpha).coefficient(self.t)

    def is_contact(self, X: VectorField) -> bool:
        return self.defect(X).is_zero()

    def _system(self, k: int):
        """Contact fields of degree k (RREF rows over W_k) and their pairing matrix."""
        if k in self._solved:
            return self._solved[k]
        sig = self.sig
        p = sig.p
        keys = field_basis_keys(sig, k)
        fbasis = sig.graded_basis(k + sig.weights[self.t])
        findex = {r: n for n, r in enumerate(fbasis)}
        rows_index = {}
        cols = []
        pair_cols = []
        for key in keys:
            X = VectorField(sig, {key: 1})
            D = self.defect(X)
            col = {}
            for dk, c in D.terms.items():
                n = rows_index.setdefault(dk, len(rows_index))
                col[n] = c
            cols.append(col)
            pc = np.zeros(len(fbasis), dtype=np.int64)
            for r, c in self.pairing(X).terms.items():
                pc[findex[r]] = c
            pair_cols.append(pc)
        M = np.zeros((len(rows_index), len(keys)), dtype=np.int64)
        for j, col in enumerate(cols):
            for n, c in col.items():
                M[n, j] = c % p
        K = linalg.nullspace(M, p)
        P = np.array(pair_cols, dtype=np.int64).reshape(len(keys), len(fbasis)).T % p
        A = P @ K.T % p if len(K) else np.zeros((len(fbasis), 0), dtype=np.int64)
        if A.shape[0] != A.shape[1]:
            raise RuntimeError(
                f"degree {k}: {A.shape[1]} contact fields for {A.shape[0]} generating functions"
            )
        n = A.shape[0]
        R, piv = linalg.rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
        if n and piv[:n] != list(range(n)):
            raise RuntimeError(f"degree {k}: generating-function map is singular")
        Ainv = R[:, n:]
        fields = (Ainv.T @ K) % p if n else np.zeros((0, len(keys)), dtype=np.int64)
        res = (fbasis, findex, fields)
        self._solved[k] = res
        return res

    def field_of(self, f: DPElement) -> VectorField:
        if f.sig != self.sig:
            raise ValueError("signature mismatch")
        if not f.terms:
            return VectorField(self.sig)
        if not f.is_homogeneous():
            raise ValueError("generating function must be homogeneous")
        k = f.degree - self.sig.weights[self.t]
        _, findex, fields = self._system(k)
        v = np.zeros(fields.shape[1], dtype=np.int64)
        for r, c in f.terms.items():
            v = v + c * fields[findex[r]]
        return from_vector(self.sig, k, v % self.sig.p)

    def generating_function(self, X: VectorField) -> DPElement:
        if not self.is_contact(X):
            raise ValueError("field is not a contact field")
        return self.pairing(X)

    def contact_basis(self, k: int) -> list:
        fb = self.sig.graded_basis(k + self.sig.weights[self.t])
        return [self.field_of(DPElement.monomial(self.sig, r)) for r in fb]

    @cached_property
    def degree_range(self):
        return (-self.sig.weights[self.t], self.sig.max_degree - self.sig.weights[self.t])


def field_of(f: DPElement, C: ContactStructure) -> VectorField:
    return C.field_of(f)


def generating_function(X: VectorField, C: ContactStructure) -> DPElement:
    return C.generating_function(X)


def contact_basis(C: ContactStructure, k: int) -> list:
    return C.contact_basis(k)
