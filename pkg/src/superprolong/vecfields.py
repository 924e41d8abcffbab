"""Special vector fields W(m;N|n;r) on divided-power superalgebras.

A field ``X = sum_i f_i d/du_i`` is stored as a sparse dict
``(monomial, i) -> coefficient``; the coefficient sits to the left of the
derivation, so ``X(g) = sum_i f_i * d_i(g)`` with no extra sign.
"""

from __future__ import annotations

import numpy as np

from .dpsuper import DPElement, Signature


class VectorField:
    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms=None):
        self.sig = sig
        p = sig.p
        clean = {}
        if terms:
            for key, c in terms.items():
                c %= p
                if c:
                    clean[key] = c
        self.terms = clean

    @classmethod
    def from_coefficients(cls, sig, coeffs):
        """Build from one DPElement (or None) per indeterminate."""
        if len(coeffs) != sig.a:
            raise ValueError("need one coefficient per indeterminate")
        terms = {}
        for i, f in enumerate(coeffs):
            if f is None:
                continue
            for r, c in f.terms.items():
                terms[(r, i)] = c
        return cls(sig, terms)

    @classmethod
    def partial(cls, sig, i):
        if isinstance(i, str):
            i = sig.index(i)
        return cls(sig, {(sig.one, i): 1})

    def coefficient(self, i) -> DPElement:
        if isinstance(i, str):
            i = self.sig.index(i)
        return DPElement(self.sig, {r: c for (r, j), c in self.terms.items() if j == i})

    @property
    def coefficients(self) -> tuple:
        return tuple(self.coefficient(i) for i in range(self.sig.a))

    def _check(self, other):
        if not isinstance(other, VectorField):
            raise TypeError(f"expected VectorField, got {type(other).__name__}")
        if other.sig != self.sig:
            raise ValueError("signature mismatch")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        p = self.sig.p
        for k, c in other.terms.items():
            out[k] = (out.get(k, 0) + c) % p
        return VectorField(self.sig, out)

    def __neg__(self):
        p = self.sig.p
        return VectorField(self.sig, {k: p - c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "VectorField":
        return VectorField(self.sig, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, int):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        sig = self.sig
        return {sig.degree(r) - sig.weights[i] for (r, i) in self.terms}

    def parities(self) -> set:
        sig = self.sig
        return {(sig.parity(r) + sig.parities[i]) & 1 for (r, i) in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1 and len(self.parities()) <= 1

    @property
    def degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("field is not degree-homogeneous")
        return ds.pop()

    @property
    def parity(self) -> int:
        ps = self.parities()
        if len(ps) > 1:
            raise ValueError("field is not parity-homogeneous")
        return ps.pop() if ps else 0

    def __call__(self, f: DPElement) -> DPElement:
        return apply(self, f)

    def __str__(self):
        return render_field(self)

    def __repr__(self):
        return f"VectorField({render_field(self)!r})"


def _field_sort_key(sig, key):
    r, i = key
    return (i, sig.sort_key(r))


def render_field(X: VectorField) -> str:
    if not X.terms:
        return "0"
    sig = X.sig
    out = []
    for key in sorted(X.terms, key=lambda k: _field_sort_key(sig, k)):
        r, i = key
        c = X.terms[key]
        mono = sig.render_monomial(r)
        parts = []
        if c != 1:
            parts.append(str(c))
        if mono != "1":
            parts.append(mono)
        parts.append(f"d/d{sig.names[i]}")
        out.append(" ".join(parts))
    return " + ".join(out)


def parse_field(sig: Signature, text: str) -> VectorField:
    text = text.strip()
    if text == "0":
        return VectorField(sig)
    terms = {}
    for term in text.split("+"):
        tokens = term.split()
        deriv = tokens[-1]
        if not deriv.startswith("d/d"):
            raise ValueError(f"term {term!r} has no derivation")
        i = sig.index(deriv[3:])
        coef = 1
        rest = tokens[:-1]
        if rest and rest[0].isdigit():
            coef = int(rest[0])
            rest = rest[1:]
        r = [0] * sig.a
        for tok in rest:
            if "^" in tok:
                name, exp = tok.split("^", 1)
                r[sig.index(name)] = int(exp.strip("()"))
            else:
                r[sig.index(tok)] = 1
        key = (tuple(r), i)
        terms[key] = (terms.get(key, 0) + coef) % sig.p
    return VectorField(sig, terms)


def apply(X: VectorField, f: DPElement) -> DPElement:
    if X.sig != f.sig:
        raise ValueError("signature mismatch")
    sig = X.sig
    p = sig.p
    out = {}
    mul, der = sig.mono_mul, sig.mono_derive
    for (r, i), c in X.terms.items():
        for s, d in f.terms.items():
            ds = der(i, s)
            if ds is None:
                continue
            sd, s1 = ds
            prod = mul(r, s1)
            if prod is None:
                continue
            cm, rs = prod
            out[rs] = (out.get(rs, 0) + c * d * sd * cm) % p
    return DPElement(sig, out)


def bracket(X: VectorField, Y: VectorField) -> VectorField:
    """Superbracket [X, Y] = X Y - (-1)^{p(X)p(Y)} Y X, coefficientwise."""
    if X.sig != Y.sig:
        raise ValueError("signature mismatch")
    if not X.terms or not Y.terms:
        return VectorField(X.sig)
    sig = X.sig
    p = sig.p
    sign = p - 1 if (X.parity & Y.parity) else 1
    out = {}
    mul, der = sig.mono_mul, sig.mono_derive
    for (r, i), c in X.terms.items():
        for (s, j), d in Y.terms.items():
            cd = c * d
            # X applied to the coefficient of Y
            if s[i]:
                ds = der(i, s)
                prod = mul(r, ds[1])
                if prod is not None:
                    key = (prod[1], j)
                    out[key] = (out.get(key, 0) + cd * ds[0] * prod[0]) % p
            # Y applied to the coefficient of X
            if r[j]:
                dr = der(j, r)
                prod = mul(s, dr[1])
                if prod is not None:
                    key = (prod[1], i)
                    out[key] = (out.get(key, 0) - sign * cd * dr[0] * prod[0]) % p
    return VectorField(sig, out)


def field_basis(sig: Signature, k: int) -> list:
    """Monomial fields u^r d/du_i of degree k, ordered by i then monomial."""
    cache = sig._cache.setdefault("field_basis", {})
    if k not in cache:
        out = []
        for i in range(sig.a):
            for r in sig.graded_basis(k + sig.weights[i]):
                out.append((r, i))
        cache[k] = tuple(out)
    return [VectorField(sig, {key: 1}) for key in cache[k]]


def field_basis_keys(sig: Signature, k: int) -> tuple:
    field_basis(sig, k)
    return sig._cache["field_basis"][k]


def field_index(sig: Signature, k: int) -> dict:
    cache = sig._cache.setdefault("field_index", {})
    if k not in cache:
        cache[k] = {key: n for n, key in enumerate(field_basis_keys(sig, k))}
    return cache[k]


def to_vector(X: VectorField, k: int) -> np.ndarray:
    """Coordinates of a degree-k field in the monomial basis of W_k."""
    idx = field_index(X.sig, k)
    v = np.zeros(len(idx), dtype=np.int64)
    for key, c in X.terms.items():
        try:
            v[idx[key]] = c
        except KeyError:
            raise ValueError(f"field term {key} does not have degree {k}") from None
    return v


def from_vector(sig: Signature, k: int, v) -> VectorField:
    keys = field_basis_keys(sig, k)
    return VectorField(sig, {keys[n]: int(c) for n, c in enumerate(v) if c})


def w_dimension(sig: Signature, k: int) -> int:
    return len(field_basis_keys(sig, k))
