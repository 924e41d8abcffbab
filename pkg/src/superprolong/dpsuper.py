"""Divided-power supercommutative algebras O(m;N|n).

Monomials are plain exponent tuples ``r`` of length ``m + n``; even entries
range over ``[0, p**N_i)``, odd entries over ``{0, 1}``.  The even
indeterminates come first.  Elements are sparse dicts monomial -> residue.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .gfp import binom_lucas, check_modulus


@dataclass(frozen=True)
class Signature:
    """Shape of O(m;N|n) together with a Z-grading of the indeterminates."""

    p: int
    N: tuple
    n: int
    names: tuple = None
    weights: tuple = None
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        check_modulus(self.p)
        N = tuple(int(x) for x in self.N)
        if any(x < 1 for x in N):
            raise ValueError("heights N_i must be positive")
        object.__setattr__(self, "N", N)
        a = len(N) + self.n
        names = self.names
        if names is None:
            names = tuple(f"x{i}" for i in range(len(N))) + tuple(f"y{j}" for j in range(self.n))
        names = tuple(names)
        if len(names) != a or len(set(names)) != a:
            raise ValueError("need one distinct name per indeterminate")
        object.__setattr__(self, "names", names)
        weights = (1,) * a if self.weights is None else tuple(int(w) for w in self.weights)
        if len(weights) != a:
            raise ValueError("need one weight per indeterminate")
        object.__setattr__(self, "weights", weights)

    @property
    def m(self) -> int:
        return len(self.N)

    @property
    def a(self) -> int:
        return self.m + self.n

    @cached_property
    def parities(self) -> tuple:
        return (0,) * self.m + (1,) * self.n

    @cached_property
    def caps(self) -> tuple:
        """Largest allowed exponent of every indeterminate."""
        return tuple(self.p**k - 1 for k in self.N) + (1,) * self.n

    def index(self, name: str) -> int:
        return self.names.index(name)

    @cached_property
    def one(self) -> tuple:
        return (0,) * self.a

    def generator(self, i: int, k: int = 1) -> tuple:
        if not 0 <= k <= self.caps[i]:
            raise ValueError(f"exponent {k} out of range for {self.names[i]}")
        r = [0] * self.a
        r[i] = k
        return tuple(r)

    @cached_property
    def dimension(self) -> int:
        out = 2**self.n
        for k in self.N:
            out *= self.p**k
        return out

    @cached_property
    def max_degree(self) -> int:
        return sum(c * w for c, w in zip(self.caps, self.weights))

    @cached_property
    def min_weight(self) -> int:
        return min(self.weights)

    # -- monomial level ------------------------------------------------

    def degree(self, r: tuple) -> int:
        return sum(e * w for e, w in zip(r, self.weights))

    def parity(self, r: tuple) -> int:
        return sum(r[self.m:]) & 1

    def mono_mul(self, r: tuple, s: tuple):
        """Return (coefficient, r+s) for u^r u^s, or None when it vanishes."""
        key = (r, s)
        cache = self._cache.setdefault("mul", {})
        try:
            return cache[key]
        except KeyError:
            pass
        p, m = self.p, self.m
        coef = 1
        out = list(r)
        for i in range(m):
            if s[i]:
                c = binom_lucas(r[i] + s[i], r[i], p)
                if not c:
                    cache[key] = None
                    return None
                coef = coef * c % p
                out[i] = r[i] + s[i]
        swaps = 0
        ones_after = 0
        # walk odd positions right to left counting odd factors of r that s must pass
        for i in range(self.a - 1, m - 1, -1):
            if s[i]:
                if r[i]:
                    cache[key] = None
                    return None
                swaps += ones_after
                out[i] = 1
            if r[i]:
                ones_after += 1
        if swaps & 1:
            coef = p - coef
        res = (coef, tuple(out))
        cache[key] = res
        return res

    def mono_derive(self, i: int, r: tuple):
        """Special derivation d/du_i of u^r as (coefficient, monomial) or None."""
        cache = self._cache.setdefault("der", {})
        key = (i, r)
        try:
            return cache[key]
        except KeyError:
            pass
        e = r[i]
        if not e:
            res = None
        else:
            out = r[:i] + (e - 1,) + r[i + 1 :]
            m = self.m
            if i < m:
                res = (1, out)
            else:
                before = sum(r[m:i])
                res = ((self.p - 1 if before & 1 else 1), out)
        cache[key] = res
        return res

    def sort_key(self, r: tuple):
        return (self.degree(r), tuple(-e for e in r))

    def render_monomial(self, r: tuple) -> str:
        parts = []
        for i, e in enumerate(r):
            if not e:
                continue
            if i < self.m and e > 1:
                parts.append(f"{self.names[i]}^({e})")
            else:
                parts.append(self.names[i])
        return " ".join(parts) if parts else "1"

    def graded_basis(self, d: int) -> list:
        """All monomials of weighted degree exactly d, in canonical order."""
        cache = self._cache.setdefault("basis", {})
        if d in cache:
            return list(cache[d])
        out = []
        if d >= 0 or any(w <= 0 for w in self.weights):
            ws = self.weights
            bound = max(d, 0) + sum(-w for w in ws if w < 0)
            ranges = [
                range(min(c, bound // w) + 1) if w > 0 else range(c + 1)
                for c, w in zip(self.caps, ws)
            ]
            # enumerate even exponents, then odd subsets, pruning by degree
            for ev in itertools.product(*ranges[: self.m]):
                de = sum(e * w for e, w in zip(ev, ws))
                if de > d:
                    continue
                for od in itertools.product((0, 1), repeat=self.n):
                    if de + sum(e * w for e, w in zip(od, ws[self.m :])) == d:
                        out.append(ev + od)
        out.sort(key=self.sort_key)
        cache[d] = tuple(out)
        return list(out)

    def all_monomials(self) -> list:
        out = []
        for d in range(self.max_degree + 1):
            out.extend(self.graded_basis(d))
        return out


def contact_signature(p: int, N: int = 1) -> Signature:
    """O(1;N|7) with t of weight 2 and the odd v1,v3,v4,w1,w3,w4,u of weight 1."""
    return Signature(
        p=p,
        N=(N,),
        n=7,
        names=("t", "v1", "v3", "v4", "w1", "w3", "w4", "u"),
        weights=(2, 1, 1, 1, 1, 1, 1, 1),
    )


class DPElement:
    """A GF(p)-linear combination of divided-power monomials."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms=None):
        self.sig = sig
        p = sig.p
        clean = {}
        if terms:
            for r, c in terms.items():
                c %= p
                if c:
                    clean[tuple(r)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, sig, r, coef=1):
        return cls(sig, {tuple(r): coef})

    @classmethod
    def constant(cls, sig, c=1):
        return cls(sig, {sig.one: c})

    @classmethod
    def var(cls, sig, name, k=1):
        return cls(sig, {sig.generator(sig.index(name), k): 1})

    def _check(self, other):
        if not isinstance(other, DPElement):
            raise TypeError(f"expected DPElement, got {type(other).__name__}")
        if other.sig != self.sig:
            raise ValueError("signature mismatch")

    def __add__(self, other):
        if isinstance(other, int):
            other = DPElement.constant(self.sig, other)
        self._check(other)
        out = dict(self.terms)
        p = self.sig.p
        for r, c in other.terms.items():
            out[r] = (out.get(r, 0) + c) % p
        return DPElement(self.sig, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.sig.p
        return DPElement(self.sig, {r: p - c for r, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = DPElement.constant(self.sig, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "DPElement":
        return DPElement(self.sig, {r: v * c for r, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        return dp_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            return self == DPElement.constant(self.sig, other)
        if not isinstance(other, DPElement):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {self.sig.degree(r) for r in self.terms}

    def parities(self) -> set:
        return {self.sig.parity(r) for r in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1 and len(self.parities()) <= 1

    @property
    def degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("element is not degree-homogeneous")
        return ds.pop()

    @property
    def parity(self) -> int:
        ps = self.parities()
        if len(ps) > 1:
            raise ValueError("element is not parity-homogeneous")
        return ps.pop() if ps else 0

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: self.sig.sort_key(kv[0]))

    def __str__(self):
        return render_element(self)

    def __repr__(self):
        return f"DPElement({render_element(self)!r})"


def render_element(f: DPElement) -> str:
    if not f.terms:
        return "0"
    out = []
    for r, c in f.sorted_terms():
        mono = f.sig.render_monomial(r)
        if mono == "1":
            out.append(str(c))
        elif c == 1:
            out.append(mono)
        else:
            out.append(f"{c} {mono}")
    return " + ".join(out)


def dp_mul(f: DPElement, g: DPElement) -> DPElement:
    if f.sig != g.sig:
        raise ValueError("signature mismatch")
    sig = f.sig
    p = sig.p
    out = {}
    mul = sig.mono_mul
    for r, a in f.terms.items():
        for s, b in g.terms.items():
            res = mul(r, s)
            if res is None:
                continue
            c, rs = res
            out[rs] = (out.get(rs, 0) + a * b * c) % p
    return DPElement(sig, out)


def special_derive(i: int, f: DPElement) -> DPElement:
    sig = f.sig
    if not 0 <= i < sig.a:
        raise IndexError(f"no indeterminate with index {i}")
    out = {}
    p = sig.p
    for r, c in f.terms.items():
        res = sig.mono_derive(i, r)
        if res is None:
            continue
        s, rr = res
        out[rr] = (out.get(rr, 0) + s * c) % p
    return DPElement(sig, out)


def graded_basis(sig: Signature, d: int) -> list:
    return sig.graded_basis(d)


def parse_element(sig: Signature, text: str) -> DPElement:
    """Parse ``c f1 f2 ... + ...`` where each factor is ``name``, ``name^(k)``
    or ``name^k`` (both exponent forms denote the divided power).

    Factors are multiplied in the order written, so odd factors out of
    canonical order pick up the Koszul sign.
    """
    text = text.strip()
    if text == "0":
        return DPElement(sig)
    total = DPElement(sig)
    for term in text.split("+"):
        tokens = term.split()
        if not tokens:
            raise ValueError(f"empty term in {text!r}")
        coef = 1
        if tokens[0].lstrip("-").isdigit():
            coef = int(tokens[0])
            tokens = tokens[1:]
        piece = DPElement.constant(sig, coef)
        for tok in tokens:
            if "^" in tok:
                name, exp = tok.split("^", 1)
                k = int(exp.strip("()"))
            else:
                name, k = tok, 1
            if name not in sig.names:
                raise ValueError(f"unknown indeterminate {name!r}")
            i = sig.index(name)
            if k > sig.caps[i]:
                piece = DPElement(sig)
                break
            piece = piece * DPElement.var(sig, name, k)
        total = total + piece
    return total
