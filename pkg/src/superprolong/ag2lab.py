"""The ag(2) data and the prolong experiments built on it.

Everything is realized inside the contact superalgebra k(1;N|7) through
generating functions; degree-0 data beyond the four Chevalley generators is
obtained by brackets, never written down by hand.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import numpy as np

from . import linalg
from .contact import ContactStructure
from .dpsuper import DPElement, Signature, contact_signature, parse_element
from .liestruct import (
    Component,
    GradedSubalgebra,
    SCAlgebra,
    bracket_closure,
    center,
    derived_subalgebra,
    generated_submodule,
    is_simple_bruteforce,
    is_simple_criterion,
    simple_ideal,
    singular_vectors,
)
from .prolong import ProlongProblem, cts_prolong, partial_prolong, prolong_step
from .vecfields import VectorField, bracket, to_vector


@dataclass(frozen=True)
class CartanMatrixRecord:
    index: int
    matrix: tuple
    odd: tuple

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)


CARTAN_MATRICES = {
    1: CartanMatrixRecord(1, ((0, 1, 0), (-1, 2, -3), (0, -1, 2)), (True, False, False)),
    2: CartanMatrixRecord(2, ((0, 1, 0), (-1, 0, 3), (0, -1, 2)), (True, True, False)),
    3: CartanMatrixRecord(3, ((0, -3, 1), (-3, 0, 2), (-1, -2, 2)), (True, True, False)),
    4: CartanMatrixRecord(4, ((2, -1, 0), (-3, 0, 2), (0, -1, 1)), (False, True, True)),
}

G2_CARTAN = ((2, -1), (-3, 2))

GENERATORS = {
    "X1+": "-1 v4 w3 + -1 u v1",
    "X2+": "v3 w1",
    "X1-": "-1 v3 w4 + -1 u w1",
    "X2-": "v1 w3",
}

NEG_FUNCTIONS = ("v1", "v3", "v4", "w1", "w3", "w4", "u")

# the center candidate printed next to psl(3); see build_tilde_g0
PRINTED_CENTER = "t + v1 w1 + v3 w3 + 2 v4 w4"

# two printed spellings of the degree-2 function of bj
BJ_H2_SPELLINGS = {
    "item": "t^2 + 2 v1 v3 u w3 + 2 v1 v3 w1 w3 + v1 v3 w1 w4 + v3 v4 w3 w4 + 2 v4 u w1 w3",
    "table": "t^2 + 2 v4 u w1 w3 + v3 v4 w3 w4 + v1 v4 w1 w4 + 2 v1 v3 w1 w3 + 2 v1 v3 u w4",
}

# rows whose printed form is known not to be a homogeneous eigenvector; they
# are compared by monomial-support overlap only
RELAXED_ROWS = {(1, 2, "double-prime"), (1, 3, "double-prime")}

AUX_PRIMES = (1000003, 998244353)


@dataclass
class RealizedModel:
    p: int
    N: int
    sig: Signature
    contact: ContactStructure
    functions: dict
    fields: dict
    g_minus: dict
    g2: Component
    g2_closure_dim: int
    g2_route: str
    lowering: list = field(default_factory=list)
    raising: list = field(default_factory=list)
    torus: list = field(default_factory=list)

    def K(self, f) -> VectorField:
        if isinstance(f, str):
            f = parse_element(self.sig, f)
        return self.contact.field_of(f)

    def gf(self, X: VectorField) -> DPElement:
        return self.contact.generating_function(X)

    @property
    def t_field(self) -> VectorField:
        return self.fields["t"]

    def full_g0(self) -> Component:
        return self.g2 + Component.from_fields(self.sig, 0, [self.t_field])

    def problem(self, g0: Component, max_degree=None, name="") -> ProlongProblem:
        comps = dict(self.g_minus)
        comps[0] = g0
        return ProlongProblem(self.sig, comps, max_degree=max_degree, name=name)


# -- rational reconstruction of the Z-form of g(2) ------------------------------


def rational_reconstruct(a: int, m: int) -> Fraction:
    """The fraction r/s with |r|, |s| < sqrt(m/2) congruent to a mod m."""
    r0, r1, s0, s1 = m, a % m, 0, 1
    while 2 * r1 * r1 > m:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or 2 * s1 * s1 > m:
        raise ValueError(f"{a} mod {m} has no small rational preimage")
    return Fraction(r1, s1)


def _valuation(x: Fraction, p: int) -> int:
    if x == 0:
        return 10**9
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _reduce_fraction(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise ValueError("fraction is not p-integral")
    return x.numerator * pow(x.denominator, p - 2, p) % p


def saturate(rows: list, p: int) -> np.ndarray:
    """Reduction mod p of the p-saturation of the Z_(p)-lattice spanned by ``rows``.

    ``rows`` are equal-length lists of Fractions spanning a Q-space of full
    row rank; the result has the same number of rows and rank over GF(p).
    """
    rows = [list(r) for r in rows]

    def normal(r):
        v = min(_valuation(x, p) for x in r)
        return [x / Fraction(p) ** v for x in r]

    rows = [normal(r) for r in rows]
    while True:
        M = np.array([[_reduce_fraction(x, p) for x in r] for r in rows], dtype=np.int64)
        dep = linalg.nullspace(M.T, p)
        if len(dep) == 0:
            return M
        c = [int(x) for x in dep[0]]
        i = next(j for j, x in enumerate(c) if x)
        comb = [sum(Fraction(c[j]) * rows[j][n] for j in range(len(rows))) for n in range(len(rows[0]))]
        rows[i] = normal(comb)


def _g2_functions_at(q: int) -> dict:
    """Generating functions of the 14 Chevalley-basis elements over GF(q)."""
    sig = contact_signature(q, 1)
    C = ContactStructure(sig)
    K = lambda s: C.field_of(parse_element(sig, s))
    X = {name: K(text) for name, text in GENERATORS.items()}
    for s in "+-":
        X["X3" + s] = bracket(X["X1" + s], X["X2" + s])
        X["X4" + s] = bracket(X["X1" + s], X["X3" + s])
        X["X5" + s] = bracket(X["X1" + s], X["X4" + s])
        X["X6" + s] = bracket(X["X2" + s], X["X5" + s])
    X["H1"] = bracket(X["X1+"], X["X1-"])
    X["H2"] = bracket(X["X2+"], X["X2-"])
    return {name: C.generating_function(Y) for name, Y in X.items()}


@lru_cache(maxsize=None)
def g2_rational_form() -> dict:
    """name -> {monomial: Fraction}, reconstructed at one auxiliary prime and
    confirmed at a second one."""
    q1, q2 = AUX_PRIMES
    f1 = _g2_functions_at(q1)
    f2 = _g2_functions_at(q2)
    out = {}
    for name, f in f1.items():
        rat = {r: rational_reconstruct(c, q1) for r, c in f.terms.items()}
        check = {r: _reduce_fraction(x, q2) for r, x in rat.items()}
        if check != f2[name].terms:
            raise RuntimeError(f"rational form of {name} is not confirmed at a second prime")
        out[name] = rat
    return out


def g2_integral_functions(sig: Signature) -> list:
    """Degree-2 generating functions spanning the mod-p reduction of the Z-form of g(2)."""
    p = sig.p
    rat = g2_rational_form()
    names = sorted(rat)
    monos = sorted({r for f in rat.values() for r in f}, key=sig.sort_key)
    rows = [[rat[n].get(r, Fraction(0)) for r in monos] for n in names]
    M = saturate(rows, p)
    return [DPElement(sig, {r: int(c) for r, c in zip(monos, row) if c}) for row in M]


# -- the model ----------------------------------------------------------------


def build_model(p: int, N: int = 1) -> RealizedModel:
    sig = contact_signature(p, N)
    C = ContactStructure(sig)
    funcs = {"1": parse_element(sig, "1"), "t": parse_element(sig, "t")}
    for name in NEG_FUNCTIONS:
        funcs[name] = parse_element(sig, name)
    for name, text in GENERATORS.items():
        funcs[name] = parse_element(sig, text)
    fields = {name: C.field_of(f) for name, f in funcs.items()}
    for s in "+-":
        fields["X3" + s] = bracket(fields["X1" + s], fields["X2" + s])
        fields["X4" + s] = bracket(fields["X1" + s], fields["X3" + s])
        fields["X5" + s] = bracket(fields["X1" + s], fields["X4" + s])
        fields["X6" + s] = bracket(fields["X2" + s], fields["X5" + s])
    fields["H1"] = bracket(fields["X1+"], fields["X1-"])
    fields["H2"] = bracket(fields["X2+"], fields["X2-"])
    for name in ("X3+", "X4+", "X5+", "X6+", "X3-", "X4-", "X5-", "X6-", "H1", "H2"):
        funcs[name] = C.generating_function(fields[name])
    # bookkeeping
    if fields["1"].degree != -2 or fields["1"].parity != 0:
        raise RuntimeError("g_-2 must be even of degree -2")
    for name in NEG_FUNCTIONS:
        X = fields[name]
        if X.degree != -1 or X.parity != 1:
            raise RuntimeError(f"{name} must give an odd field of degree -1")
    for name in GENERATORS:
        X = fields[name]
        if X.degree != 0 or X.parity != 0:
            raise RuntimeError(f"{name} must give an even field of degree 0")
    g_minus = {
        -2: Component.from_fields(sig, -2, [fields["1"]]),
        -1: Component.from_fields(sig, -1, [fields[n] for n in NEG_FUNCTIONS]),
    }
    closure = bracket_closure([fields[n] for n in GENERATORS], sig)[0]
    if closure.dim == 14:
        g2, route = closure, "closure"
    else:
        g2 = Component.from_fields(sig, 0, [C.field_of(f) for f in g2_integral_functions(sig)])
        route = "integral form"
    if p == 3:
        lowering = [fields["X1-"], fields["X3-"]]
        raising = [fields["X1+"], fields["X3+"]]
        torus = [fields["H1"], fields["t"]]
    else:
        lowering = [fields["X1-"], fields["X2-"]]
        raising = [fields["X1+"], fields["X2+"]]
        torus = [fields["H1"], fields["H2"], fields["t"]]
    return RealizedModel(
        p, N, sig, C, funcs, fields, g_minus, g2, closure.dim, route, lowering, raising, torus
    )


def _eigenvalue(A: VectorField, X: VectorField):
    """c with [A, X] = c X, or None if X is not an eigenvector."""
    p = X.sig.p
    Z = bracket(A, X)
    k = X.degree
    v = to_vector(X, k)
    w = to_vector(Z, k) if not Z.is_zero() else np.zeros_like(v)
    j = int(np.flatnonzero(v)[0])
    c = int(w[j]) * pow(int(v[j]), p - 2, p) % p
    return None if ((w - c * v) % p).any() else c


def verify_chevalley(model: RealizedModel, A=G2_CARTAN) -> dict:
    """Check the Chevalley relations for the realized generators.

    ``H_i = [X_i^+, X_i^-]`` is rescaled so that ``[H_i, X_i^+] = 2 X_i^+``
    (the printed generators carry no normalization); the off-diagonal
    eigenvalues are then compared with ``A`` and its transpose.
    """
    p = model.p
    F = model.fields
    n = len(A)
    idx = [str(i + 1) for i in range(n)]
    A = np.array(A, dtype=np.int64) % p
    report = {"cross": {}, "cartan_commute": True, "eigen": None, "orientation": None, "ok": False}
    for i in idx:
        for j in idx:
            if i != j:
                report["cross"][(i, j)] = bracket(F["X" + i + "+"], F["X" + j + "-"]).is_zero()
    H = [F["H" + i] for i in idx]
    report["cartan_commute"] = all(bracket(H[a], H[b]).is_zero() for a in range(n) for b in range(n))
    E = np.zeros((n, n), dtype=np.int64)
    signs_ok = True
    for a in range(n):
        for b in range(n):
            cp = _eigenvalue(H[a], F["X" + idx[b] + "+"])
            cm = _eigenvalue(H[a], F["X" + idx[b] + "-"])
            if cp is None or cm is None or (cp + cm) % p:
                signs_ok = False
                cp = -1
            E[a, b] = cp
    report["raw"] = E.tolist()
    if not signs_ok or any(E[a, a] == 0 for a in range(n)):
        report["mismatch"] = "some generator is not an eigenvector of some H_i"
        return report
    scale = [2 * pow(int(E[a, a]), p - 2, p) % p for a in range(n)]
    En = np.array([[E[a, b] * scale[a] % p for b in range(n)] for a in range(n)], dtype=np.int64)
    report["eigen"] = En.tolist()
    orient = []
    if np.array_equal(En, A):
        orient.append("matrix")
    if np.array_equal(En, A.T):
        orient.append("transpose")
    report["orientation"] = "+".join(orient) or None
    report["ok"] = bool(orient) and all(report["cross"].values()) and report["cartan_commute"]
    if not report["ok"]:
        report["mismatch"] = f"normalized eigenvalue matrix {En.tolist()} vs {A.tolist()}"
    return report


@dataclass
class TildeG0:
    psl3: Component
    z: Component
    g0: Component
    center: Component
    printed_center_is_central: bool


def build_tilde_g0(model: RealizedModel) -> TildeG0:
    """psl(3) = closure of X1^+-, X3^+- plus the central line of the t-field."""
    if model.p != 3:
        raise ValueError("psl(3) inside g(2) exists only for p = 3")
    F = model.fields
    sig = model.sig
    ps = bracket_closure([F["X1+"], F["X1-"], F["X3+"], F["X3-"]], sig)[0]
    if ps.dim != 7:
        raise RuntimeError(f"psl(3) closure has dimension {ps.dim}, expected 7")
    expected = Component.from_fields(sig, 0, [F[n] for n in ("X1+", "X1-", "X3+", "X3-", "X4+", "X4-", "H1")])
    if expected != ps:
        raise RuntimeError("psl(3) is not spanned by X1, X3, X4, H1")
    z = Component.from_fields(sig, 0, [F["t"]])
    g0 = ps + z
    if g0.dim != 8:
        raise RuntimeError("t-field lies inside psl(3)")
    cen = center(GradedSubalgebra(sig, {0: g0}))[0]
    if cen != z:
        raise RuntimeError(f"center of psl(3)+z has dimension {cen.dim}, expected the t line")
    zp = model.K(PRINTED_CENTER)
    printed = all(bracket(zp, X).is_zero() for X in g0.basis())
    return TildeG0(ps, z, g0, cen, printed)


# -- golden data ----------------------------------------------------------------


@dataclass(frozen=True)
class GoldenRow:
    N: int
    degree: int
    label: str
    text: str


def load_golden(path=None) -> list:
    if path is None:
        text = resources.files("superprolong").joinpath("data/golden_tables.txt").read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, k, label, f = line.split(" ", 3)
        if label not in ("prime", "double-prime"):
            raise ValueError(f"bad label {label!r}")
        rows.append(GoldenRow(int(n), int(k), label, f))
    return rows


def proportional(f: DPElement, g: DPElement):
    """Scalar c with f = c g, or None."""
    if f.is_zero() or g.is_zero():
        return None
    if set(f.terms) != set(g.terms):
        return None
    p = f.sig.p
    r = next(iter(g.terms))
    c = f.terms[r] * pow(g.terms[r], p - 2, p) % p
    return c if all(f.terms[s] == c * g.terms[s] % p for s in g.terms) else None


def normalized(f: DPElement) -> DPElement:
    """Scale so the leading monomial (canonical order) has coefficient 1."""
    if f.is_zero():
        return f
    r, c = f.sorted_terms()[0]
    return f.scale(pow(c, f.sig.p - 2, f.sig.p))


def compare_row(row: GoldenRow, model: RealizedModel, alg: GradedSubalgebra, sing=None) -> dict:
    sig = model.sig
    k = row.degree
    f = parse_element(sig, row.text)
    top = k + 2
    homog = f.is_homogeneous() and f.degree == top
    part = DPElement(sig, {r: c for r, c in f.terms.items() if sig.degree(r) == top})
    if sing is None:
        sing = singular_vectors(alg[k], model.lowering, model.torus)
    gfs = [model.gf(X) for X in sing]
    res = {"row": row, "homogeneous": homog, "inside": False, "match": None, "status": "mismatch"}
    if homog:
        res["inside"] = alg[k].contains(model.K(f))
    for n, g in enumerate(gfs):
        if proportional(part if not homog else f, g) is not None and homog:
            res["match"] = n
            res["status"] = "match"
            return res
    # closest computed vector by shared support, for the diagnostics
    best = max(range(len(gfs)), key=lambda n: len(set(gfs[n].terms) & set(part.terms)), default=None)
    if best is not None:
        g = gfs[best]
        res["closest"] = str(normalized(g))
        res["only_printed"] = sorted(sig.render_monomial(r) for r in set(part.terms) - set(g.terms))
        res["only_computed"] = sorted(sig.render_monomial(r) for r in set(g.terms) - set(part.terms))
        if (row.N, row.degree, row.label) in RELAXED_ROWS and set(g.terms) & set(part.terms):
            res["status"] = "relaxed"
            res["match"] = best
    return res


# -- experiments ----------------------------------------------------------------


@dataclass
class LabReport:
    p: int
    N: int
    mode: str
    route: str
    algebra: GradedSubalgebra
    prolong: GradedSubalgebra
    sdims: dict
    total: tuple
    lowest_weight: dict
    criterion: dict
    bruteforce: object
    golden: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)


def _acting(model: RealizedModel, tilde: TildeG0 | None) -> list:
    if tilde is not None:
        return tilde.g0.basis()
    return model.full_g0().basis()


def _lowest_weight(model, alg) -> dict:
    out = {}
    for k in alg.degrees():
        sv = singular_vectors(alg[k], model.lowering, model.torus)
        out[k] = [normalized(model.gf(X)) for X in sv]
    return out


def _bruteforce(alg, cap=200):
    if alg.dim() > cap:
        return None
    return is_simple_bruteforce(alg, cap)


def experiment_bj(p: int, N: int = 1, route: str = "tilde-g0", golden=True, bruteforce_cap=200, log=None, max_degree=None) -> LabReport:
    if p not in (3, 5, 7):
        raise ValueError("experiments are defined for p in {3, 5, 7}")
    if not 1 <= N <= 3:
        raise ValueError("N must be 1, 2 or 3")
    if route not in ("full-g0", "tilde-g0"):
        raise ValueError(f"unknown route {route!r}")
    if route == "tilde-g0" and p != 3:
        raise ValueError("the tilde-g0 route exists only for p = 3")
    timings = {}
    t0 = time.perf_counter()
    model = build_model(p, N)
    tilde = build_tilde_g0(model) if p == 3 else None
    timings["model"] = time.perf_counter() - t0
    g0 = tilde.g0 if route == "tilde-g0" else model.full_g0()
    t0 = time.perf_counter()
    prol = cts_prolong(model.problem(g0, max_degree=max_degree, name=f"prolong p={p} N={N} {route}"), log=log)
    timings["prolong"] = time.perf_counter() - t0
    alg = prol
    if route == "full-g0" and p == 3:
        t0 = time.perf_counter()
        alg = simple_ideal(prol, name=f"Bj(1;{N}|7)", lowering=model.lowering, torus=model.torus,
                           bruteforce_cap=bruteforce_cap)
        timings["simple_ideal"] = time.perf_counter() - t0
    alg.name = f"Bj(1;{N}|7)" if p == 3 else "ag(2)"
    t0 = time.perf_counter()
    crit = is_simple_criterion(alg, acting=_acting(model, tilde) if p == 3 else None,
                               lowering=model.lowering, torus=model.torus)
    timings["criterion"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    known = getattr(alg, "simplicity", None)
    brute = known["bruteforce"] if known and known["bruteforce"] is not None else _bruteforce(alg, bruteforce_cap)
    timings["bruteforce"] = time.perf_counter() - t0
    lw = _lowest_weight(model, alg)
    rows = []
    if golden and p == 3:
        for row in load_golden():
            if row.N == N:
                rows.append(compare_row(row, model, alg))
    sd = {k: alg.sdim(k) for k in alg.degrees()}
    return LabReport(p, N, "full", route, alg, prol, sd, alg.sdim(), lw, crit, brute, rows,
                     extra={"model": model, "tilde": tilde, "warnings": list(prol.warnings),
                            "transitive_tail": prol.transitive_tail,
                            "prolong_g0_dim": prol.dim(0)},
                     timings=timings)


def degree_one_split(model: RealizedModel, tilde: TildeG0, g1: Component) -> dict:
    """The two singular vectors of g_1 and the submodules they generate."""
    sing = singular_vectors(g1, model.lowering, model.torus)
    acting = tilde.g0.basis()
    subs = [generated_submodule([X], acting, 1, model.sig) for X in sing]
    out = {}
    for X, S in zip(sing, subs):
        key = "prime" if S.dim == 1 else "double-prime"
        out[key] = (X, S)
    return out


def experiment_bj_partial(variant: str, p: int = 3, N: int = 1, bruteforce_cap=200, log=None, max_degree=None) -> LabReport:
    if p != 3:
        raise ValueError("partial prolongs are defined here for p = 3")
    if variant not in ("prime", "double-prime"):
        raise ValueError("variant must be 'prime' or 'double-prime'")
    model = build_model(p, N)
    tilde = build_tilde_g0(model)
    problem = model.problem(tilde.g0, max_degree=max_degree, name=f"partial {variant} N={N}")
    g1 = prolong_step(model.sig, 1, model.g_minus[-1].basis(), tilde.g0)
    split = degree_one_split(model, tilde, g1)
    X, h1 = split[variant]
    alg = partial_prolong(problem, h1, log=log, require_surjective=(variant == "double-prime"))
    alg.name = "bj" if variant == "double-prime" else "bj'"
    crit = is_simple_criterion(alg, acting=tilde.g0.basis(), lowering=model.lowering, torus=model.torus)
    brute = _bruteforce(alg, bruteforce_cap)
    extra = {"model": model, "tilde": tilde, "h1_generator": normalized(model.gf(X)),
             "h1_sdim": h1.sdim(), "surjective": alg.surjective, "bracket_image_dim": alg.bracket_image_dim}
    if variant == "double-prime" and alg.dim(2):
        h2 = normalized(model.gf(alg[2].basis()[0]))
        extra["h2"] = h2
        extra["h2_spellings"] = {
            name: proportional(parse_element(model.sig, text), h2) is not None
            for name, text in BJ_H2_SPELLINGS.items()
        }
        extra["even_split"] = even_part_split(alg)
    sd = {k: alg.sdim(k) for k in alg.degrees()}
    return LabReport(p, N, variant, "tilde-g0", alg, alg, sd, alg.sdim(), _lowest_weight(model, alg),
                     crit, brute, [], extra=extra)


def even_part_split(alg: GradedSubalgebra) -> dict:
    """Derived algebra of the even part and its minimal ideals."""
    sig = alg.sig
    even = GradedSubalgebra(
        sig,
        {k: c for k, c in alg.components.items() if all(x == 0 for x in c.parities())},
        name="even",
    )
    der = derived_subalgebra(even, "even'")
    sc = SCAlgebra.from_graded(der)
    E = np.eye(sc.dim, dtype=np.int64)
    ideals = []
    for i in range(sc.dim):
        I = sc.ideal_closure(E[i : i + 1])
        if not any(len(J) == len(I) and np.array_equal(J, I) for J in ideals):
            ideals.append(I)
    minimal = [I for I in ideals if not any(len(J) < len(I) and linalg.rank(np.vstack([I, J]), sc.p) == len(I) for J in ideals)]
    minimal.sort(key=len)
    total = linalg.rank(np.vstack(minimal), sc.p) if minimal else 0
    simple = [is_simple_bruteforce(sc.subalgebra(I)) for I in minimal]
    return {
        "even_dim": even.dim(),
        "derived_dim": der.dim(),
        "ideal_dims": [len(I) for I in minimal],
        "direct": total == sum(len(I) for I in minimal) == sc.dim,
        "simple": simple,
    }


def embed_component(comp: Component, model_from: RealizedModel, model_to: RealizedModel) -> Component:
    """Carry a component into a model with larger N via its generating functions."""
    if model_to.N < model_from.N:
        raise ValueError("can only embed into a model with N at least as large")
    sig = model_to.sig
    fields = []
    for X in comp.basis():
        f = model_from.gf(X)
        fields.append(model_to.contact.field_of(DPElement(sig, dict(f.terms))))
    return Component.from_fields(sig, comp.degree, fields)


def same_components(alg_a, model_a, alg_b, model_b, upto: int) -> dict:
    """Per-degree equality of two prolongs (N_a <= N_b) for degrees <= upto."""
    out = {}
    for k in range(-2, upto + 1):
        out[k] = embed_component(alg_a[k], model_a, model_b) == alg_b[k]
    return out
