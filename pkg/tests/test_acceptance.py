"""Acceptance criteria 1-10; each test records one PASS/FAIL line for the summary."""

import random
from math import comb

import numpy as np
from conftest import bj_report, model, partial_report

from superprolong import ag2lab
from superprolong.contact import ContactStructure, d
from superprolong.dpsuper import DPElement, contact_signature, special_derive
from superprolong.liestruct import (
    SCAlgebra,
    _component_map,
    decompose_module,
    ideal_closure,
    is_simple_bruteforce,
    is_simple_criterion,
)
from superprolong.prolong import cts_prolong, prolong_step
from superprolong.vecfields import bracket, from_vector, w_dimension


def _finish(record, n, failures):
    record(n, not failures, "; ".join(failures))
    assert not failures, failures


def _golden_failures(rep, rows=None):
    out = []
    for g in rep.golden:
        row = g["row"]
        if rows is not None and (row.degree, row.label) not in rows:
            continue
        if g["status"] not in ("match", "relaxed"):
            if g.get("only_printed") or g.get("only_computed"):
                why = f"printed-only {g.get('only_printed')} computed-only {g.get('only_computed')}"
            else:
                why = f"same monomials, coefficients not proportional; computed {g.get('closest')}"
            out.append(f"N={row.N} V{row.degree} {row.label}: {why}")
    return out


def test_criterion_01_ag2(record):
    failures = []
    for p in (5, 7):
        m = model(p)
        alg = cts_prolong(m.problem(m.full_g0()))
        dims = [alg.dim(k) for k in range(-2, 3)]
        if dims != [1, 7, 15, 7, 1] or alg.top != 2:
            failures.append(f"p={p} dims {alg.dims()}")
        if alg.sdim() != (17, 14):
            failures.append(f"p={p} sdim {alg.sdim()}")
        if prolong_step(m.sig, 3, m.g_minus[-1].basis(), alg[2]).dim != 0:
            failures.append(f"p={p} degree 3 nonzero")
    _finish(record, 1, failures)


def test_criterion_02_bj_dimensions(record):
    rep = bj_report(3)
    alg = rep.algebra
    expected = [(1, 0), (0, 7), (8, 0), (0, 8), (8, 0), (0, 8), (7, 0), (0, 1)]
    failures = []
    if [alg.sdim(k) for k in range(-2, 6)] != expected:
        failures.append(f"sdims {[alg.sdim(k) for k in range(-2, 6)]}")
    if alg.sdim() != (24, 24):
        failures.append(f"total {alg.sdim()}")
    if alg.top != 2 * 3 - 1:
        failures.append(f"top {alg.top}")
    _finish(record, 2, failures)


def test_criterion_03_degree_one_split(record):
    rep = bj_report(3)
    m = rep.extra["model"]
    g1 = rep.algebra[1]
    dec = decompose_module(g1, rep.extra["tilde"].g0.basis(), m.lowering, m.torus)
    failures = []
    if not dec["direct"] or sorted(dec["sdims"]) != [(0, 1), (0, 7)]:
        failures.append(f"decomposition {dec['sdims']} direct={dec['direct']}")
    failures += _golden_failures(rep, {(1, "prime"), (1, "double-prime")})
    statuses = {(g["row"].degree, g["row"].label): g["status"] for g in rep.golden}
    if statuses.get((1, "prime")) != "match" or statuses.get((1, "double-prime")) != "match":
        failures.append(f"V1 rows {statuses.get((1, 'prime'))}, {statuses.get((1, 'double-prime'))}")
    _finish(record, 3, failures)


def test_criterion_04_simplicity(record):
    rep = bj_report(3)
    alg = rep.algebra
    m = rep.extra["model"]
    tilde = rep.extra["tilde"]
    crit = is_simple_criterion(alg, acting=tilde.g0.basis(), lowering=m.lowering, torus=m.torus)
    failures = []
    if not crit["simple"] or not all(crit["clauses"].values()):
        failures.append(f"criterion {crit['clauses']}")
    if is_simple_bruteforce(alg) is not True:
        failures.append("brute force")
    # the three facts behind the simplicity argument, checked directly
    if _component_map(alg[1].basis(), alg[-1], alg[0]) != tilde.g0:
        failures.append("[g1, g-1] != tilde g0")
    dec = decompose_module(alg[-1], tilde.g0.basis(), m.lowering, m.torus)
    if not (dec["direct"] and dec["sdims"] == [(0, 7)]):
        failures.append("g-1 reducible")
    if _component_map(alg[-1].basis(), alg[-1], alg[-2]) != alg[-2]:
        failures.append("[g-1, g-1] != g-2")
    _finish(record, 4, failures)


def test_criterion_05_partial_prolongs(record):
    failures = []
    prime = partial_report("prime")
    if prime.algebra.dim(2) != 0:
        failures.append(f"g1' prolong has degree-2 dim {prime.algebra.dim(2)}")
    bj = partial_report("double-prime")
    alg = bj.algebra
    if alg.dim(2) != 1 or alg.dim(3) != 0:
        failures.append(f"h2={alg.dim(2)} h3={alg.dim(3)}")
    if alg.sdim() != (10, 14):
        failures.append(f"sdim {alg.sdim()}")
    if not (bj.criterion["simple"] and bj.bruteforce is True):
        failures.append(f"simplicity {bj.criterion} brute {bj.bruteforce}")
    split = bj.extra["even_split"]
    if not (split["even_dim"] == 10 and split["ideal_dims"] == [3, 7] and split["direct"] and all(split["simple"])):
        failures.append(f"even split {split}")
    _finish(record, 5, failures)


def test_criterion_06_n2(record):
    rep = bj_report(3, 2)
    alg = rep.algebra
    failures = []
    if alg.top != 17:
        failures.append(f"top {alg.top}")
    if alg.dim(16) != 7 or alg.dim(17) != 1:
        failures.append(f"dims 16,17 = {alg.dim(16)}, {alg.dim(17)}")
    if len(rep.golden) != 8:
        failures.append(f"{len(rep.golden)} golden rows")
    failures += _golden_failures(rep)
    if any(g["status"] != "match" for g in rep.golden):
        failures.append("some N=2 row only matched in relaxed form")
    r1 = bj_report(3, 1)
    same = ag2lab.same_components(r1.algebra, r1.extra["model"], alg, rep.extra["model"], 3)
    if not all(same.values()):
        failures.append(f"degrees <= 3 differ from N=1: {same}")
    _finish(record, 6, failures)


def test_criterion_07_n3(record):
    rep = bj_report(3, 3)
    alg = rep.algebra
    failures = []
    r2 = bj_report(3, 2)
    same = ag2lab.same_components(r2.algebra, r2.extra["model"], alg, rep.extra["model"], 15)
    if not all(same.values()):
        failures.append(f"degrees <= 15 differ from N=2: {[k for k, v in same.items() if not v]}")
    if alg.top != 53:
        failures.append(f"top {alg.top}")
    wanted = {(16, "prime"), (16, "double-prime"), (17, "prime"), (17, "double-prime"), (52, "double-prime"), (53, "prime")}
    present = {(g["row"].degree, g["row"].label) for g in rep.golden}
    if present != wanted:
        failures.append(f"golden rows present {sorted(present)}")
    failures += _golden_failures(rep, wanted)
    _finish(record, 7, failures)


def test_criterion_08_route_equivalence(record):
    failures = []
    for N in (1, 2):
        full = bj_report(3, N, "full-g0", golden=False)
        tilde = bj_report(3, N)
        if full.algebra != tilde.algebra:
            failures.append(f"N={N}: simple ideal differs from the tilde-g0 prolong")
        if full.prolong.dim(0) != 15 or full.algebra.dim(0) != 8:
            failures.append(f"N={N}: degree-0 dims {full.prolong.dim(0)}, {full.algebra.dim(0)}")
        if N == 1:
            # oracle: the smallest ideal containing g_-2, without derived passes
            m = full.extra["model"]
            oracle = ideal_closure(full.prolong, [m.fields["1"]])
            if oracle != full.algebra:
                failures.append("minimal ideal containing g_-2 differs")
    _finish(record, 8, failures)


def test_criterion_09_bj_stable_in_n(record):
    r1, r2 = partial_report("double-prime", 1), partial_report("double-prime", 2)
    failures = []
    if r2.algebra.degrees() != r1.algebra.degrees():
        failures.append(f"degrees {r1.algebra.degrees()} vs {r2.algebra.degrees()}")
    same = ag2lab.same_components(r1.algebra, r1.extra["model"], r2.algebra, r2.extra["model"], 3)
    if not all(same.values()):
        failures.append(f"components differ: {same}")
    _finish(record, 9, failures)


def _dp_checks(rng, failures):
    sig = contact_signature(3, 1)
    monos = sig.all_monomials()
    elems = [DPElement.monomial(sig, r) for r in monos]
    for _ in range(300):
        f, g, h = (rng.choice(elems) for _ in range(3))
        sign = -1 if f.parity & g.parity else 1
        if f * g != (g * f).scale(sign):
            failures.append(f"supercommutativity {f}, {g}")
            break
        if (f * g) * h != f * (g * h):
            failures.append(f"associativity {f}, {g}, {h}")
            break
    sig2 = contact_signature(3, 2)
    for a in range(9):
        for b in range(9):
            prod = DPElement.var(sig2, "t", a) * DPElement.var(sig2, "t", b) if a and b else None
            if prod is None:
                continue
            expected = DPElement.var(sig2, "t", a + b).scale(comb(a + b, a)) if a + b <= 8 else DPElement(sig2)
            if prod != expected:
                failures.append(f"Lucas closure t^({a}) t^({b})")
    for _ in range(200):
        i, j = rng.randrange(8), rng.randrange(8)
        f, g = rng.choice(elems), rng.choice(elems)
        s = -1 if sig.parities[i] and f.parity else 1
        if special_derive(i, f * g) != special_derive(i, f) * g + (f * special_derive(i, g)).scale(s):
            failures.append(f"Leibniz d{i} on {f}, {g}")
            break
        s = -1 if sig.parities[i] and sig.parities[j] else 1
        if special_derive(i, special_derive(j, f)) != special_derive(j, special_derive(i, f)).scale(s):
            failures.append(f"derivations {i}, {j} do not supercommute")
            break


def _contact_checks(failures):
    sig = contact_signature(3, 1)
    C = ContactStructure(sig)
    for r in sig.all_monomials():
        f = DPElement.monomial(sig, r)
        if not d(d(f)).is_zero():
            failures.append(f"d d {f}")
        if C.pairing(C.field_of(f)) != f:
            failures.append(f"alpha(field_of({f}))")
    bases = {k: C.contact_basis(k) for k in range(-2, 4)}
    for a in range(-2, 4):
        for b in range(a, 4):
            for X in bases[a]:
                for Y in bases[b]:
                    Z = bracket(X, Y)
                    if not Z.is_zero() and not C.is_contact(Z):
                        failures.append(f"[{X}, {Y}] not contact")
                        return


def _jacobi_checks(rng, failures):
    sc = SCAlgebra.from_graded(bj_report(3).algebra)
    triples = [tuple(rng.randrange(sc.dim) for _ in range(3)) for _ in range(250)]
    bad = sc.jacobi_defects(triples)
    if bad:
        failures.append(f"super-Jacobi fails on {bad} of 250 triples")


def _maximality_checks(rng, failures):
    m = model(3)
    tilde = ag2lab.build_tilde_g0(m)
    border = m.g_minus[-1].basis()
    g1 = prolong_step(m.sig, 1, border, tilde.g0)
    n = w_dimension(m.sig, 1)
    for _ in range(5):
        order = list(range(n))
        rng.shuffle(order)
        if prolong_step(m.sig, 1, border, tilde.g0, order=order) != g1:
            failures.append("prolong step depends on the basis order")
            break
    for _ in range(30):
        X = from_vector(m.sig, 1, np.array([rng.randrange(3) for _ in range(n)]))
        ok = all(tilde.g0.contains(bracket(X, Y)) for Y in border)
        if ok != g1.contains(X):
            failures.append("prolong step is not the full solution set")
            break


def test_criterion_10_property_suites(record):
    rng = random.Random(20261018)
    failures = []
    _dp_checks(rng, failures)
    _contact_checks(failures)
    _jacobi_checks(rng, failures)
    _maximality_checks(rng, failures)
    for p in (3, 5, 7):
        rep = ag2lab.verify_chevalley(model(p))
        if not rep["ok"]:
            failures.append(f"Chevalley p={p}: {rep.get('mismatch')}")
    _finish(record, 10, failures)
