from fractions import Fraction

import pytest
from conftest import bj_report, model, partial_report

from superprolong import ag2lab, linalg
from superprolong.dpsuper import parse_element
from superprolong.liestruct import GradedSubalgebra


def test_cartan_records():
    assert sorted(ag2lab.CARTAN_MATRICES) == [1, 2, 3, 4]
    for rec in ag2lab.CARTAN_MATRICES.values():
        A = rec.as_array()
        assert A.shape == (3, 3) and len(rec.odd) == 3
        # an odd simple root with zero diagonal entry
        for i, odd in enumerate(rec.odd):
            if not odd:
                assert A[i, i] == 2


@pytest.mark.parametrize("p", [3, 5, 7])
def test_chevalley_relations(p):
    rep = ag2lab.verify_chevalley(model(p))
    assert rep["ok"], rep.get("mismatch")
    assert rep["orientation"] == "transpose"
    assert all(rep["cross"].values()) and rep["cartan_commute"]


def test_chevalley_mismatch_is_reported():
    rep = ag2lab.verify_chevalley(model(5), A=((2, -1), (-1, 2)))
    assert not rep["ok"] and "mismatch" in rep


def test_rational_reconstruction():
    m = 1000003
    for x in (Fraction(1, 2), Fraction(-3, 4), Fraction(5), Fraction(-7, 9)):
        a = x.numerator * pow(x.denominator, -1, m) % m
        assert ag2lab.rational_reconstruct(a, m) == x


def test_saturate_rescues_dependent_reduction():
    # rows (1, 1) and (1, 1 + 3) are independent over Q but equal mod 3;
    # saturation replaces the difference (0, 3) by (0, 1)
    M = ag2lab.saturate([[Fraction(1), Fraction(1)], [Fraction(1), Fraction(4)]], 3)
    assert M.shape == (2, 2)
    assert linalg.rank(M, 3) == 2


def test_integral_g2_at_p3_is_closed_and_14_dimensional():
    m = model(3)
    assert m.g2.dim == 14
    assert GradedSubalgebra(m.sig, {0: m.g2}).check_closure() == []
    # the reduction contains the 10-dimensional closure of the generators
    from superprolong.liestruct import bracket_closure

    closure = bracket_closure([m.fields[n] for n in ag2lab.GENERATORS], m.sig)[0]
    assert closure.dim == 10 and closure.issubspace(m.g2)


def test_model_bookkeeping():
    m = model(5)
    assert m.fields["1"].degree == -2
    assert m.g_minus[-1].sdim() == (0, 7)
    assert m.full_g0().dim == 15
    assert m.K("t") == m.t_field
    assert m.gf(m.fields["X2+"]) == parse_element(m.sig, "v3 w1")


def test_golden_file():
    rows = ag2lab.load_golden()
    assert len(rows) == 22
    assert {r.N for r in rows} == {1, 2, 3}
    inhomogeneous = set()
    for r in rows:
        f = parse_element(model(3, r.N).sig, r.text)
        if not (f.is_homogeneous() and f.degree == r.degree + 2):
            inhomogeneous.add((r.N, r.degree, r.label))
    assert inhomogeneous == {(1, 3, "double-prime"), (3, 52, "double-prime")}


def test_golden_file_rejects_bad_label(tmp_path):
    bad = tmp_path / "g.txt"
    bad.write_text("1 1 triple-prime t\n", encoding="utf-8")
    with pytest.raises(ValueError):
        ag2lab.load_golden(bad)


def test_proportional_and_normalized():
    sig = model(3).sig
    f = parse_element(sig, "t w4 + v1 w1 w4")
    assert ag2lab.proportional(f.scale(2), f) == 2
    assert ag2lab.proportional(f, parse_element(sig, "t w4")) is None
    assert ag2lab.normalized(f.scale(2)) == f


def test_tilde_g0_requires_p3():
    with pytest.raises(ValueError):
        ag2lab.build_tilde_g0(model(5))


def test_degree_one_split():
    m = model(3)
    t = ag2lab.build_tilde_g0(m)
    alg = bj_report(3).algebra
    split = ag2lab.degree_one_split(m, t, alg[1])
    assert split["prime"][1].sdim() == (0, 1)
    assert split["double-prime"][1].sdim() == (0, 7)


def test_experiment_argument_checks():
    with pytest.raises(ValueError):
        ag2lab.experiment_bj(11, 1)
    with pytest.raises(ValueError):
        ag2lab.experiment_bj(5, 1, "tilde-g0")
    with pytest.raises(ValueError):
        ag2lab.experiment_bj_partial("triple", 3)
    with pytest.raises(ValueError):
        ag2lab.experiment_bj_partial("prime", 5)


def test_partial_prime():
    rep = partial_report("prime")
    assert rep.algebra.dim(2) == 0
    assert rep.extra["surjective"] is False and rep.extra["bracket_image_dim"] == 7
    assert rep.criterion["clauses"]["c"] is False and rep.bruteforce is False


def test_partial_double_prime_h2_spelling():
    rep = partial_report("double-prime")
    assert rep.extra["h2_spellings"] == {"item": False, "table": True}
    assert rep.extra["h2"] == ag2lab.normalized(parse_element(model(3).sig, ag2lab.BJ_H2_SPELLINGS["table"]))


def test_relaxed_rows_at_n1():
    statuses = {(g["row"].degree, g["row"].label): g["status"] for g in bj_report(3).golden}
    assert statuses[(2, "double-prime")] == "relaxed"
    assert statuses[(3, "double-prime")] == "relaxed"
    assert [k for k, v in statuses.items() if v == "mismatch"] == []


def test_embedding_requires_larger_n():
    with pytest.raises(ValueError):
        ag2lab.embed_component(model(3, 2).g_minus[-1], model(3, 2), model(3, 1))


def test_n_stability_of_low_degrees():
    r1, r2 = bj_report(3, 1), bj_report(3, 2, golden=False)
    same = ag2lab.same_components(r1.algebra, model(3, 1), r2.algebra, model(3, 2), 5)
    assert all(same[k] for k in range(-2, 4))
    # degree 4 differs: N=1 stops at degree 5 while N=2 grows further
    assert not same[4]
