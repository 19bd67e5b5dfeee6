from __future__ import annotations

import itertools
import math

import pytest

from lpa_lab import descriptors as ds
from lpa_lab.abelian import FgAbelianGroup
from lpa_lab.classify import (
    SearchBudget,
    Verdict,
    case_of,
    classify,
    compare,
    enumerate_table,
    verify_decision,
)
from lpa_lab.errors import InputError, TooLarge, TooManyVertices
from lpa_lab.graph import TwoVertexSignature, from_adjacency, two_vertex
from lpa_lab.moves import replay, valid_shifts

# (P_l, P_c, Dec, PIS, B(K0)) for each non-IBN label
NONIBN_BITS = {
    "I": (1, 0, 0, 0, 1),
    "II": (0, 1, 0, 0, 1),
    "Va": (0, 0, 1, 0, 0),
    "III": (0, 0, 0, 1, 1),
    "IVa": (0, 0, 0, 1, 0),
    "Ve": (0, 0, 0, 1, 0),
    "Vf": (0, 0, 0, 1, 0),
    "Vb": (0, 0, 0, 0, 0),
}

# (decomposable, PIS) columns of the IBN table
IBN_FLAGS = {
    "A1": (1, 0), "A2": (1, 0), "A3": (1, 0), "A4": (0, 0), "A5": (0, 0), "A6": (0, 0), "A7": (1, 0),
    "A8": (1, 0), "A9": (0, 0), "A10": (0, 0), "A11": (0, 0), "A12": (0, 0), "A13": (0, 0), "A14": (0, 1),
}


def bits(b):
    return (int(bool(b.p_l)), int(bool(b.p_c)), int(b.decomposable), int(b.pis), b.betti)


def label(*p):
    return classify(two_vertex(*p)).label.name


def test_one_vertex_labels():
    assert str(classify(from_adjacency([[0]])).label) == "OV_Field"
    assert str(classify(from_adjacency([[1]])).label) == "OV_Laurent"
    assert str(classify(from_adjacency([[4]])).label) == "OV_Leavitt(4)"


def test_classify_examples():
    assert label(5, 2, 2, 2) == "A14"
    assert label(0, 0, 3, 2) == "I"
    for t in range(1, 6):
        assert label(1, 0, t + 1, t) == "II"
    # the overlap triple: a loop count one above the outgoing count marks IV(a)
    assert label(3, 2, 1, 1) == "IVa"
    assert label(0, 2, 3, 0) == "Ve"
    assert label(2, 2, 1, 1) == "Vf"


def test_classify_rejects_three_vertices():
    with pytest.raises(TooManyVertices):
        classify(from_adjacency([[1, 1, 0], [0, 1, 1], [1, 0, 1]]))


def test_exactly_one_label_and_bit_tables():
    seen = set()
    for p in itertools.product(range(9), repeat=4):
        c = classify(two_vertex(*p))
        name = c.label.name
        assert name not in ("IVb", "Vc", "Vd")
        seen.add(name)
        if c.label.family == "NonIBN":
            assert not c.bundle.type_result.ibn
            assert bits(c.bundle) == NONIBN_BITS[name], p
        else:
            assert c.bundle.type_result.ibn
            assert (int(c.bundle.decomposable), int(c.bundle.pis)) == IBN_FLAGS[name], p
            assert c.bundle.k0.delta_E == 0
    assert seen == set(NONIBN_BITS) | set(IBN_FLAGS)


def test_reductions_recorded():
    c = case_of(two_vertex(3, 2, 4, 0))
    assert c.label.name == "Vb" and c.reduced_from == "IVb"
    assert c.normal_params == {"l1": 3, "t1": 2 + 4 - 1, "l2": 4}
    assert any(s.startswith("reduced-by-shift: IVb -> Vb") for s in c.decision_path)
    c = case_of(two_vertex(0, 3, 0, 2))
    assert (c.label.name, c.reduced_from, c.normal_params) == ("Ve", "Vc", {"t1": 3, "l2": 6})
    c = case_of(two_vertex(0, 2, 0, 3))  # the larger outgoing count sits at the second vertex
    assert (c.label.name, c.reduced_from, c.normal_params) == ("Ve", "Vc", {"t1": 3, "l2": 6})
    c = case_of(two_vertex(0, 2, 3, 1))
    assert (c.label.name, c.reduced_from, c.normal_params) == ("Ve", "Vd", {"t1": 2, "l2": 5})
    assert replay(two_vertex(0, 2, 3, 1), c.reduction) == c.normal_graph


def test_descriptors_follow_tables():
    L = ds.leavitt
    d = classify(two_vertex(0, 0, 4, 3)).bundle
    assert (d.ideal_pl, d.quotient) == (ds.mat_inf(ds.FIELD), L(4))
    d = classify(two_vertex(2, 0, 3, 0)).bundle
    assert d.ideal_pec == ds.product(L(2), L(3))
    d = classify(two_vertex(2, 1, 3, 0)).bundle
    assert (d.ideal_pec, d.quotient) == (ds.mat_inf(L(3)), L(2))
    d = classify(two_vertex(1, 2, 3, 0)).bundle  # A13
    assert (d.ideal_pec, d.quotient) == (ds.mat_inf(L(3)), ds.LAURENT)
    d = classify(two_vertex(1, 0, 0, 3)).bundle  # A9
    assert d.ideal_pc == ds.mat(4, ds.LAURENT)
    c = classify(two_vertex(0, 2, 3, 0))
    assert c.case.known_algebra == "M_3(L(1,3))"


# -- compare ------------------------------------------------------------------------

E, F, G = two_vertex(2, 2, 1, 1), two_vertex(0, 2, 3, 0), two_vertex(3, 2, 1, 1)


@pytest.mark.parametrize("a,b", [(E, F), (E, G), (F, G)])
def test_triple_pairs_isomorphic(a, b):
    d = compare(a, b)
    assert d.verdict is Verdict.ISOMORPHIC
    assert verify_decision(a, b, d)


@pytest.mark.parametrize("a,b", [((2, 2, 4, 0), (2, 3, 4, 0)), ((2, 2, 5, 0), (2, 4, 5, 0))])
def test_open_question_pairs(a, b):
    d = compare(two_vertex(*a), two_vertex(*b))
    assert d.verdict is Verdict.UNKNOWN
    assert d.tag == "V(b)-gcd-match"


def test_not_isomorphic_by_type():
    d = compare(two_vertex(0, 0, 3, 2), two_vertex(0, 0, 4, 3))
    assert d.verdict is Verdict.NOT_ISOMORPHIC
    assert d.invariant == "type"
    assert d.values == ("(1,3)", "(1,4)")


def test_ibn_open_families():
    d = compare(two_vertex(0, 0, 2, 2), two_vertex(0, 0, 2, 3))
    assert (d.verdict, d.tag) == (Verdict.UNKNOWN, "A6/A11/A13-gcd-match")
    d = compare(two_vertex(1, 0, 2, 2), two_vertex(1, 0, 2, 3))
    assert (d.verdict, d.tag) == (Verdict.UNKNOWN, "A6/A11/A13-gcd-match")


def test_det_sign_only():
    d = compare(two_vertex(0, 1, 0, 2), two_vertex(2, 1, 3, 1))
    assert (d.verdict, d.tag) == (Verdict.UNKNOWN, "det-sign-only")


def test_table_clauses():
    d = compare(two_vertex(2, 0, 3, 0), two_vertex(3, 0, 2, 0))
    assert d.verdict is Verdict.ISOMORPHIC  # equal canonical graphs
    d = compare(two_vertex(3, 2, 5, 4), two_vertex(3, 2, 3, 2))  # gcd(2,4) = gcd(2,2)
    assert d.verdict is Verdict.ISOMORPHIC and verify_decision(two_vertex(3, 2, 5, 4), two_vertex(3, 2, 3, 2), d)
    d = compare(two_vertex(3, 2, 4, 3), two_vertex(3, 2, 3, 2))  # gcd 1 vs 2
    assert d.verdict is Verdict.NOT_ISOMORPHIC
    d = compare(two_vertex(1, 0, 4, 2), two_vertex(1, 0, 4, 6))
    assert d.verdict is Verdict.NOT_ISOMORPHIC  # K0 differs within A11
    assert d.invariant == "K0 group"


def test_three_vertex_graphs_only_by_invariants_or_shifts():
    a = from_adjacency([[2, 1, 0], [0, 2, 1], [1, 0, 2]])
    d = compare(a, a)
    assert d.verdict is Verdict.ISOMORPHIC
    b = from_adjacency([[3, 1, 0], [0, 2, 1], [1, 0, 2]])
    d = compare(a, b)
    assert d.verdict is not Verdict.ISOMORPHIC or verify_decision(a, b, d)
    assert d.reason != "table theorem non-IBN (v)"


def _all_sigs(m):
    return sorted({TwoVertexSignature.of(two_vertex(*p)) for p in itertools.product(range(m), repeat=4)})


def _agree(a, b):
    ba, bb = classify(a).bundle, classify(b).bundle
    return (
        ba.type_result == bb.type_result
        and ba.k0.group == bb.k0.group
        and ba.k0.unit_order == bb.k0.unit_order
        and tuple(ba.flags) == tuple(bb.flags)
        and ba.descriptors() == bb.descriptors()
        and abs(ba.k0.delta_E) == abs(bb.k0.delta_E)
    )


def test_compare_symmetric_reflexive_sound(rng):
    sigs = [s.graph() for s in _all_sigs(4)]
    budget = SearchBudget(max_states=600)
    for _ in range(400):
        a, b = rng.choice(sigs), rng.choice(sigs)
        d1, d2 = compare(a, b, budget), compare(b, a, budget)
        assert d1.verdict == d2.verdict, (a, b)
        assert d1.tag == d2.tag
        if d1.verdict is Verdict.ISOMORPHIC:
            assert verify_decision(a, b, d1) and verify_decision(b, a, d2)
            assert _agree(a, b)
        if d1.verdict is Verdict.NOT_ISOMORPHIC:
            assert d1.invariant
    for g in sigs[::9]:
        assert compare(g, g).verdict is Verdict.ISOMORPHIC


def test_shift_consistency(rng):
    done = 0
    while done < 500:
        g = two_vertex(*(rng.randint(0, 4) for _ in range(4)))
        h = g
        for _ in range(rng.randint(1, 3)):
            moves = valid_shifts(h)
            if not moves:
                break
            from lpa_lab.moves import shift

            h = shift(h, rng.choice(moves))
        if h == g:
            continue
        d = compare(g, h)
        assert d.verdict is Verdict.ISOMORPHIC, (g, h, d)
        assert verify_decision(g, h, d)
        done += 1


def test_decision_json():
    js = compare(E, F).to_json()
    assert js["verdict"] == "Isomorphic" and js["witness"]["kind"] == "franks"
    js = compare(two_vertex(0, 0, 3, 2), two_vertex(0, 0, 4, 3)).to_json()
    assert js["invariant"] == "type" and js["values"] == ["(1,3)", "(1,4)"]


def test_verify_rejects_wrong_witness():
    d = compare(E, F)
    assert not verify_decision(E, two_vertex(0, 0, 3, 2), d)
    assert not verify_decision(E, F, compare(two_vertex(0, 0, 3, 2), two_vertex(0, 0, 4, 3)))


# -- tables -------------------------------------------------------------------------


def test_enumerate_examples():
    rows = enumerate_table(2, "nonibn")
    row = next(r for r in rows if r.signature == "0,0;3,2")
    assert (str(row.label), row.type_text, row.k0_text) == ("I", "(1,3)", "Z_2 x Z")
    ov = enumerate_table(3, "onevertex")
    assert [str(r.label) for r in ov] == ["OV_Field", "OV_Laurent", "OV_Leavitt(2)", "OV_Leavitt(3)"]
    a9 = next(r for r in enumerate_table(3, "ibn") if str(r.label) == "A9" and r.params == {"t2": 2})
    assert a9.k0_text == "Z"


def test_enumerate_limits():
    with pytest.raises(TooLarge):
        enumerate_table(13, "nonibn")
    with pytest.raises(InputError):
        enumerate_table(3, "threevertex")
    with pytest.raises(InputError):
        enumerate_table(0, "ibn")


def test_enumerate_is_canonical_and_within_bounds():
    rows = enumerate_table(3, "nonibn")
    assert rows == enumerate_table(3, "nonibn")
    assert len({r.signature for r in rows}) == len(rows)
    for r in rows:
        assert all(v <= 3 for v in r.params.values())
        assert r.label.family == "NonIBN"


def test_enumerated_rows_follow_row_formulas():
    for r in enumerate_table(5, "nonibn"):
        p, name = r.params, r.label.name
        if name in ("I", "II"):
            assert r.type_text == f"(1,{p['t2'] + 1})"
            assert r.k0_text == str(FgAbelianGroup.from_diagonal([p["t2"], 0]))
        if name == "III":
            assert r.type_text == f"(1,{1 + math.gcd(p['t1'], p['t2'])})"
        if name == "Va":
            assert r.type_text == f"(1,{1 + math.lcm(p['l1'] - 1, p['l2'] - 1)})"
