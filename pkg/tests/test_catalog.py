import json
from dataclasses import replace
from fractions import Fraction

import pytest

from onethird.catalog import (
    CASES,
    SINGLE_SUM_TABLE,
    CaseLabel,
    Status,
    builtin_entries,
    classify_single_sum,
    export_json,
    lookup,
    single_sum_label,
    template_offsets,
    verify_entry,
)
from onethird.engine import contains_prob, r_factor
from onethird.exact import Polynomial, RationalFunction, parse_rational
from onethird.hexagon import FamilyOffsets, instantiate

n = Polynomial.n()
F = FamilyOffsets


def test_entry_examples():
    e = lookup(F(0, 0, 1, 0, 0))
    assert e.f == RationalFunction(-2 * (6 * n + 1), 3 * (3 * n + 1))
    assert e.status is Status.PROVED
    assert str(e.provenance) == "(B), a'=b'=0"
    e = lookup(F(-1, -1, 0, -1, -1))
    assert e.f == RationalFunction.constant(0) and e.status is Status.PROVED
    assert str(e.provenance) == "(A), a'=b'=-1"
    e = lookup(F(2, 1, 0, 3, -1))
    assert e.status is Status.CONJECTURAL and e.valid_from == 2


def test_entry_count_and_uniqueness():
    entries = builtin_entries()
    offsets = [e.offsets for e in entries]
    assert len(offsets) == len(set(offsets)) == 36
    with pytest.raises(KeyError):
        lookup(F(9, 9, 9, 9, 9))


def test_status_integrity():
    for e in builtin_entries():
        in_table = single_sum_label(e.offsets.as_tuple()) is not None
        assert (e.status is Status.PROVED) == in_table, e.offsets
        if e.status is Status.PROVED:
            assert e.provenance is not None
    assert len(SINGLE_SUM_TABLE) == sum(e.status is Status.PROVED for e in builtin_entries())


@pytest.mark.parametrize("offsets,span,start", [
    ((0, 0, 0, 0, 0), 6, 1),
    ((2, 1, 0, 3, -1), 5, 2),
    ((10, 3, 0, 1, 4), 3, 2),
])
def test_verify_entry_examples(offsets, span, start):
    rep = verify_entry(lookup(F(*offsets)), span)
    assert rep.passed
    assert [r.n for r in rep.rows] == list(range(start, start + span))


def test_verify_first_value():
    rep = verify_entry(lookup(F(0, 0, 0, 0, 0)), 1)
    assert rep.rows[0].actual == Fraction(-7, 24)


def test_verify_entry_reports_failure():
    e = replace(lookup(F(0, 0, 0, 0, 0)), f=RationalFunction.constant(0))
    rep = verify_entry(e, 3)
    assert not rep.passed and not any(r.ok for r in rep.rows)


def test_alien_first_term():
    e = replace(lookup(F(2, 1, 0, 3, -1)), valid_from=1)
    rep = verify_entry(e, 3)
    assert [r.ok for r in rep.rows] == [False, True, True]


@pytest.mark.parametrize("offsets", [(4, 3, 1, 3, 2), (4, 3, 1, 4, 2)])
def test_four_thirds_c1_entries_follow_shifted_normaliser(offsets):
    # The printed constant 4/3 does not satisfy the identity with r_factor(n);
    # the exact values satisfy it with r_factor(n + 1) instead.
    fam = F(*offsets)
    for k in range(1, 7):
        p = contains_prob(*instantiate(fam, k))
        assert p - Fraction(1, 3) == Fraction(4, 3) * r_factor(k + 1)
        assert p - Fraction(1, 3) != Fraction(4, 3) * r_factor(k)


def test_classify_examples():
    assert classify_single_sum(F(0, 0, 1, 0, 0)) == [CaseLabel("B", (("a'", 0), ("b'", 0)))]
    assert CaseLabel("J'", (("a'", 0),)) in classify_single_sum(F(1, 1, 1, 0, 1))
    assert classify_single_sum(F(10, 3, 0, 1, 4)) == []


@pytest.mark.parametrize("row", SINGLE_SUM_TABLE, ids=lambda r: ",".join(map(str, r[0])) if isinstance(r, tuple) else None)
def test_single_sum_table_rows(row):
    offsets, family, params = row
    labels = classify_single_sum(F(*offsets))
    expected = single_sum_label(offsets)
    assert expected.family == family
    assert all(params[k] == v for k, v in expected.parameters)
    assert expected in labels


def test_classification_sound():
    # sweep a box of offsets; every returned label must regenerate its input
    import itertools

    hits = 0
    for offs in itertools.product(range(-2, 4), range(-2, 4), range(0, 2), range(-2, 4), range(-2, 4)):
        for label in classify_single_sum(F(*offs)):
            assert offs in template_offsets(label)
            hits += 1
    assert hits > 100


def test_templates_affine_and_full_rank():
    for family, (names, templates) in CASES.items():
        for t in templates:
            base = t(*([0] * len(names)))
            # affine: t(p) = base + sum p_k (t(e_k) - base)
            for p in [(3,) * len(names), tuple(range(-2, -2 + len(names)))]:
                lin = list(base)
                for k, pk in enumerate(p):
                    e = [0] * len(names)
                    e[k] = 1
                    lin = [u + pk * (v - w) for u, v, w in zip(lin, t(*e), base)]
                assert tuple(lin) == t(*p), family
            assert base[2] in (0, 1), family


def test_case_label_rendering():
    assert str(CaseLabel("F'", (("a'", 1), ("x'", 0)))) == "(F'), a'=1, x'=0"
    assert str(CaseLabel("I'", (("a'", 1),))) == "(I'), a'=1"


def test_json_export():
    data = json.loads(export_json())
    assert len(data) == len(builtin_entries())
    for obj in data:
        assert set(obj) == {"offsets", "f_num", "f_den", "valid_from", "status", "provenance"}
        assert len(obj["offsets"]) == 5 and all(isinstance(v, int) for v in obj["offsets"])
        assert all(isinstance(c, str) for c in obj["f_num"] + obj["f_den"])
        assert obj["status"] in ("proved", "conjectural")
        f = RationalFunction.from_int_coeffs(obj["f_num"], obj["f_den"])
        assert f == lookup(F(*obj["offsets"])).f
    row = next(o for o in data if o["offsets"] == [2, 1, 0, 3, -1])
    assert row["f_num"] == ["1", "12", "18", "4"] and row["f_den"] == ["-6", "0", "18", "12"]
    assert export_json() == json.dumps(json.loads(export_json()), indent=2)
