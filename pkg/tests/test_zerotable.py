import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zal.errors import IntegrityError, ParseError
from zal.zerotable import load_table, match, serialize, validate


def test_two_line_table():
    t = load_table("14.134725\n21.022040\n")
    assert len(t) == 2
    assert t.declared_precision == 6


def test_ordering_violation():
    with pytest.raises(IntegrityError):
        load_table("21.0\n14.1\n")


def test_empty_stream():
    t = load_table(io.StringIO(""))
    assert len(t) == 0


def test_parse_error_carries_line():
    with pytest.raises(ParseError) as exc:
        load_table("# header\n14.1\nabc\n")
    assert exc.value.line == 3


def test_comments_become_provenance():
    t = load_table("# made by hand\n14.1\n")
    assert t.provenance == "made by hand"
    assert serialize(t) == "# made by hand\n14.1\n"


def test_identical_lists_match():
    ref = load_table("14.134725\n21.022040\n25.010858\n")
    rep = validate(ref.ordinates, ref)
    assert rep.statistics["missing"] == 0 and rep.statistics["spurious"] == 0
    assert rep.passed


def test_perturbed_entry_is_missing_and_spurious():
    ref = load_table("14.134725\n21.022040\n25.010858\n")
    comp = ref.ordinates.copy()
    comp[1] += 10e-6
    rep = validate(comp, ref, match_tol=1e-6)
    assert rep.statistics["missing"] == 1 and rep.statistics["spurious"] == 1
    assert not rep.passed


def test_window_restricts_both_sides():
    ref = load_table("14.134725\n21.022040\n25.010858\n30.424876\n")
    rep = validate([21.02204, 25.010858], ref, window=(20, 26))
    assert rep.passed and rep.statistics["reference"] == 2


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(15, 1e4), min_size=0, max_size=40, unique=True))
def test_roundtrip(values):
    vals = np.round(np.sort(np.array(values)), 6)
    vals = vals[np.concatenate(([True], np.diff(vals) > 1e-5))] if vals.size else vals
    text = "".join(f"{v:.6f}\n" for v in vals)
    t = load_table(text) if text else load_table(io.StringIO(""))
    assert np.array_equal(t.ordinates, vals)
    again = load_table(serialize(t, with_header=False)) if len(t) else t
    assert np.array_equal(again.ordinates, t.ordinates)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(0, 100), max_size=30, unique=True), st.floats(1e-4, 1e-2))
def test_match_self_is_perfect(values, tol):
    v = np.sort(np.array(values))
    v = v[np.concatenate(([True], np.diff(v) > 3 * tol))] if v.size else v
    pairs, missing, spurious = match(v, v, tol)
    assert len(pairs) == v.size and not missing and not spurious
