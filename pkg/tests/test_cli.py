"""Command-line front end.

Claims checked here:
  * the documented examples behave as documented: mul of A and A^-1
    prints ./. , coeff of A is 1 exactly, coeff of D at delta = 2 is 0.5;
  * CSV output has the fixed column order (n, mode, exact, numeric,
    terms, millis) and is byte-stable apart from the timing column;
  * JSON output is parseable and carries the same values;
  * exit codes: 0 on success, 1 on domain errors, 2 on resource caps;
  * the delta specification is required and mutually exclusive;
  * results equal direct library calls.
"""

from __future__ import annotations

import contextlib
import io
import json
import os

import pytest

from wysiwyg.cli import run
from wysiwyg.rep import coeff
from wysiwyg.scalars import EXACT
from wysiwyg.thompson import element_D


def _run(argv, env=None):
    buf_out, buf_err = io.StringIO(), io.StringIO()
    old = {k: os.environ.get(k) for k in (env or {})}
    os.environ.update(env or {})
    try:
        with contextlib.redirect_stdout(buf_out), \
                contextlib.redirect_stderr(buf_err):
            code = run(argv)
    finally:
        for k, v in old.items():
            if v is None:
                os.environ.pop(k, None)
            else:
                os.environ[k] = v
    return code, buf_out.getvalue(), buf_err.getvalue()


def test_mul_identity_example():
    code, out, _ = _run(["mul", "--g", "A", "--h", "A^-1"])
    assert code == 0 and out.strip() == "./."


def test_mul_rewrite_agrees():
    base = _run(["mul", "--g", "A B", "--h", "D^-1"])[1]
    rewr = _run(["mul", "--g", "A B", "--h", "D^-1",
                 "--algorithm", "rewrite"])[1]
    assert base == rewr


def test_coeff_exact_example():
    code, out, _ = _run(["coeff", "--mode", "psi", "--elem", "A",
                         "--delta-exact"])
    assert code == 0 and out.strip() == "1"


def test_coeff_numeric_example():
    code, out, _ = _run(["coeff", "--mode", "psi", "--elem", "D",
                         "--delta", "2.0"])
    assert code == 0 and out.strip() == "0.5"


def test_coeff_csv_schema_and_stability():
    argv = ["coeff", "--mode", "psi", "--elem", "D", "--delta-exact",
            "--out", "csv"]
    runs = [_run(argv) for _ in range(2)]
    for code, out, _ in runs:
        assert code == 0
        header, row = out.strip().split("\n")
        assert header == "n,mode,exact,numeric,terms,millis"
        cells = row.split(",")
        assert cells[1] == "psi"
        assert cells[2] == str(coeff(EXACT, "psi", element_D()))

    def drop_millis(text):
        return [line.rsplit(",", 1)[0] for line in text.strip().split("\n")]

    assert drop_millis(runs[0][1]) == drop_millis(runs[1][1])


def test_coeff_json_matches_library():
    code, out, _ = _run(["coeff", "--mode", "psi", "--elem", "D",
                         "--delta", "2.0", "--out", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["numeric"] == pytest.approx(0.5)
    assert payload[0]["mode"] == "psi"


def test_an_decay_rows_and_ratios():
    code, out, _ = _run(["an-decay", "--n-max", "3", "--delta", "2.0",
                         "--out", "csv"])
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 4
    values = [float(line.split(",")[3]) for line in lines[1:]]
    assert values == pytest.approx([0.5, 0.25, 0.125])


def test_gram_psd_text():
    code, out, _ = _run(["gram", "--elems", "id,A,D", "--mode", "psi",
                         "--delta", "2.0"])
    assert code == 0 and "min eigenvalue" in out


def test_lemma43_and_sigma_limit():
    code, out, _ = _run(["lemma43", "--g", "D", "--h", "B",
                         "--n-max", "4", "--delta-exact", "--out", "json"])
    assert code == 0 and json.loads(out)["threshold"] == 0
    code, out, _ = _run(["sigma-limit", "--g", "D", "--n-max", "2",
                         "--delta-exact", "--out", "json"])
    assert code == 0 and json.loads(out)["threshold"] == 1


def test_domain_error_exit_code():
    code, _, err = _run(["coeff", "--mode", "psi", "--elem", "garbage!",
                         "--delta-exact"])
    assert code == 1 and "garbage" in err


def test_resource_cap_exit_code():
    wide = "((.,.),((.,.),(.,.)))/(((.,.),(.,.)),(.,.))"
    code, _, err = _run(
        ["coeff", "--mode", "psi", "--elem", wide, "--delta-exact"],
        env={"WYSIWYG_MAX_LEAVES": "2"})
    assert code == 2 and "cap" in err


def test_delta_spec_is_required_and_exclusive():
    with pytest.raises(SystemExit):
        run(["coeff", "--mode", "psi", "--elem", "A"])
    with pytest.raises(SystemExit):
        run(["coeff", "--mode", "psi", "--elem", "A",
             "--delta-exact", "--delta", "2.0"])
