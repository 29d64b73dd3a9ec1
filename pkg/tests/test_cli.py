"""Command line driver, exercised in process through main()."""

import json

import pytest

from postlie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_graft_text(capsys):
    code, out, _ = run(capsys, "graft", "[a]", "[b[c]]")
    assert code == 0
    assert out.strip() == "[b[a][c]] + [b[c[a]]]"


def test_gl_product_json(capsys):
    code, out, _ = run(capsys, "gl-product", "[a]", "[b]", "--output", "json")
    assert code == 0
    data = json.loads(out)
    assert sorted(t["coeff"] for t in data["terms"]) == ["1", "1"]
    from postlie.exprs import lincomb_from_json
    from postlie.forest import parse_forest
    from postlie.lincomb import LinComb

    got = lincomb_from_json(data)
    assert got == LinComb.basis(parse_forest("[a][b]")) \
        + LinComb.basis(parse_forest("[b[a]]"))


def test_mkw_coproduct_text(capsys):
    code, out, _ = run(capsys, "mkw-coproduct", "[a[b]]")
    assert code == 0
    assert out.strip() == "1 (x) [a[b]] + [b] (x) [a] + [a[b]] (x) 1"


def test_antipode_flavors(capsys):
    code, out, _ = run(capsys, "antipode", "[a]")
    assert (code, out.strip()) == (0, "-[a]")
    code, out, _ = run(capsys, "antipode", "[a][b]", "--which", "gl")
    assert code == 0 and "[b][a]" in out


def test_natural_growth_scale(capsys):
    code, out, _ = run(capsys, "natural-growth", "[a]", "[b[c]]")
    assert code == 0
    assert "1/2*" in out


def test_pi_and_phi(capsys):
    code, out, _ = run(capsys, "pi", "[a][b]")
    assert (code, out.strip()) == (0, "[a][b] - [b[a]]")
    code, out, _ = run(capsys, "phi", "[a][b]")
    assert (code, out.strip()) == (0, "[a][b] - [b[a]]")
    code, out, _ = run(capsys, "phi-inv", "[a][b]")
    assert (code, out.strip()) == (0, "[a][b] + [b[a]]")


def test_f_decompose_levels(capsys):
    code, out, _ = run(capsys, "f-decompose", "[b[a]]")
    assert code == 0
    assert out.splitlines() == ["level 2: [a] (x) [b]"]


def test_translate(capsys):
    code, out, _ = run(capsys, "translate", "[o]", "--v", "o=1/2*[o]",
                       "--max-degree", "2")
    assert code == 0
    assert out.strip() == "3/2*[o]"


def test_basis_listing(capsys):
    code, out, _ = run(capsys, "basis", "--degree", "2", "--alphabet", "a")
    assert code == 0
    assert out.split() == ["[a[a]]", "[a][a]"]


def test_lift_chen_embed_pipeline(tmp_path, capsys):
    xp = tmp_path / "x.json"
    yp = tmp_path / "y.json"
    code, out, _ = run(capsys, "lift", "--increments", "o=1/2", "--N", "3",
                       "--output", "json")
    assert code == 0
    xp.write_text(out)
    code, out, _ = run(capsys, "lift", "--increments", "o=1/3", "--N", "3",
                       "--output", "json")
    assert code == 0
    yp.write_text(out)
    code, chen_out, _ = run(capsys, "chen", str(xp), str(yp), "--output",
                            "json")
    assert code == 0
    code, direct, _ = run(capsys, "lift", "--increments", "o=5/6", "--N", "3",
                          "--output", "json")
    assert code == 0
    assert json.loads(chen_out) == json.loads(direct)
    code, emb, _ = run(capsys, "embed", str(xp), "--output", "json")
    assert code == 0
    assert json.loads(emb)["flavor"] == "tensor-character"


def test_lift_csv_default(capsys):
    code, out, _ = run(capsys, "lift", "--increments", "o=1/2", "--N", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "forest,value"
    assert "[o],1/2" in lines


def test_reg_commands(capsys):
    code, out, _ = run(capsys, "reg-product", "[o{1}]", "[o{1}]")
    assert (code, out.strip()) == (0, "[o{2}]")
    code, out, _ = run(capsys, "reg-gl-product", "[o{1}]", "[o{0}[o{0}]{0}]")
    assert code == 0
    assert out.strip() == "[o{0}[o{1}]{0}] + [o{1}[o{0}]{0}]"
    code, out, _ = run(capsys, "reg-basis", "--degree", "1")
    assert code == 0 and len(out.split()) == 2


def test_reg_mkw_degree_guard(capsys):
    code, out, err = run(capsys, "reg-mkw-coproduct", "[o{2}]",
                         "--max-degree", "1")
    assert code == 1
    assert "error:" in err


def test_verify_text_and_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "translation",
                       "--max-degree", "2")
    assert code == 0
    lines = out.splitlines()
    assert all(l.startswith("PASS") for l in lines[:-1])
    assert "suite translation: PASS" in lines[-1]


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "gl-duality",
                       "--max-degree", "2", "--output", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["suite"] == "gl-duality" and rep["ok"]


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "graft", "[a", "[b]")
    assert code == 2
    assert err.startswith("parse error:")
    assert "position" in err


def test_degree_cap_exit_1(capsys):
    code, _, err = run(capsys, "verify", "--suite", "gl-duality",
                       "--max-degree", "8")
    assert code == 1
    assert "POSTLIE_DEGREE_CAP" in err


def test_missing_character_file_exit_1(tmp_path, capsys):
    code, _, err = run(capsys, "chen", str(tmp_path / "nope.json"),
                       str(tmp_path / "also.json"))
    assert code == 1


def test_deterministic_output(capsys):
    code1, out1, _ = run(capsys, "gl-product", "[a][b]", "[c]")
    code2, out2, _ = run(capsys, "gl-product", "[a][b]", "[c]")
    assert code1 == code2 == 0 and out1 == out2
