"""End-to-end runs of the command line interface, in process."""

import pytest

from finspace.cli import main

WALLET_POSET = """elements: t1 t2 x t4 m1 m2 m3 m4 c1 c2 c3
cover: m1 t1
cover: m2 t1
cover: m1 t2
cover: m3 t2
cover: m2 x
cover: m4 x
cover: m3 t4
cover: m4 t4
cover: c1 m1
cover: c2 m1
cover: c1 m2
cover: c2 m2
cover: c2 m3
cover: c3 m3
cover: c2 m4
cover: c3 m4
"""


@pytest.fixture
def wallet_file(tmp_path):
    p = tmp_path / "wallet.poset"
    p.write_text(WALLET_POSET)
    return str(p)


def test_core_of_contractible_space_is_a_point(capsys):
    assert main(["core", "example:four-point"]) == 0
    out = capsys.readouterr().out
    assert "elements:" in out
    assert len(out.split("elements:")[1].split("\n")[0].split()) == 1


def test_weak_points_listing(capsys, wallet_file):
    assert main(["weak-points", wallet_file]) == 0
    out = capsys.readouterr().out
    assert "x down-weak" in out
    assert "c1 up-weak" in out


def test_collapse_success_emits_replayable_certificate(capsys, wallet_file, tmp_path):
    assert main(["collapse", wallet_file]) == 0
    cert_text = capsys.readouterr().out
    cert_file = tmp_path / "w.cert"
    cert_file.write_text(cert_text)
    assert main(["verify", str(cert_file)]) == 0
    out = capsys.readouterr().out
    assert "valid" in out


def test_collapse_conclusive_failure_exits_one(capsys):
    assert main(["collapse", "example:sd3"]) == 1
    assert "no collapse exists" in capsys.readouterr().err


def test_collapse_budget_exhaustion_exits_two(capsys, wallet_file):
    assert main(["collapse", wallet_file, "--budget", "1"]) == 2
    assert "budget" in capsys.readouterr().err


def test_verify_rejects_tampered_certificate(capsys, tmp_path):
    bad = tmp_path / "bad.cert"
    bad.write_text("start:\nelements: a b\ncover: a b\nremove a down-weak\n")
    assert main(["verify", str(bad)]) == 1
    assert "invalid at move 0" in capsys.readouterr().err


def test_missing_file_exits_three(capsys):
    assert main(["core", "/nonexistent/thing.poset"]) == 3
    assert capsys.readouterr().err != ""


def test_malformed_input_exits_three(capsys, tmp_path):
    p = tmp_path / "z.poset"
    p.write_text("elements: a\ncover: a b\n")
    assert main(["core", str(p)]) == 3


def test_usage_error_exits_three():
    with pytest.raises(SystemExit) as e:
        main(["collapse"])  # missing positional
    assert e.value.code == 3


def test_k_and_x_round_trip(capsys, tmp_path):
    assert main(["k", "example:vee"]) == 0
    k_text = capsys.readouterr().out
    kf = tmp_path / "v.cplx"
    kf.write_text(k_text)
    assert main(["x", str(kf)]) == 0
    out = capsys.readouterr().out
    assert "a.b" in out


def test_subdivide_dispatches_on_kind(capsys, tmp_path):
    assert main(["subdivide", "example:vee"]) == 0
    space_out = capsys.readouterr().out
    assert "elements:" in space_out
    kf = tmp_path / "t.cplx"
    kf.write_text("vertices: a b\nfacet: a b\n")
    assert main(["subdivide", str(kf)]) == 0
    assert "vertices:" in capsys.readouterr().out


def test_bridge_emits_two_certificates(capsys):
    assert main(["bridge", "example:vee"]) == 0
    out = capsys.readouterr().out
    assert out.count("start:") == 2
    assert "add" in out and "remove" in out


def test_cylinder_collapse_refusal(capsys):
    assert main(["cylinder", "example:sierpinski-map", "--collapse"]) == 1
    err = capsys.readouterr().err
    assert "not distinguished" in err and "'0'" in err


def test_translate_point_collapse(capsys, wallet_file, tmp_path):
    assert main(["translate-collapse", wallet_file, "--point", "x"]) == 0
    text = capsys.readouterr().out
    cf = tmp_path / "t.cert"
    cf.write_text(text)
    assert main(["verify", str(cf)]) == 0
    capsys.readouterr()


def test_translate_pair_collapse(capsys, tmp_path):
    kf = tmp_path / "tri.cplx"
    kf.write_text("vertices: a b c\nfacet: a b c\n")
    assert main(["translate-collapse", str(kf), "--pair", "a,b", "c"]) == 0
    out = capsys.readouterr().out
    assert "remove a.b beat-up" in out
    assert "remove a.b.c down-weak" in out


def test_homology_of_example(capsys):
    assert main(["homology", "example:dunce"]) == 0
    out = capsys.readouterr().out
    assert "H_0 = Z" in out
    assert main(["homology", "example:dunce", "--reduced"]) == 0
    assert "0" in capsys.readouterr().out


def test_iso_between_relabeled_spaces(capsys, tmp_path):
    a = tmp_path / "a.poset"
    b = tmp_path / "b.poset"
    a.write_text("elements: p q\ncover: p q\n")
    b.write_text("elements: u v\ncover: v u\n")
    assert main(["iso", str(a), str(b)]) == 0
    out = capsys.readouterr().out
    assert "->" in out
    c = tmp_path / "c.poset"
    c.write_text("elements: p q\n")
    assert main(["iso", str(a), str(c)]) == 1
    assert "not isomorphic" in capsys.readouterr().err


def test_iso_mixed_kinds_is_an_input_error(capsys, tmp_path):
    a = tmp_path / "a.poset"
    a.write_text("elements: p\n")
    k = tmp_path / "k.cplx"
    k.write_text("vertices: a\nfacet: a\n")
    assert main(["iso", str(a), str(k)]) == 3


def test_dot_output(capsys, wallet_file):
    assert main(["dot", wallet_file]) == 0
    assert "digraph" in capsys.readouterr().out


def test_example_listing_and_rendering(capsys):
    assert main(["example"]) == 0
    listing = capsys.readouterr().out
    assert "wallet" in listing and "dunce" in listing
    assert main(["example", "wallet"]) == 0
    assert "elements:" in capsys.readouterr().out
    assert main(["example", "no_such_example"]) == 3
