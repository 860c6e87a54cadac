import pytest

from dsrg import Digraph, build_antiflag_forward, build_gdd, from_json, bundled_iso_fixture
from dsrg.cli import CSV_HEADER, catalog_rows, main, render_csv


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# build
# ---------------------------------------------------------------------------

def test_build_gdd_writes_dgr(tmp_path, capsys):
    out = tmp_path / "g.dgr"
    code, stdout, _ = run(capsys, "build", "--family", "gdd", "--l", "2", "--q", "3",
                          "--out", str(out))
    assert code == 0
    assert "(36, 12, 5, 2, 5) verified" in stdout
    text = out.read_text()
    assert text.splitlines()[0] == "36"
    assert Digraph.from_dgr(text) == Digraph(36, build_antiflag_forward(build_gdd(2, 3)).rows)


def test_build_partition(capsys):
    code, stdout, _ = run(capsys, "build", "--family", "partition", "--q", "2", "--l", "3")
    assert code == 0
    assert "(12, 4, 2, 0, 2) verified" in stdout


def test_build_budget_guard(capsys):
    code, _, stderr = run(capsys, "build", "--family", "gdd", "--l", "2", "--q", "100000")
    assert code != 0
    assert "budget" in stderr


def test_build_structure_out(tmp_path, capsys):
    path = tmp_path / "s.json"
    code, _, _ = run(capsys, "build", "--family", "gdd", "--l", "2", "--q", "3",
                     "--structure-out", str(path))
    assert code == 0
    assert from_json(path.read_text()) == build_gdd(2, 3)


def test_build_2design_back(capsys):
    code, stdout, _ = run(capsys, "build", "--family", "2design-back", "--v", "7",
                          "--b", "7", "--k", "3", "--r", "3", "--lambda", "1")
    assert code == 0
    assert "(28, 12, 6, 4, 6) verified" in stdout


def test_build_missing_flag_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["build", "--family", "gdd", "--l", "2"])
    assert err.value.code == 2


def test_build_env_budget(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("DSRG_BUDGET", "5")
    code, _, stderr = run(capsys, "build", "--family", "gdd", "--l", "2", "--q", "3")
    assert code != 0 and "budget" in stderr
    # an explicit flag wins over the environment
    code, stdout, _ = run(capsys, "build", "--family", "gdd", "--l", "2", "--q", "3",
                          "--block-budget", "1000")
    assert code == 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_dgr_file(tmp_path, capsys):
    path = tmp_path / "g.dgr"
    path.write_text(build_antiflag_forward(build_gdd(2, 3)).to_dgr())
    code, stdout, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert "(36, 12, 5, 2, 5)" in stdout


def test_verify_edge_list_three_cycle(tmp_path, capsys):
    path = tmp_path / "c3.txt"
    path.write_text("0 1\n1 2\n2 0\n")
    code, stdout, _ = run(capsys, "verify", str(path))
    assert code == 0
    assert "(3, 1, 0, 0, 1)" in stdout


def test_verify_loop_file_fails(tmp_path, capsys):
    path = tmp_path / "loop.dgr"
    path.write_text("2\n10\n01\n")
    code, _, stderr = run(capsys, "verify", str(path))
    assert code != 0
    assert "loop" in stderr


def test_verify_parse_error_carries_line(tmp_path, capsys):
    path = tmp_path / "bad.dgr"
    path.write_text("3\n010\n0x0\n000\n")
    code, _, stderr = run(capsys, "verify", str(path))
    assert code != 0
    assert "line 3" in stderr


def test_verify_non_dsrg(tmp_path, capsys):
    path = tmp_path / "c4.txt"
    path.write_text("0 1\n1 2\n2 3\n3 0\n")
    code, _, stderr = run(capsys, "verify", str(path))
    assert code != 0
    assert "mu" in stderr


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def test_catalog_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    code1, out1, _ = run(capsys, "catalog", "--csv", str(a))
    code2, out2, _ = run(capsys, "catalog", "--csv", str(b))
    assert code1 == code2 == 0
    assert out1 == out2
    assert a.read_bytes() == b.read_bytes()


def test_catalog_rows_content():
    rows = catalog_rows()
    by_tuple = {(r.params.tuple(), r.family, r.marker()): r for r in rows}
    assert ((96, 24, 7, 3, 7), "gdd", "l=2;q=4") in by_tuple
    assert ((54, 18, 7, 4, 7), "ap-pencils", "q=3;l=3") in by_tuple
    # the same parameter set shows up from two different constructions
    gdd_16 = by_tuple[((16, 8, 6, 2, 6), "gdd", "l=2;q=2;m=2")]
    ar_16 = by_tuple[((16, 8, 6, 2, 6), "affine-resolvable", "m=2;s=2;l=2")]
    assert gdd_16.verified and ar_16.verified
    # pencil counts the order-2 plane cannot realize are formula-only
    row = by_tuple[((32, 16, 9, 7, 9), "ap-pencils", "q=2;l=8;formula-only")]
    assert not row.verified and row.formula_only
    assert all(r.verified for r in rows if not r.formula_only)


def test_catalog_csv_shape():
    rows = catalog_rows(max_order=40, families=("gdd",), multiples=2)
    text = render_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert all(len(line.split(",")) == 12 for line in lines)
    assert sorted(lines[1:], key=lambda ln: int(ln.split(",")[0])) == lines[1:]


def test_catalog_family_filter(capsys):
    code, stdout, _ = run(capsys, "catalog", "--families", "partition,partition-spiked",
                          "--max-order", "40")
    assert code == 0
    assert "gdd" not in stdout
    assert "partition-spiked" in stdout


def test_catalog_rejects_unknown_family(capsys):
    with pytest.raises(SystemExit):
        main(["catalog", "--families", "nonsense"])


# ---------------------------------------------------------------------------
# iso and spectrum
# ---------------------------------------------------------------------------

def test_iso_cli_isomorphic(tmp_path, capsys):
    d1, d2, _ = bundled_iso_fixture()
    p1, p2 = tmp_path / "a.dgr", tmp_path / "b.dgr"
    p1.write_text(d1.to_dgr())
    p2.write_text(d2.to_dgr())
    code, stdout, _ = run(capsys, "iso", str(p1), str(p2))
    assert code == 0
    lines = stdout.splitlines()
    assert lines[0] == "ISOMORPHIC"
    assert len(lines) == 1 + 36


def test_iso_cli_not_isomorphic(tmp_path, capsys):
    d1, _, _ = bundled_iso_fixture()
    p1, p2 = tmp_path / "a.dgr", tmp_path / "b.dgr"
    p1.write_text(d1.to_dgr())
    p2.write_text(d1.transpose().to_dgr())
    code, stdout, _ = run(capsys, "iso", str(p1), str(p2))
    assert code == 1
    assert "NOT ISOMORPHIC" in stdout


def test_iso_cli_budget(tmp_path, capsys):
    d1, d2, _ = bundled_iso_fixture()
    p1, p2 = tmp_path / "a.dgr", tmp_path / "b.dgr"
    p1.write_text(d1.to_dgr())
    p2.write_text(d2.to_dgr())
    code, stdout, _ = run(capsys, "iso", str(p1), str(p2), "--budget", "1")
    assert code == 2
    assert "BUDGET EXCEEDED" in stdout


def test_spectrum_cli(capsys):
    code, stdout, _ = run(capsys, "spectrum", "36", "12", "5", "2", "5")
    assert code == 0
    assert stdout.strip() == "theta 12 0 -3 mult 1 31 4"


def test_spectrum_cli_infeasible(capsys):
    code, stdout, _ = run(capsys, "spectrum", "10", "4", "3", "1", "2")
    assert code == 1
    assert stdout.strip() == "infeasible: delta^2=5"
