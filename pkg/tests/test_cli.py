import pytest

from pborel.cli import (
    EXIT_CONSTRUCTION,
    EXIT_FAIL,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_PRECONDITION,
    EXIT_USAGE,
    main,
)
from pborel.corpus import rp2_pardue_j
from pborel.ideals import format_ideal, read_ideal, write_ideal
from pborel.verify import corrupt


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_builtin(tmp_path, capsys):
    out_file = tmp_path / "J.txt"
    code, _, err = run(capsys, "construct", "builtin:rp2", "-p", "2", "--trace", "-o", str(out_file))
    assert code == EXIT_OK
    assert read_ideal(out_file) == rp2_pardue_j()
    assert '"e": 11' in err and '"r": 1193' in err
    text = out_file.read_text()
    assert text.startswith("# p=2 e=3,5,7,9,11 r=6,20,75,298,1193 bound=lcm-degree\nn=6\n")


def test_construct_override_matches_auto(capsys):
    _, auto, _ = run(capsys, "construct", "builtin:rp2", "-p", "2")
    code, forced, _ = run(capsys, "construct", "builtin:rp2", "-p", "2", "--e", "3,5,7,9,11")
    assert code == EXIT_OK and forced == auto


def test_construct_from_file(tmp_path, capsys):
    f = tmp_path / "I.txt"
    f.write_text("# RP2\nn=6\n1 1 1 0 0 0\n1 1 0 1 0 0\n1 0 1 0 1 0\n0 1 0 1 1 0\n0 0 1 1 1 0\n"
                 "0 1 1 0 0 1\n1 0 0 1 0 1\n0 0 1 1 0 1\n1 0 0 0 1 1\n0 1 0 0 1 1\n")
    code, out, _ = run(capsys, "construct", str(f), "-p", "2")
    assert code == EXIT_OK
    assert out.split("\n", 1)[1] == format_ideal(rp2_pardue_j())


def test_construct_errors(tmp_path, capsys):
    assert run(capsys, "construct", "builtin:rp2", "-p", "4")[0] == EXIT_USAGE
    assert run(capsys, "construct", "builtin:rp2", "-p", "2", "--e", "2,5,7,9,11")[0] == EXIT_CONSTRUCTION
    bad = tmp_path / "bad.txt"
    bad.write_text("n=2\n1 z\n")
    assert run(capsys, "construct", str(bad), "-p", "2")[0] == EXIT_PARSE
    assert run(capsys, "construct", str(tmp_path / "missing.txt"), "-p", "2")[0] == EXIT_USAGE
    assert run(capsys, "construct", "builtin:nope", "-p", "2")[0] == EXIT_USAGE


def test_borel_check(capsys):
    code, out, _ = run(capsys, "borel-check", "builtin:rp2-j", "-p", "2")
    assert code == EXIT_OK and "BOREL-FIXED" in out
    code, out, _ = run(capsys, "borel-check", "builtin:rp2", "-p", "2")
    assert code == EXIT_FAIL and "missing: x1^2*x2" in out


def test_borel_check_variable(tmp_path, capsys):
    f = tmp_path / "x1.txt"
    f.write_text("n=3\n1 0 0\n")
    code, out, _ = run(capsys, "borel-check", str(f), "-p", "3")
    assert code == EXIT_OK and out.startswith("BOREL-FIXED")


def test_betti_graded(capsys):
    code, out, _ = run(capsys, "betti", "builtin:rp2", "--char", "0", "--char", "2", "--graded")
    assert code == EXIT_OK
    assert "total: 10 15 6\n" in out and "total: 10 15 7 1\n" in out


def test_betti_diff_j(capsys):
    code, out, _ = run(capsys, "betti", "builtin:rp2-j", "--char", "0", "--char", "2", "--diff", "--graded")
    assert code == EXIT_OK
    assert out == "i=2 |b|=2729 QQ=0 GF(2)=1\ni=3 |b|=2729 QQ=0 GF(2)=1\n"
    code, out, _ = run(capsys, "betti", "builtin:rp2-j", "--char", "0", "--char", "3", "--diff")
    assert out == "no differences\n"


def test_betti_principal_and_formats(tmp_path, capsys):
    f = tmp_path / "p.txt"
    f.write_text("n=2\n3 1\n")
    code, out, _ = run(capsys, "betti", str(f), "--format", "records")
    assert out == "0\t0\t3 1\t1\n"
    code, out, _ = run(capsys, "betti", str(f), "--format", "json", "--char", "2")
    assert '"multidegree"' in out
    code, out, _ = run(capsys, "betti", str(f))
    assert "beta_0 at x1^3*x2 (|b|=4): 1" in out
    assert run(capsys, "betti", str(f), "--char", "6")[0] == EXIT_USAGE


def test_betti_output_is_deterministic(capsys):
    a = run(capsys, "betti", "builtin:rp2-j", "--char", "2", "--format", "records", "--jobs", "1")[1]
    b = run(capsys, "betti", "builtin:rp2-j", "--char", "2", "--format", "records", "--jobs", "2")[1]
    assert a == b


def test_verify_theorem(tmp_path, capsys):
    j = tmp_path / "J.txt"
    write_ideal(j, rp2_pardue_j())
    code, out, _ = run(capsys, "verify", "theorem", "builtin:rp2", str(j), "-p", "2", "--e", "3,5,7,9,11",
                       "--char", "0", "--char", "2", "--char", "3")
    assert code == EXIT_OK and out.rstrip().endswith("verdict: PASS")
    write_ideal(j, corrupt(rp2_pardue_j()))
    code, out, _ = run(capsys, "verify", "theorem", "builtin:rp2", str(j), "-p", "2", "--e", "3,5,7,9,11")
    assert code == EXIT_FAIL and "verdict: FAIL" in out and "first discrepancy" in out


def test_verify_theorem_auto(capsys):
    code, out, _ = run(capsys, "verify", "theorem", "builtin:max2-in-3", "-p", "2")
    assert code == EXIT_OK


def test_verify_stretch(capsys):
    code, out, _ = run(capsys, "verify", "stretch", "--random", "7", "--trials", "20")
    assert code == EXIT_OK and "PASS" in out
    code, out, _ = run(capsys, "verify", "stretch", "builtin:mixed3", "--z", "3", "--step", "3")
    assert code == EXIT_OK


def test_verify_stage(capsys):
    code, out, _ = run(capsys, "verify", "stage", "builtin:rp2", "--var", "1", "--e", "3", "-p", "2")
    assert code == EXIT_OK
    code, _, err = run(capsys, "verify", "stage", "builtin:rp2", "--var", "1", "--e", "2", "-p", "2")
    assert code == EXIT_PRECONDITION and "precondition" in err


def test_verify_charprops(capsys):
    code, out, _ = run(capsys, "verify", "charprops", "builtin:rp2-j", "-p", "2", "--char", "0", "--char", "2")
    assert code == EXIT_OK and "regularity 4651" in out


def test_small_commands(tmp_path, capsys):
    f = tmp_path / "I.txt"
    f.write_text("n=2\n2 1\n0 3\n")
    assert run(capsys, "colon", str(f), "--var", "2", "--power", "1")[1] == "n=2\n2 0\n0 2\n"
    assert run(capsys, "saturate", str(f), "--var", "2")[1] == "n=2\n0 0\n"
    assert run(capsys, "stretch", str(f), "--z", "2", "--step", "4")[1] == "n=2\n2 4\n0 12\n"
    assert run(capsys, "stretch", str(f), "--z", "2", "--d", "0,1,1,2")[0] == EXIT_USAGE
    assert run(capsys, "colon", str(f), "--var", "3", "--power", "1")[0] == EXIT_USAGE


def test_repro_rp2(capsys):
    code, out, _ = run(capsys, "repro-rp2")
    assert code == EXIT_OK
    assert out.rstrip().endswith("CONJECTURE VIOLATED AT (i,|b|) in {(2,2729),(3,2729)}")
    assert "J matches the printed generators: True" in out
    code2, out2, _ = run(capsys, "repro-rp2")
    assert out2 == out


def test_repro_rp2_extra_char(capsys):
    code, out, _ = run(capsys, "repro-rp2", "--char", "5")
    assert code == EXIT_OK
    assert "QQ=0, GF(2)=1, GF(3)=0, GF(5)=0" in out


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "pborel", "borel-check", "builtin:rp2-j", "-p", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "BOREL-FIXED" in res.stdout
