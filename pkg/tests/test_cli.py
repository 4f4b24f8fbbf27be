import subprocess
import sys

import pytest

from nielsen_coincidence.cli import main, run_command


def machine(rep):
    return dict(rep.items)


def test_classes_z4(data_dir):
    code, rep = run_command(["classes", str(data_dir / "z4_twist.inst")])
    assert code == 0
    assert rep.lines[0] == "2 Reidemeister classes"
    assert machine(rep)["class.1.size"] == "2"


def test_verify_worked(data_dir):
    code, rep = run_command(["--machine", "verify", str(data_dir / "z2_worked.inst")])
    keys = machine(rep)
    assert code == 0
    assert keys["class.0.lift.formula"] == "0"
    assert keys["class.0.lift.oracle"] == "0"


def test_verify_golden(data_dir):
    _, rep = run_command(["--machine", "verify", str(data_dir / "z2_worked.inst")])
    assert rep.render(machine=True) == (data_dir / "z2_worked.verify.golden").read_text()


def test_validate_broken(data_dir):
    code, rep = run_command(["validate", str(data_dir / "broken.inst")])
    assert code == 1
    assert "line 13" in rep.lines[-1]


def test_missing_file(tmp_path):
    assert run_command(["classes", str(tmp_path / "nope.inst")])[0] == 1


def test_type_and_semiindex(data_dir):
    path = str(data_dir / "z2_worked.inst")
    assert machine(run_command(["type", path])[1]) == {"pair.type": "III"}
    keys = machine(run_command(["semiindex", path])[1])
    assert keys == {"class.0.semiindex": "1", "nielsen.down": "1"}


def test_lift(data_dir):
    code, rep = run_command(["lift", str(data_dir / "z4_twist.inst")])
    keys = machine(rep)
    assert code == 0
    # stabilizer {0, 2} lies in K_M, so the two lifts stay apart
    assert keys["class.0.lift.T"] == "2" and keys["class.0.lift.k"] == "1"
    assert keys["class.0.lift.classes"] == "2"
    assert keys["class.0.lift.formula"] == keys["class.0.lift.oracle"] == "2 2"


def test_doublecover(data_dir):
    code, rep = run_command(["doublecover", str(data_dir / "z2_worked.inst")])
    assert code == 0
    assert machine(rep)["nielsen.up"] == "0"
    code, rep = run_command(["doublecover", str(data_dir / "z4_twist.inst")])
    assert code == 1 and "trivial" in rep.lines[-1]


def test_verify_oracle_flag(data_dir):
    code, rep = run_command(["verify", "--oracle", str(data_dir / "z4_twist.inst")])
    assert code == 0
    keys = machine(rep)
    assert keys["verify.lift_structure"] == "pass"
    assert keys["verify.doublecover"] == "n/a"


def test_batch(data_dir, tmp_path):
    for name in ("z4_twist.inst", "z2_worked.inst"):
        (tmp_path / name).write_text((data_dir / name).read_text())
    code, rep = run_command(["--machine", "verify", "--batch", str(tmp_path)])
    assert code == 0
    names = [k.split(".inst.")[0] for k, _ in rep.items]
    assert names == sorted(names)
    (tmp_path / "zz_broken.inst").write_text((data_dir / "broken.inst").read_text())
    assert run_command(["verify", "--batch", str(tmp_path)])[0] == 1


def test_gen_is_parseable():
    code, rep = run_command(["gen", "--seed", "5", "--max-order", "8"])
    assert code == 0
    assert rep.render().startswith("group M order")


def test_bad_usage():
    assert run_command(["frobnicate"])[0] == 1


def test_main_writes_stdout(data_dir, capsys):
    assert main(["type", "--machine", str(data_dir / "z2_worked.inst")]) == 0
    assert capsys.readouterr().out.endswith("pair.type = III\n")


@pytest.mark.parametrize("argv,code", [(["validate", "z2_worked.inst"], 0),
                                       (["validate", "broken.inst"], 1)])
def test_module_entry_point(data_dir, argv, code):
    proc = subprocess.run([sys.executable, "-m", "nielsen_coincidence.cli", *argv],
                          cwd=data_dir, capture_output=True, text=True)
    assert proc.returncode == code
