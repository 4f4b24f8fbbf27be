import pytest

from nielsen_coincidence.cli import run_command
from nielsen_coincidence.instance import (
    InstanceSyntaxError, MissingSection, ValidationError, emit_instance, parse_instance,
    random_instance,
)
from nielsen_coincidence.classes import MapType, orientation_type

MINIMAL = """\
group M order 2
table
0 1
1 0
endtable
group N order 1
table
0
endtable
char wM : + -
char wN : +
hom f : M -> N : 0 0
hom g : M -> N : 0 0
"""


def test_minimal():
    inst = parse_instance(MINIMAL)
    assert inst.M.order == 2 and inst.N.order == 1
    assert inst.covering is None and inst.config is None
    assert [len(c) for c in inst.configurations()] == [0]


def test_comments_and_signs_without_spaces():
    text = MINIMAL.replace("char wM : + -", "char wM : +-   # packed signs")
    assert parse_instance(text).pair.w_M.signs == (1, -1)


def test_image_out_of_range():
    with pytest.raises(ValidationError) as exc:
        parse_instance(MINIMAL.replace("hom f : M -> N : 0 0", "hom f : M -> N : 0 1"))
    assert exc.value.line == 12


def test_missing_endtable():
    with pytest.raises(InstanceSyntaxError):
        parse_instance(MINIMAL.replace("0 1\n1 0\nendtable\n", "0 1\n1 0\n", 1))


def test_missing_section():
    with pytest.raises(MissingSection, match="hom g"):
        parse_instance(MINIMAL.replace("hom g : M -> N : 0 0\n", ""))


@pytest.mark.parametrize("bad,exc", [
    ("char wM : + +", None),  # valid, control
    ("char wM : - +", ValidationError),
    ("char wM : + x", InstanceSyntaxError),
    ("hom f : M => N : 0 0", InstanceSyntaxError),
    ("bogus line", InstanceSyntaxError),
])
def test_line_errors(bad, exc):
    text = MINIMAL.replace("char wM : + -", bad) if bad.startswith("char") else \
        MINIMAL.replace("hom f : M -> N : 0 0", bad)
    if exc is None:
        parse_instance(text)
    else:
        with pytest.raises(exc):
            parse_instance(text)


def test_bad_table():
    text = MINIMAL.replace("0 1\n1 0", "0 1\n1 1", 1)
    with pytest.raises(ValidationError, match="line 1"):
        parse_instance(text)


def test_covering_and_config(data_dir):
    inst = parse_instance((data_dir / "z4_twist.inst").read_text())
    KM, KN = inst.covering
    assert KM.members == (0, 2) and KN.members == (0, 2)
    assert [c.labels for c in inst.configurations()] == [(0, 1), (2,)]


def test_config_alias_of_same_class(data_dir):
    text = (data_dir / "z4_twist.inst").read_text().replace("class 1 : labels 2", "class 2 : labels 2")
    with pytest.raises(ValidationError, match="same class"):
        parse_instance(text)


def test_covering_not_liftable():
    text = MINIMAL.replace("char wN : +", "char wN : +") + "covering : KM { 0 1 } KN { 0 }\n"
    parse_instance(text)  # target trivial, always liftable
    text = MINIMAL + "covering : KM { 0 } KN { 0 1 }\n"
    with pytest.raises(ValidationError):
        parse_instance(text)


def test_roundtrip(data_dir):
    for path in sorted(data_dir.glob("*.inst")):
        if path.name.startswith("broken"):
            continue
        text = path.read_text()
        inst = parse_instance(text)
        again = parse_instance(emit_instance(inst))
        assert emit_instance(again) == emit_instance(inst)


class TestRandomInstance:
    def test_deterministic(self):
        assert random_instance(1, 8) == random_instance(1, 8)
        assert random_instance(2 ** 64 - 1, 16) == random_instance(2 ** 64 - 1, 16)

    def test_seed_range(self):
        with pytest.raises(ValueError):
            random_instance(-1)

    @pytest.mark.parametrize("seed", range(0, 60, 3))
    def test_roundtrip_and_report_stability(self, seed, tmp_path):
        text = random_instance(seed, 16)
        inst = parse_instance(text)
        assert emit_instance(inst) == text
        assert inst.M.order <= 16 and inst.N.order <= 16
        assert all(len(c) <= 6 for c in inst.configurations())
        path = tmp_path / "x.inst"
        path.write_text(text)
        code, rep = run_command(["--machine", "verify", str(path)])
        assert code == 0
        code2, rep2 = run_command(["--machine", "verify", str(path)])
        assert rep.machine() == rep2.machine()

    def test_type_iii_appears(self):
        kinds = set()
        for seed in range(100):
            pair = parse_instance(random_instance(seed, 8)).pair
            kinds.add(orientation_type(pair.phi, pair.w_M, pair.w_N))
        assert MapType.III in kinds
