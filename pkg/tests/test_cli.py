import json

import pytest

from supportgenus.cli import main

AMBIGUOUS = json.dumps(
    {
        "stein_problems": [
            {
                "name": "p",
                "one_handles": ["x"],
                "distinguished": "a",
                "curves": [
                    {"name": "a", "runs": [[1, 1]]},
                    {"name": "b", "runs": [[1, 1]]},
                    {"name": "c", "runs": [[1, 1]]},
                ],
            }
        ]
    }
)


def test_tb_on_a_bundled_fixture(capsys):
    assert main(["tb", "--input", "fig1_torus_k1"]) == 0
    out = capsys.readouterr().out
    assert "curve" in out and "K" in out and "page" in out


def test_fixture_name_with_json_suffix(capsys):
    assert main(["tb", "--input", "fig1_torus_k2.json", "--format", "machine"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"command": "tb", "results": [{"curve": "K", "surface": "page", "tb": 3}]}


def test_rot_human_report(capsys):
    assert main(["rot", "--input", "fig3_twist_m1"]) == 0
    out = capsys.readouterr().out
    assert "rot_K" in out
    assert "S[gamma_1] + S[K]" in out


def test_rot_machine_report(capsys):
    assert main(["rot", "--input", "fig3_twist_m1", "--format", "machine"]) == 0
    data = json.loads(capsys.readouterr().out)
    entry = data["results"][0]
    assert entry["rotation"] == 0
    assert entry["formatted"] == "S[gamma_1] + S[K]"
    assert len(entry["cycle"]) == len(entry["base_rotations"]) == 4


def test_snf_covers_surfaces_and_problems(capsys):
    assert main(["snf", "--input", "fig3_twist_m1"]) == 0
    out = capsys.readouterr().out
    assert "intersection(page)" in out
    assert "boundary(rot_K)" in out


def test_hf_table(capsys):
    assert main(["hf", "--input", "hf_trefoil_n7"]) == 0
    out = capsys.readouterr().out
    assert "surgery" in out
    assert "3, 1, 1, 1, 1, 1, 1, 1" in out


def test_sg_bounds_with_trace(capsys):
    assert main(["sg-bounds", "--input", "thm13_facts"]) == 0
    out = capsys.readouterr().out
    assert "torus(2,3)(tb=1, rot=0): [1, 1]" in out
    assert "\n  R1: hi <= 1" in out
    assert "\n  R3: lo >= 1" in out


def test_sg_bounds_pins_the_grid(capsys):
    assert main(["sg-bounds", "--input", "thm14_facts", "--format", "machine"]) == 0
    data = json.loads(capsys.readouterr().out)
    pinned = [r for r in data["results"] if (r["lo"], r["hi"]) == (0, 0)]
    assert len(pinned) >= 9
    for entry in pinned:
        assert entry["trace"], entry
        assert {"rule", "bound", "value", "reason"} <= set(entry["trace"][0])


def test_empty_document_is_not_an_error(capsys):
    assert main(["tb", "--input", "{}"]) == 0
    assert capsys.readouterr().out == "no curves in document\n"


def test_inline_json_document(capsys):
    doc = json.dumps(
        {
            "surfaces": [{"name": "ann", "feet_order": [1, 1], "twists": [3]}],
            "curves": [{"name": "core", "surface": "ann", "coefficients": [1], "traversal": [[1, 1]]}],
        }
    )
    assert main(["tb", "--input", doc, "--format", "machine"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["results"] == [{"curve": "core", "surface": "ann", "tb": 3}]


def test_out_writes_the_report_to_a_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["tb", "--input", "fig1_torus_k1", "--format", "machine", "--out", str(target)])
    assert code == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["results"][0]["tb"] == 1


def test_verify_paper(capsys):
    assert main(["verify-paper"]) == 0
    out = capsys.readouterr().out
    assert "9/9 criteria passed" in out


def test_verify_paper_machine(capsys):
    assert main(["verify-paper", "--format", "machine"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["all_passed"] is True
    assert [r["number"] for r in data["results"]] == list(range(1, 10))
    assert all(r["passed"] for r in data["results"])


def test_parse_failures_exit_2(capsys):
    assert main(["tb", "--input", '{"surfaces": [{"name": "s"}]}']) == 2
    err = capsys.readouterr().err
    assert err.startswith("error: surfaces[0]")

    assert main(["tb", "--input", "no_such_fixture"]) == 2
    err = capsys.readouterr().err
    assert "bundled" in err and "fig1_torus_k1" in err

    assert main(["tb", "--input", "missing_file.json"]) == 2
    assert "error:" in capsys.readouterr().err


def test_computation_failures_exit_1(capsys):
    assert main(["rot", "--input", AMBIGUOUS]) == 1
    err = capsys.readouterr().err
    assert err.startswith("error:")
    # the same document parses fine for commands that never need the kernel
    assert main(["snf", "--input", AMBIGUOUS]) == 0


def test_argparse_rejections():
    for argv in ([], ["tb"], ["frobnicate"], ["tb", "--input", "{}", "--format", "yaml"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2
