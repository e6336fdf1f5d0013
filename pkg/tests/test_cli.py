import json
import os
import subprocess
import sys

import pytest

from hopfcross.crossed import trivial_system
from hopfcross.fixtures import data_path
from hopfcross.serial import system_from_doc

DATA = data_path("")


def run(*args, env=None):
    full_env = dict(os.environ, **(env or {}))
    return subprocess.run(
        [sys.executable, "-m", "hopfcross", *args],
        cwd=DATA,
        capture_output=True,
        text=True,
        env=full_env,
        timeout=300,
    )


def test_hopf_check_exit_codes():
    assert run("hopf", "check", "h4.json").returncode == 0
    bad = run("hopf", "check", "faults/h4_coassociativity.json")
    assert bad.returncode == 1 and "FAIL  coassociativity" in bad.stdout
    assert run("hopf", "check", "no_such_file.json").returncode == 2


def test_hopf_check_json_report():
    out = run("hopf", "check", "--json", "faults/h4_coassociativity.json")
    doc = json.loads(out.stdout)
    entry = next(e for e in doc["entries"] if e["axiom"] == "coassociativity")
    assert doc["ok"] is False and entry["witness"] == [2]


def test_integrals_and_semisimplicity():
    out = run("hopf", "integrals", "--json", "h4.json")
    assert out.returncode == 0
    assert run("hopf", "semisimple", "c3.json").returncode == 0
    h4 = run("hopf", "semisimple", "h4.json")
    assert h4.returncode == 0 and "not semisimple" in h4.stdout


def test_build_matches_bundled_tensor_product():
    out = run("crossed", "build", "trivial_system.json")
    assert out.returncode == 0
    assert out.stdout == data_path("tensor_c2_c3.json").read_text()


def test_crossed_check_fault():
    out = run("crossed", "check", "faults/system_twisted_module.json")
    assert out.returncode == 1 and "FAIL  twisted_module" in out.stdout


def test_factorize(tmp_path):
    target = tmp_path / "rec.json"
    out = run("crossed", "factorize", "c4.json", "c4_a_embed.json", "c4_h_embed.json", "--A", "c2.json", "--H", "c2s.json", "--out", str(target))
    assert out.returncode == 0 and out.stdout == ""
    doc = json.loads(target.read_text())
    S = system_from_doc(doc["system"])
    assert S.f(1, 1) == S.A.vec("t")
    nn = run("crossed", "factorize", "s3.json", "s3_a_embed.json", "s3_h_embed.json")
    assert nn.returncode == 1 and "NotNormal" in nn.stderr


def test_transform_coboundary_to_trivial():
    out = run("crossed", "transform", "--json", "coboundary_h4_c2.json", "coboundary_h4_c2_gamma.json")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    S = system_from_doc(doc["system"], base=DATA)
    assert S == trivial_system(S.A, S.H)


def test_braid_table_is_deterministic(golden):
    args = ("braid", "table", "h4_c3_system.json", "quad_corrected_a1.json")
    first, second = run(*args), run(*args)
    assert first.returncode == 0 and first.stdout == second.stdout
    assert first.stdout == golden("h4_c3_sigma_corrected_quadruple_a1.tsv").read_text()


def test_braid_table_published_quadruple(golden):
    refused = run("braid", "table", "h4_c3_system.json", "quad_paper_a1.json")
    assert refused.returncode == 1
    forced = run("braid", "table", "--no-check", "h4_c3_system.json", "quad_paper_a1.json")
    assert forced.returncode == 0
    assert forced.stdout == golden("h4_c3_sigma_paper_quadruple_a1.tsv").read_text()


def test_assemble_then_decompose(tmp_path):
    sigma = tmp_path / "sigma.json"
    assert run("braid", "assemble", "h4_c3_system.json", "quad_corrected_a2.json", "--out", str(sigma)).returncode == 0
    back = run("braid", "decompose", "--json", "h4_c3_system.json", str(sigma))
    assert back.returncode == 0
    got, want = json.loads(back.stdout), json.loads(data_path("quad_corrected_a2.json").read_text())
    for key in ("p", "tau", "u", "v"):
        assert got[key]["entries"] == want[key]["entries"]


def test_braid_check_and_search():
    assert run("braid", "check", "h4_c3_system.json", "quad_corrected_a1.json").returncode == 0
    assert run("braid", "check", "h4_c3_system.json", "faults/quad_rs3.json").returncode == 1
    found = run("braid", "search", "--json", "h4_c3_system.json")
    assert found.returncode == 0 and len(json.loads(found.stdout)["certified"]) == 6
    assert run("braid", "search", "h4_c3_system.json", "--variant", "paper").returncode == 1
    assert run("braid", "search", "h4_c3_system.json", "--max-search", "2").returncode == 1


def test_poly_commands():
    out = run("poly", "sigma", "--a", "2", "--b", "1", "--c", "1", "--d", "2", "--params", "1,2,3,5")
    assert out.returncode == 0 and out.stdout.strip() == "114"
    assembled = run("poly", "sigma", "--a", "2", "--b", "1", "--c", "1", "--d", "2", "--params", "1,2,3,5", "--route", "assembled")
    assert assembled.stdout == out.stdout
    ver = run("poly", "verify", "--params", "1/2,z,2,-1", "--field", "3", "--degree", "3", "--oracle", "6")
    assert ver.returncode == 0
    assert run("poly", "sigma", "--a", "1", "--b", "0", "--c", "1", "--d", "0", "--params", "1,2").returncode == 2


@pytest.mark.parametrize(
    "args, env",
    [
        (("hopf", "check", "h4.json"), {"HOPF_THREADS": "zero"}),
        (("hopf", "check", "--field", "reals", "h4.json"), None),
        (("crossed", "check", "h4.json"), None),
        (("frobnicate",), None),
    ],
)
def test_usage_and_document_errors_exit_2(args, env):
    assert run(*args, env=env).returncode == 2


def test_malformed_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    out = run("hopf", "check", str(bad))
    assert out.returncode == 2 and out.stderr


def test_antipode_document():
    out = run("hopf", "antipode", "--json", "h4.json")
    assert out.returncode == 0 and "antipode" in json.loads(out.stdout)
