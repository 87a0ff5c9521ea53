import json


def test_check_f1_json_passes(gentle):
    r = gentle("check", "F1", "--format", "json")
    assert r.returncode == 0, r.stderr
    doc = json.loads(r.stdout)
    assert doc["verdict"] == "pass"
    assert doc["summary"]["dimension"] == 39
    assert doc["outcomes"][0]["id"] == "validate"


def test_json_is_key_sorted(gentle):
    r = gentle("check", "F3", "--format", "json")
    doc = json.loads(r.stdout)
    assert r.stdout.strip() == json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)


def test_validate_broken_file(gentle, tmp_path):
    broken = tmp_path / "broken.gq"
    broken.write_text(
        "vertex 1 2\n"
        "arrow x 1 -> 2\narrow y 1 -> 2\narrow z 1 -> 2\n"
    )
    r = gentle("validate", str(broken))
    assert r.returncode == 2
    assert "degree" in r.stdout


def test_check_invalid_input_exits_2(gentle, tmp_path):
    cyclic = tmp_path / "loop.gq"
    cyclic.write_text("vertex 1 2\narrow x 1 -> 2\narrow y 2 -> 1\n")
    r = gentle("check", str(cyclic))
    assert r.returncode == 2


def test_parse_error_reports_line(gentle, tmp_path):
    bad = tmp_path / "bad.gq"
    bad.write_text("vertex 1\narrow a 1 -> 9\n")
    r = gentle("info", str(bad))
    assert r.returncode == 2
    assert "line 2" in r.stderr
    assert "--help" in r.stderr


def test_unknown_flag_exits_2(gentle):
    r = gentle("check", "F1", "--frobnicate")
    assert r.returncode == 2
    assert r.stderr


def test_unknown_label_exits_2(gentle):
    r = gentle("site", "F1", "--cycle", "1", "--t", "zz")
    assert r.returncode == 2
    assert "zz" in r.stderr


def test_bands(gentle):
    assert gentle("bands", "F2").stdout.strip() == "b -a2 (cyclic)"
    assert gentle("bands", "F1").stdout.strip() == "none"


def test_functors_example(gentle):
    r = gentle("functors", "F1", "--cycle", "1", "--t", "a1", "--module", "arrow:a2", "--format", "json")
    assert r.returncode == 0, r.stderr
    row = json.loads(r.stdout)["rows"][0]
    assert row["image"] == {"zero": True}
    assert row["res_dim"]["total"] == 1


def test_site_f1(gentle):
    doc = json.loads(gentle("site", "F1", "--cycle", "1", "--t", "a1", "--format", "json").stdout)
    assert doc["epsilon"] == ["3"]
    assert len(doc["quotient"]["vertices"]) == 8
    assert len(doc["quotient"]["arrows"]) == 8


def test_gproj_f1(gentle):
    doc = json.loads(gentle("gproj", "F1", "--format", "json").stdout)
    dims = [sorted(e["module"]["dim_vector"]) for e in doc["gproj_nonprojective"]]
    assert dims == [["2", "6", "7"], ["3", "8", "9"], ["1", "4", "5"]]


def test_fixture_round_trip(gentle, tmp_path):
    text = gentle("fixtures", "F4").stdout
    path = tmp_path / "f4.gq"
    path.write_text(text)
    assert gentle("info", str(path), "--format", "json").stdout == gentle("info", "F4", "--format", "json").stdout


def test_text_and_json_agree(gentle):
    text = gentle("info", "F2").stdout
    doc = json.loads(gentle("info", "F2", "--format", "json").stdout)
    for key in ("betti", "dimension", "vertices"):
        assert f"{key}: {doc[key]}" in text
