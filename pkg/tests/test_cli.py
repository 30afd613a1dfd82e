import json
from pathlib import Path

import pytest

from qlincat.cli import main

SAMPLES = Path(__file__).resolve().parent.parent / "sample_objects"


def write(tmp_path: Path, name: str, doc: dict) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def classical_doc(dim=2, parities=None):
    return {
        "format": "quantum-object/1",
        "name": "cl",
        "dim": dim,
        "parities": parities or [0] * dim,
        "kind": "classical",
    }


def sudbery_doc(p21, q21, name="obj"):
    return {
        "format": "quantum-object/1",
        "name": name,
        "dim": 2,
        "parities": [0, 0],
        "kind": "sudbery",
        "params": {
            "q": [["1", f"1/{q21}"], [f"{q21}", "1"]],
            "p": [["1", f"1/{p21}"], [f"{p21}", "1"]],
        },
    }


def normalized_doc(u, lam="5", eps=-1, name="norm"):
    return {
        "format": "quantum-object/1",
        "name": name,
        "dim": 2,
        "parities": [0, 0],
        "kind": "normalized",
        "params": {"q": [["1", f"1/{u}"], [f"{u}", "1"]], "eps": eps, "lam": lam},
    }


def test_object_describe_classical(tmp_path, capsys):
    path = write(tmp_path, "cl.json", classical_doc())
    assert main(["object", path]) == 0
    out = capsys.readouterr().out
    assert "dim I=1, dim J=3" in out


def test_object_describe_three_components(tmp_path, capsys):
    doc = {
        "format": "quantum-object/1",
        "name": "three",
        "dim": 2,
        "parities": [0, 0],
        "kind": "general",
        "params": {
            "components": [
                [["0", "1", "-1", "0"]],
                [["1", "0", "0", "0"], ["0", "0", "0", "1"]],
                [["0", "1", "1", "0"]],
            ]
        },
    }
    path = write(tmp_path, "three.json", doc)
    assert main(["object", path]) == 0
    assert "component dims: 1 2 1" in capsys.readouterr().out


def test_object_complementarity_diagnostic(tmp_path, capsys):
    doc = sudbery_doc(2, 2)
    doc["params"]["p"] = [["1", "-1/2"], ["-2", "1"]]
    path = write(tmp_path, "bad.json", doc)
    assert main(["object", path]) == 2
    err = capsys.readouterr().err
    assert "complementarity" in err
    assert "q[0][1] + p[0][1]" in err


def test_object_reciprocity_diagnostic(tmp_path, capsys):
    doc = sudbery_doc(2, 2)
    doc["params"]["q"] = [["1", "2"], ["2", "1"]]
    path = write(tmp_path, "bad.json", doc)
    assert main(["object", path]) == 2
    assert "reciprocity" in capsys.readouterr().err


def test_object_rejects_zero_lambda(tmp_path, capsys):
    path = write(tmp_path, "bad.json", normalized_doc(2, lam="0"))
    assert main(["object", path]) == 2
    assert "lam" in capsys.readouterr().err


def test_object_rejects_wrong_format(tmp_path, capsys):
    doc = classical_doc()
    doc["format"] = "something-else"
    path = write(tmp_path, "bad.json", doc)
    assert main(["object", path]) == 2
    assert "format" in capsys.readouterr().err


def test_object_bad_rational_path(tmp_path, capsys):
    doc = sudbery_doc(2, 3)
    doc["params"]["q"][0][1] = "nope"
    path = write(tmp_path, "bad.json", doc)
    assert main(["object", path]) == 2
    assert "params.q[0][1]" in capsys.readouterr().err


def test_hom_fixed_pair_relations(tmp_path, capsys):
    src = write(tmp_path, "a.json", sudbery_doc(2, 3))
    tgt = write(tmp_path, "b.json", sudbery_doc(4, 5))
    assert main(["hom", src, tgt, "--form", "both"]) == 0
    out = capsys.readouterr().out
    assert "spans equal: yes" in out
    assert "ba - 5 ab = 0" in out


def test_hom_component_mismatch(tmp_path, capsys):
    src = write(tmp_path, "a.json", classical_doc())
    general = {
        "format": "quantum-object/1",
        "name": "three",
        "dim": 2,
        "parities": [0, 0],
        "kind": "general",
        "params": {
            "components": [
                [["0", "1", "-1", "0"]],
                [["1", "0", "0", "0"], ["0", "0", "0", "1"]],
                [["0", "1", "1", "0"]],
            ]
        },
    }
    tgt = write(tmp_path, "g.json", general)
    assert main(["hom", src, tgt]) == 2
    assert "components" in capsys.readouterr().err


def test_pbw_yes_and_exit_codes(tmp_path, capsys):
    a = write(tmp_path, "a.json", normalized_doc(2))
    b = write(tmp_path, "b.json", normalized_doc(3))
    assert main(["pbw", a, b, "--oracle"]) == 0
    out = capsys.readouterr().out
    assert "PBW: YES" in out
    assert "oracle degree 3: dim 20 classical 20" in out
    assert "0 failed" in out


def test_pbw_no_exit_one(tmp_path, capsys):
    a = write(tmp_path, "a.json", sudbery_doc(2, 1))
    b = write(tmp_path, "b.json", sudbery_doc(3, 1))
    assert main(["pbw", a, b, "--oracle"]) == 1
    out = capsys.readouterr().out
    assert "PBW: NO" in out
    assert "oracle degree 3: dim 16 classical 20" in out


def test_yb_sudbery_pass(tmp_path, capsys):
    a = write(tmp_path, "a.json", sudbery_doc(2, 3))
    assert main(["yb", a]) == 0
    out = capsys.readouterr().out
    assert out.count("pass") == 2


def test_yb_nontransitive_fail():
    assert main(["yb", str(SAMPLES / "nontransitive3.json")]) == 1


def test_bialgebra_chain(tmp_path, capsys):
    files = [
        write(tmp_path, f"{u}.json", normalized_doc(u, name=f"q{u}"))
        for u in (2, 3, 7)
    ]
    assert main(["bialgebra", *files]) == 0
    out = capsys.readouterr().out
    assert "comultiplication(0,1,2): pass" in out
    assert "counit(2): pass" in out


def test_bialgebra_needs_three(tmp_path, capsys):
    a = write(tmp_path, "a.json", classical_doc())
    assert main(["bialgebra", a, a]) == 2


def test_det_chain(tmp_path, capsys):
    files = [
        write(tmp_path, f"{u}.json", normalized_doc(u, name=f"q{u}"))
        for u in (2, 3, 7)
    ]
    assert main(["det", *files]) == 0
    out = capsys.readouterr().out
    assert "det(0,1) = -10 cb + ad" in out
    assert "multiplicative(0,1,2): yes" in out


def test_json_reports_deterministic(tmp_path, capsys):
    a = write(tmp_path, "a.json", sudbery_doc(2, 3))
    b = write(tmp_path, "b.json", sudbery_doc(4, 5))
    assert main(["hom", a, b, "--json"]) == 0
    first = capsys.readouterr().out
    assert main(["hom", a, b, "--json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["span_dim"] == 6
    assert len(doc["relations"]) == 6
    assert main(["pbw", a, b, "--oracle", "--json"]) == 1
    pbw_first = capsys.readouterr().out
    assert main(["pbw", a, b, "--oracle", "--json"]) == 1
    assert capsys.readouterr().out == pbw_first


def test_object_json_roundtrip(tmp_path, capsys):
    path = write(tmp_path, "a.json", sudbery_doc(2, 3))
    assert main(["object", path, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["valid"] is True
    assert doc["component_dims"] == [1, 3]
    assert doc["object"]["params"]["q"][1][0] == "3"


def test_sample_files_all_valid(capsys):
    for path in sorted(SAMPLES.glob("*.json")):
        assert main(["object", str(path)]) == 0, path
    capsys.readouterr()


def test_pbw_too_large_guard(tmp_path, capsys):
    doc = {
        "format": "quantum-object/1",
        "name": "big",
        "dim": 3,
        "parities": [0, 0, 0],
        "kind": "classical",
    }
    a = write(tmp_path, "a.json", doc)
    assert main(["pbw", a, a, "--oracle", "--degree", "8"]) == 2
    assert "too large" in capsys.readouterr().err


def test_serialization_roundtrip(tmp_path):
    import qlincat as q
    from qlincat.cli import load_object, object_to_json

    objs = [
        q.make_classical(q.space_of((0, 1)), "cl"),
        q.make_sudbery(
            q.even_space(2),
            [["1", "1/3"], ["3", "1"]],
            [["1", "1/2"], ["2", "1"]],
            "sud",
        ),
        q.make_normalized(q.even_space(2), [["1", "1/2"], ["2", "1"]], -1, "5", "nrm"),
        q.make_general(
            q.even_space(2),
            [
                [("0", "1", "-1", "0")],
                [("1", "0", "0", "0"), ("0", "0", "0", "1"), ("0", "1", "1", "0")],
            ],
            "gen",
        ),
    ]
    for i, obj in enumerate(objs):
        path = tmp_path / f"rt{i}.json"
        path.write_text(json.dumps(object_to_json(obj)), encoding="utf-8")
        loaded = load_object(str(path))
        assert q.objects_equal(loaded, obj)
        assert loaded.kind == obj.kind
