import json

import pytest

from alglab import FormatError, Grading, check_identity_uniform
from alglab.formats import (
    ExpectedStats,
    LoadedAlgebra,
    dumps,
    load,
    loads,
    save,
    to_document,
)
from conftest import FIXTURES, FIXTURE_FILES, heisenberg


def minimal_doc(**overrides):
    doc = {
        "p": 3,
        "dim": 2,
        "alpha": 1,
        "beta": 1,
        "table": [[1, 1, 2, 1]],
    }
    doc.update(overrides)
    return doc


def test_load_heisenberg_fixture():
    loaded = load(FIXTURES / "heisenberg_f5.json")
    A = loaded.algebra
    assert (A.p, A.dim, A.alpha, A.beta) == (5, 3, 1, 1)
    assert check_identity_uniform(A).ok
    assert loaded.grading == Grading(2, (1, 1, 0))
    assert loaded.meta.name == "heisenberg-f5"
    assert loaded.meta.expected == ExpectedStats(2, 2)


def test_all_fixtures_load_and_roundtrip():
    for name in FIXTURE_FILES:
        path = FIXTURES / name
        text = path.read_text()
        loaded = loads(text)
        assert dumps(loaded) == text  # canonical files round-trip byte-exactly


def test_load_save_load_identity(tmp_path):
    loaded = load(FIXTURES / "leibniz2_f3.json")
    out = tmp_path / "copy.json"
    save(loaded, out)
    again = load(out)
    assert again.algebra == loaded.algebra
    assert again.grading == loaded.grading
    assert dumps(again) == dumps(loaded)


def test_zero_dimensional_algebra_loads():
    loaded = loads(json.dumps(minimal_doc(dim=0, table=[])))
    assert loaded.algebra.dim == 0
    assert check_identity_uniform(loaded.algebra).ok


def test_nonprime_p_rejected():
    with pytest.raises(FormatError) as exc:
        loads(json.dumps(minimal_doc(p=6)))
    assert exc.value.path == "p"
    assert "prime" in str(exc.value)


def test_index_out_of_range_rejected():
    with pytest.raises(FormatError) as exc:
        loads(json.dumps(minimal_doc(table=[[1, 3, 2, 1]])))
    assert "out of range" in str(exc.value)
    assert exc.value.path == "table[0][1]"


def test_unreduced_coefficient_rejected():
    with pytest.raises(FormatError) as exc:
        loads(json.dumps(minimal_doc(table=[[1, 1, 2, 3]])))
    assert exc.value.path == "table[0][3]"


def test_duplicate_table_entry_rejected():
    with pytest.raises(FormatError):
        loads(json.dumps(minimal_doc(table=[[1, 1, 2, 1], [1, 1, 2, 2]])))


def test_zero_alpha_rejected():
    with pytest.raises(FormatError) as exc:
        loads(json.dumps(minimal_doc(alpha=0)))
    assert exc.value.path == "alpha"


def test_grading_length_mismatch_rejected():
    with pytest.raises(FormatError) as exc:
        loads(json.dumps(minimal_doc(grading={"n": 3, "degrees": [1]})))
    assert exc.value.path == "grading.degrees"


def test_grading_degree_out_of_range_rejected():
    with pytest.raises(FormatError) as exc:
        loads(json.dumps(minimal_doc(grading={"n": 3, "degrees": [1, 3]})))
    assert exc.value.path == "grading.degrees[1]"


def test_unknown_top_level_field_rejected():
    with pytest.raises(FormatError):
        loads(json.dumps(minimal_doc(extra=1)))


def test_action_block_fully_validated():
    doc = minimal_doc(
        p=7,
        dim=2,
        table=[],
        grading={"n": 3, "degrees": [1, 2]},
        action={
            "n": 3, "q": 2, "r": 2,
            "phi": [[2, 0], [0, 4]],
            "h": [[0, 1], [1, 0]],
        },
    )
    loaded = loads(json.dumps(doc))
    assert loaded.action is not None
    assert loaded.action.triple.n == 3


def test_action_bad_conjugation_rejected():
    doc = minimal_doc(
        p=7, dim=2, table=[],
        action={"n": 3, "q": 2, "r": 2,
                "phi": [[2, 0], [0, 4]],
                "h": [[1, 0], [0, 1]]},
    )
    with pytest.raises(FormatError) as exc:
        loads(json.dumps(doc))
    assert exc.value.path == "action"


def test_action_grading_modulus_mismatch_rejected():
    doc = minimal_doc(
        p=7, dim=2, table=[],
        grading={"n": 6, "degrees": [1, 2]},
        action={"n": 3, "q": 2, "r": 2,
                "phi": [[2, 0], [0, 4]],
                "h": [[0, 1], [1, 0]]},
    )
    with pytest.raises(FormatError) as exc:
        loads(json.dumps(doc))
    assert exc.value.path == "action.n"


def test_action_grading_eigenspace_mismatch_rejected():
    # declared degrees (2, 1) disagree with phi = diag(2, 4) eigenspaces
    doc = minimal_doc(
        p=7, dim=2, table=[],
        grading={"n": 3, "degrees": [2, 1]},
        action={"n": 3, "q": 2, "r": 2,
                "phi": [[2, 0], [0, 4]],
                "h": [[0, 1], [1, 0]]},
    )
    with pytest.raises(FormatError) as exc:
        loads(json.dumps(doc))
    assert exc.value.path == "grading.degrees"


def test_not_json_rejected():
    with pytest.raises(FormatError):
        loads("{not json")


def test_to_document_sparse_and_sorted():
    doc = to_document(LoadedAlgebra(heisenberg(5)))
    assert doc["table"] == [[1, 2, 3, 1], [2, 1, 3, 4]]


def test_meta_expected_none_values():
    doc = minimal_doc(meta={"name": "x", "expected": {"derived_length": None,
                                                      "nilpotency_class": None}})
    loaded = loads(json.dumps(doc))
    assert loaded.meta.expected == ExpectedStats(None, None)
