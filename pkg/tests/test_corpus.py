import json
import shutil

import pytest

from algkit.algebra import check_associative
from algkit.corpus import ENV_VAR, default_corpus_dir, get_entry, load_corpus
from algkit.errors import CorpusError
from algkit.parsing import parse_algebra, serialize_algebra


def test_size_and_order(corpus):
    assert len(corpus) == 58
    assert [e.index for e in corpus] == list(range(1, 59))


def test_as4_1_entry(corpus):
    e = corpus[0]
    assert e.name == "As4_1"
    assert (e.expected_dim_der, e.expected_dim_centroid) == (6, 2)
    sc = e.algebra()
    assert sc.product(0, 0) == (0, 0, 1, 0)
    assert sc.product(1, 1) == (0, 0, 0, 1)
    assert sum(1 for x in sc.table if x) == 2


def test_parametric_entries(corpus):
    params = {e.name: [(p.name, p.value) for p in e.parameters] for e in corpus if e.parameters}
    assert params == {"As4_9": [("alpha", 2)], "As4_23": [("mu", 2)], "As4_35": [("lambda", 2)]}
    sc = get_entry("As4_35").algebra()
    assert sc.gamma(0, 1, 3) == 2 and sc.gamma(1, 0, 3) == -2


def test_all_entries_associative(corpus_algebras):
    assert all(check_associative(sc) for sc in corpus_algebras.values())


def test_entries_are_distinct(corpus_algebras):
    tables = {sc.table for sc in corpus_algebras.values()}
    assert len(tables) == 58


def test_entries_roundtrip(corpus_algebras):
    for sc in corpus_algebras.values():
        assert parse_algebra(serialize_algebra(sc), name=sc.name) == sc


def test_env_override(tmp_path, monkeypatch):
    src = default_corpus_dir()
    for name in ("As4_1.alg", "As4_20.alg"):
        shutil.copy(src / name, tmp_path / name)
    (tmp_path / "index.json").write_text(json.dumps({"entries": [
        {"name": "As4_20", "file": "As4_20.alg", "expected_dim_der": 0, "expected_dim_centroid": 4},
        {"name": "As4_1", "file": "As4_1.alg", "expected_dim_der": 6, "expected_dim_centroid": 2},
    ]}))
    monkeypatch.setenv(ENV_VAR, str(tmp_path))
    assert [e.name for e in load_corpus()] == ["As4_20", "As4_1"]


def test_missing_index(tmp_path):
    with pytest.raises(CorpusError, match="index not found"):
        load_corpus(tmp_path)


def test_corrupt_index(tmp_path):
    (tmp_path / "index.json").write_text("{not json")
    with pytest.raises(CorpusError, match="not valid JSON"):
        load_corpus(tmp_path)


def test_missing_definition_file(tmp_path):
    (tmp_path / "index.json").write_text(json.dumps({"entries": [{"name": "X_1", "file": "nope.alg"}]}))
    with pytest.raises(CorpusError, match="cannot read"):
        load_corpus(tmp_path)


def test_duplicate_entry(tmp_path):
    (tmp_path / "a.alg").write_text("dim 1")
    entries = [{"name": "X_1", "file": "a.alg"}] * 2
    (tmp_path / "index.json").write_text(json.dumps({"entries": entries}))
    with pytest.raises(CorpusError, match="duplicate"):
        load_corpus(tmp_path)


def test_unparsable_entry_strict_and_lenient(tmp_path):
    (tmp_path / "a.alg").write_text("dim 2\ne1*e1 = e7")
    (tmp_path / "index.json").write_text(json.dumps({"entries": [{"name": "X_1", "file": "a.alg"}]}))
    with pytest.raises(CorpusError, match="X_1"):
        load_corpus(tmp_path)
    [e] = load_corpus(tmp_path, strict=False)
    assert e.parameters == ()
