import pytest

from gridhfk import component_count
from gridhfk.corpus import CorpusEntry, all_entries, builtin_entries, get, load_directory, shift_grid
from gridhfk.errors import OutOfRange
from gridhfk.grid import GridDiagram, format_grid


def test_builtin_entries_are_knots():
    for entry in builtin_entries():
        assert component_count(entry.grid) == 1
        assert entry.provenance


def test_shift_grid():
    G = shift_grid(5, 2)
    assert G.sigma_O == (1, 2, 3, 4, 5)
    assert G.sigma_X == (3, 4, 5, 1, 2)


def test_shift_grid_bad_shift():
    with pytest.raises(OutOfRange):
        shift_grid(5, 5)


def test_get_unknown_name():
    with pytest.raises(OutOfRange):
        get("not-a-knot")


def test_entry_requires_provenance():
    with pytest.raises(OutOfRange):
        CorpusEntry("x", GridDiagram(2, (1, 2), (2, 1)), "")


def test_load_directory(tmp_path):
    (tmp_path / "mine.grid").write_text(format_grid(shift_grid(5, 2)) + "\n")
    entries = load_directory(tmp_path)
    assert [e.name for e in entries] == ["mine"]
    assert entries[0].grid == shift_grid(5, 2)


def test_extra_corpus_dir(tmp_path, monkeypatch):
    (tmp_path / "extra.grid").write_text(format_grid(shift_grid(7, 2)) + "\n")
    monkeypatch.setenv("GRIDHFK_CORPUS_DIR", str(tmp_path))
    names = [e.name for e in all_entries()]
    assert "extra" in names and "trefoil" in names
