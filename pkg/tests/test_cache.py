"""Advisory count cache: line format, tolerance to junk, no rewrites."""

import json

from peaklab.cache import CountCache
from peaklab.compositions import Composition


def test_round_trip(tmp_path):
    path = tmp_path / "counts.jsonl"
    cache = CountCache(str(path), "1.0")
    assert cache.get((4, 3, 2)) is None
    cache.put((4, 3, 2), 24192)
    assert cache.get((4, 3, 2)) == 24192
    assert cache.get(Composition((4, 3, 2))) == 24192

    reloaded = CountCache(str(path), "1.0")
    assert reloaded.get((4, 3, 2)) == 24192


def test_record_format(tmp_path):
    path = tmp_path / "counts.jsonl"
    CountCache(str(path), "1.0").put((4, 3, 2), 24192)
    lines = path.read_text().splitlines()
    assert len(lines) == 1
    assert json.loads(lines[0]) == {"composition": "4,3,2",
                                    "count": "24192", "version": "1.0"}


def test_existing_key_is_not_rewritten(tmp_path):
    path = tmp_path / "counts.jsonl"
    cache = CountCache(str(path), "1.0")
    cache.put((3, 2), 40)
    cache.put((3, 2), 41)
    assert cache.get((3, 2)) == 40
    assert len(path.read_text().splitlines()) == 1


def test_version_mismatch_is_skipped(tmp_path):
    path = tmp_path / "counts.jsonl"
    record = {"composition": "3,2", "count": "999", "version": "old"}
    path.write_text(json.dumps(record) + "\n")
    assert CountCache(str(path), "new").get((3, 2)) is None


def test_junk_lines_are_skipped(tmp_path):
    path = tmp_path / "counts.jsonl"
    good = {"composition": "3,2", "count": "40", "version": "1.0"}
    path.write_text("\n".join([
        "not json at all",
        "[1, 2, 3]",
        json.dumps({"composition": "3,2", "version": "1.0"}),
        json.dumps({"composition": "3,2", "count": "abc", "version": "1.0"}),
        json.dumps({"composition": "x,y", "count": "1", "version": "1.0"}),
        json.dumps({"composition": "1,2", "count": "7", "version": "1.0"}),
        "",
        json.dumps(good),
    ]) + "\n")
    cache = CountCache(str(path), "1.0")
    assert cache.get((3, 2)) == 40
    assert cache.get((1, 2)) is None


def test_inadmissible_put_is_ignored(tmp_path):
    path = tmp_path / "counts.jsonl"
    cache = CountCache(str(path), "1.0")
    cache.put((1, 2), 0)
    assert cache.get((1, 2)) is None
    assert not path.exists()


def test_missing_file_means_empty_cache(tmp_path):
    cache = CountCache(str(tmp_path / "absent.jsonl"), "1.0")
    assert cache.get((3, 2)) is None
