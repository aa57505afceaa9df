import pytest

from trihopf.gallery import (BUILDERS, GalleryEntry, GalleryError, build, entries, find_entry,
                             load_manifest, run_entry)


def test_manifest_is_versioned_and_tagged():
    data = load_manifest()
    assert data["version"] == 1
    tags = set(data["provenance_tags"])
    assert tags == {"published", "derived", "trivial"}
    for e in entries():
        assert e.name in BUILDERS
        assert e.expected and set(e.provenance().values()) <= tags


def test_entry_keys_are_unique():
    keys = [e.key for e in entries()]
    assert len(keys) == len(set(keys))


def test_find_entry():
    assert find_entry("sweedler", {"lambda": 1}).expectations()["rank"] == 4
    assert find_entry("sweedler", {"lambda": 7}) is None


def test_compare_flags_a_wrong_expectation():
    res = build("sweedler", {"lambda": 1})
    wrong = GalleryEntry("sweedler", {"lambda": 1}, {"rank": {"value": 3, "provenance": "derived"}})
    rep = res.compare(wrong)
    assert not rep.ok
    assert rep.failures()[0].witness == {"expected": 3, "actual": 4}


def test_unknown_entry():
    with pytest.raises(GalleryError):
        build("nope")


def test_conductor_override():
    res = run_entry("sweedler", {"lambda": 1}, conductor=6)
    assert res.report.ok and res.properties["conductor"] == 6
    with pytest.raises(GalleryError):
        build("sweedler", {"lambda": 1}, conductor=3)


def test_parameters_outside_the_manifest():
    res = run_entry("sweedler", {"lambda": "1/3"})
    assert res.report.ok and res.properties["rank"] == 4
    assert "manifest_entry" not in res.report.info
    res = run_entry("hn", {"n": 3})
    assert res.report.ok and res.properties["dim"] == 16 and res.properties["rank"] == 16


@pytest.mark.parametrize("key", [e.key for e in entries() if e.name not in ("dim16", "dim36")])
def test_small_entries_match_manifest(key):
    e = next(x for x in entries() if x.key == key)
    res = run_entry(e.name, e.params)
    assert res.report.ok, [c.axiom for c in res.report.failures()]
