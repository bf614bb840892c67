import os

import pytest

import mcgpres

FIXTURES = mcgpres.default_fixtures_dir()


def fixture(*parts):
    return os.path.join(FIXTURES, *parts)


def test_word_reduction():
    assert mcgpres.reduce_word("a1 a1^-1") == "1"
    assert mcgpres.reduce_word("a1 y a1 y^-1") == "a1 y a1 y^-1"
    assert mcgpres.invert_word("a1 y") == "y^-1 a1^-1"
    assert mcgpres.cyclically_reduce("a1 a2 a1^-1") == ("a2", "a1")


def test_word_syntax_error():
    with pytest.raises(ValueError):
        mcgpres.reduce_word("q7")
    with pytest.raises(ValueError):
        mcgpres.reduce_word("a1^3")


def test_catalog_counts():
    p = mcgpres.build_family("simplified-bordered", 3)
    assert p.generators == ["a1", "a2", "y"]
    assert len(p.relations) == 4
    q = mcgpres.build_family("parszep-bordered", 6)
    assert (len(q.generators), len(q.relations)) == (14, 46)
    assert q.violations() == []


def test_catalog_rejects_bad_genus():
    with pytest.raises(ValueError):
        mcgpres.build_family("parszep-closed", 3)
    with pytest.raises(ValueError):
        mcgpres.build_family("no-such-family", 4)


def test_abelianization_both_pivots():
    p = mcgpres.build_family("simplified-bordered", 3)
    for column_first in (False, True):
        a = mcgpres.abelianization(p, column_first=column_first)
        assert a["torsion"] == ["2", "2"]
        assert a["free_rank"] == 0
        assert a["text"] == "Z/2 + Z/2"


def test_free_presentation():
    p = mcgpres.read_presentation(fixture("presentations", "free2.pres"))
    assert mcgpres.abelianization(p)["text"] == "Z^2"


def test_coset_enumeration():
    s3 = mcgpres.read_presentation(fixture("presentations", "s3.pres"))
    assert mcgpres.coset_index(s3) == 6
    assert mcgpres.coset_index(s3, ["x"]) == 3
    assert mcgpres.coset_index(s3, max_cosets=2) is None


def test_certificate_files():
    assert mcgpres.check_witness_file(fixture("witnesses", "c4prime-g3.wit")) == [("C4'", True)]
    assert mcgpres.check_witness_file(fixture("witnesses", "c4prime-g3-corrupted.wit"))[0][1] is False
    rep = mcgpres.check_script_file(fixture("scripts", "g3-elimination.tz"))
    assert rep["ok"] and rep["generators"] == ["a1", "a2", "y"]
    assert not mcgpres.check_script_file(fixture("scripts", "g3-elimination-bad.tz"))["ok"]
    enum = mcgpres.check_enum_file(fixture("enum", "g4-killed.enum"))
    assert enum["ok"] and enum["index"] == 1


def test_compare_families():
    probes = mcgpres.compare_families("parszep-bordered", "simplified-bordered", 4)
    assert probes["abelianization"]
    assert all(probes.values())


def test_u_words():
    u = mcgpres.u_words_by_recursion(4)
    assert u[1] == "a1 y"
    assert len(u[2].split()) == 8
