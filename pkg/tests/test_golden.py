import json

import pytest

from principal_hodge import ConfigurationError, ResourceError, SearchOptions, verify_paper
from principal_hodge.golden import select_tables, table_ids


def test_table_ids_unique_and_scoped():
    ids = table_ids()
    assert len(ids) == len(set(ids))
    assert [t.id for t in select_tables("T:C")] == ["T:C(a)", "T:C(b)", "T:C(c)"]
    assert [t.id for t in select_tables("S:Aeg-rank7")] == ["S:Aeg-rank7", "S:Aeg-rank7-dual"]
    assert len(select_tables("all")) == len(ids)
    assert [t.id for t in select_tables(["P:rank1", "P:rank1", "T:G2"])] == ["P:rank1", "T:G2"]
    with pytest.raises(ConfigurationError):
        select_tables("T:Z")


def test_typo_flags():
    flagged = {t.id for t in select_tables("all") if t.paper_typo}
    assert {"T:C(c)", "P:rank3"} <= flagged


def test_report_json_shape():
    rep = verify_paper(["P:rank1", "P:rank3"])
    assert rep.ok and rep.passed == 2
    d = json.loads(rep.dumps())
    assert set(d) >= {"tables"}
    p1, p3 = d["tables"]
    assert p1["id"] == "P:rank1" and p1["status"] == "PASS" and p1["missing"] == p1["extra"] == []
    assert "paper_typo" not in p1 and p3["paper_typo"]
    e = p3["found"][0]
    assert set(e) >= {"type", "mu", "n"}
    assert sorted(x["n"] for x in p3["found"]) == [[1, 2, 3], [3, 2, 1]]
    assert rep.render_text().rstrip().endswith("2/2 tables PASS")


def test_reports_are_deterministic():
    assert verify_paper("T:G2").dumps() == verify_paper("T:G2").dumps()


def test_ceiling_skips_are_errors():
    with pytest.raises(ResourceError):
        verify_paper("T:B(b)", SearchOptions(dim_ceiling=10))
