import threading

import pytest
from hypothesis import given, strategies as st

from principal_hodge import ConfigurationError, build_root_system, weight_system
from principal_hodge.wscache import WeightCache, dumps_json, loads_json, parse_text, render_text

MODULES = [("A1", (3,)), ("B3", (0, 0, 1)), ("C3", (0, 1, 0)), ("G2", (1, 0)), ("D4", (0, 0, 0, 1)),
           ("A3", (1, 0, 1))]


def ws_of(t, dyn):
    rs = build_root_system(t)
    return weight_system(rs, rs.weight(dyn))


@given(st.sampled_from(MODULES))
def test_round_trips(mod):
    ws = ws_of(*mod)
    text = render_text(ws)
    back = parse_text(text)
    assert back.entries == ws.entries and render_text(back) == text
    js = dumps_json(ws)
    assert loads_json(js).entries == ws.entries and dumps_json(loads_json(js)) == js


def test_text_format():
    text = render_text(ws_of("B3", (0, 0, 1)))
    lines = text.splitlines()
    assert lines[0] == "# weight-system B3 mu=0,0,1 dim=8"
    assert len(lines) == 9 and all(ln.endswith(" : 1") for ln in lines[1:])
    rows = [tuple(map(int, ln.split(":")[0].split())) for ln in lines[1:]]
    assert rows == sorted(rows)


@pytest.mark.parametrize("bad", ["", "weight-system B3", "# weight-system B3 mu=0,0,1 dim=9\n0 0 1 : 1\n",
                                 "# weight-system B3 mu=0,0,1 dim=2\n0 0 1 : 1\n0 0 1 : 1\n"])
def test_malformed_text(bad):
    with pytest.raises(ConfigurationError):
        parse_text(bad)


def test_cache_get_inspect_clear(tmp_path):
    cache = WeightCache(tmp_path / "c")
    assert cache.entries() == [] and cache.clear() == 0
    rs = build_root_system("C3")
    mu = rs.weight((0, 0, 1))
    first = cache.get(rs, mu)
    p = cache.path_for(rs, mu)
    assert p.name == "C3_0_0_1.txt" and p.read_text() == render_text(first)
    again = cache.get(rs, mu)
    assert again.entries == first.entries
    assert cache.entries() == [(p.name, p.stat().st_size)]
    assert not list(p.parent.glob(".tmp-*"))
    assert cache.clear() == 1 and cache.entries() == []


def test_cache_concurrent_writers(tmp_path):
    cache = WeightCache(tmp_path)
    rs = build_root_system("B4")
    mu = rs.weight((0, 0, 0, 1))
    out = []
    ts = [threading.Thread(target=lambda: out.append(cache.get(rs, mu).dim)) for _ in range(8)]
    for t in ts:
        t.start()
    for t in ts:
        t.join()
    assert out == [16] * 8
    assert parse_text(cache.path_for(rs, mu).read_text()).dim == 16
