import json
import shutil
from math import comb

import pytest

from genuslab.census import (CHUNK, CensusConfig, CensusMismatch, chunk_invariants, max_h, read_census,
                             run_census, unimap_proxy, verify_inequalities, write_report)
from genuslab.config import CeilingExceeded
from genuslab.graphs import cycle_rank, enumerate_graphs, excess, is_connected


def test_small_examples(census7):
    _, res = census7
    assert res.get(4, 0, "E").labelled == 64
    r = res.get(5, 0, "E")
    assert (r.labelled, r.unlabelled) == (1023, 33)
    assert res.get(5, 2, "OE").labelled == 1024
    assert res.get(5, 1, "OE").labelled == 1023
    assert res.get(5, 1, "NE").labelled == 1024
    assert res.get(5, 0, "F").labelled == 291
    assert res.get(5, 0, "C").labelled == 125
    assert res.get(7, 0, "C").labelled == 7 ** 5
    assert res.get(7, max_h(7), "F").labelled == 2 ** 21
    assert (res.get(7, 0, "F").unlabelled, res.get(7, 0, "F").connected_unlabelled) == (37, 11)


def test_record_invariants(census7):
    _, res = census7
    by = {}
    for r in res.records:
        assert r.labelled >= r.unlabelled >= 0
        assert r.connected_labelled >= r.connected_unlabelled
        assert r.labelled <= 2 ** comb(r.n, 2)
        by.setdefault((r.n, r.family), []).append(r)
    for rows in by.values():
        rows.sort(key=lambda r: r.h)
        assert [r.labelled for r in rows] == sorted(r.labelled for r in rows)


def test_cross_family_coherence(census7):
    _, res = census7
    for n in range(1, 6):
        for h in range(max_h(n) + 1):
            assert res.get(n, h, "F").labelled <= res.get(n, h, "E").labelled
            assert res.get(n, h, "XS").labelled <= res.get(n, h, "OENE").labelled
            assert res.get(n, h, "OE").labelled <= res.get(n, h + 1, "NE").labelled


def test_chunk_invariants_match_scalar():
    for n in range(1, 6):
        total = 1 << comb(n, 2)
        cr, xs, conn = chunk_invariants(n, 0, total)
        for i, G in enumerate(enumerate_graphs(n)):
            assert (cr[i], xs[i], bool(conn[i])) == (cycle_rank(G), excess(G), is_connected(G))


def test_chunk_shards_agree():
    n = 6
    total = 1 << comb(n, 2)
    whole = chunk_invariants(n, 0, total)
    parts = [chunk_invariants(n, s, min(s + 5000, total)) for s in range(0, total, 5000)]
    for k in range(3):
        joined = [x for p in parts for x in p[k].tolist()]
        assert joined == whole[k].tolist()


def _snapshot(path):
    return {p.name: p.read_bytes() for p in sorted(path.iterdir()) if p.is_file()}


def test_resume_is_byte_identical(census7, tmp_path):
    out, _ = census7
    ref = _snapshot(out)
    assert "census.csv" in ref and "invariants_n5.csv" in ref
    work = tmp_path / "c"
    shutil.copytree(out, work)
    ckpts = sorted((work / "checkpoints").glob("n7_*.json"))
    assert len(ckpts) == (1 << 21) // CHUNK
    for p in ckpts[::3]:
        p.unlink()
    (work / "census.csv").unlink()
    run_census(CensusConfig(nmax=7, out=work, resume=True))
    assert _snapshot(work) == ref


def test_rerun_is_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run_census(CensusConfig(nmax=6, out=a))
    run_census(CensusConfig(nmax=6, out=b, jobs=2))
    assert _snapshot(a) == _snapshot(b)


def test_corrupted_checkpoint_is_detected(tmp_path):
    out = tmp_path / "c"
    run_census(CensusConfig(nmax=6, out=out))
    ck = sorted((out / "checkpoints").glob("n6_*.json"))[0]
    data = json.loads(ck.read_text())
    data["cr"][0] += 1
    ck.write_text(json.dumps(data))
    with pytest.raises(CensusMismatch):
        run_census(CensusConfig(nmax=6, out=out, resume=True))


def test_read_back_and_verify(census7, tmp_path):
    out, res = census7
    back = read_census(out)
    assert back.records == res.records
    report = verify_inequalities(back)
    claims = [r.claim for r in report]
    assert len(claims) == len(set(claims)) == 10
    assert all(r.status == "holds" for r in report), [r for r in report if r.status != "holds"]
    write_report(report, tmp_path / "v.json")
    rows = json.loads((tmp_path / "v.json").read_text())
    assert set(rows[0]) == {"claim", "anchor", "instance", "status", "witness"}


def test_ceiling():
    with pytest.raises(CeilingExceeded):
        CensusConfig(nmax=8)
    assert CensusConfig(nmax=7).genus_nmax == 5


def test_unimap_proxy_rows():
    rows = unimap_proxy(5)
    assert {(r.n, r.e) for r in rows if r.n == 4} == {(4, 3), (4, 4), (4, 5), (4, 6)}
    assert sum(r.graphs for r in rows if r.n == 5) == 20
    assert all(r.holds for r in rows)
