import json

import pytest

from gitfan.chambers import embedding_numbers, gitfan, interior_cones
from gitfan.cone import cone_from_rays
from gitfan.errors import DataInconsistencyError
from gitfan.fixtures import nilpotent_sl4, shipped_fixtures, sl3_flag, sl3_type1, sl3_type2, sl4_example
from gitfan.geometry import (
    EmbeddingReport,
    canonical_class,
    cov,
    divisor_cones,
    embedding_report,
    is_locally_factorial,
    is_q_factorial,
    morphism_graph,
    picard,
    relevant_faces,
)
from gitfan.lattice import INFINITE, span

SL4 = sl4_example()
SL4_FAN = gitfan(SL4)


def test_sl4_morphism_graph():
    g = morphism_graph(SL4, SL4_FAN)
    assert len(g.nodes) == 9 and len(g.edges) == 16
    assert len(g.hasse().edges) == 12
    # acyclic: edges go strictly down in dimension
    assert all(g.dims[a] > g.dims[b] for a, b in g.edges)


def test_relevant_faces_and_cov_sl4():
    assert cov(SL4, (3, 2, 1)) == [(1, 2, 4), (1, 4, 5)]
    centre = cov(SL4, (1, 1, 0))
    assert centre == [(1, 2), (4, 5)]
    rel = relevant_faces(SL4, (1, 1, 0))
    assert (1, 2, 3, 4, 5) in rel and set(centre) <= set(rel)
    assert cov(SL4, (1, 1, 0), mode="maximal") == [(1, 2, 3, 4, 5)]
    with pytest.raises(ValueError):
        cov(SL4, (1, 1, 0), mode="other")


def test_chi_must_be_interior():
    with pytest.raises(DataInconsistencyError) as e:
        cov(SL4, (2, 1, 1))
    assert e.value.kind == "CHI_OUTSIDE_INTERIOR"
    with pytest.raises(DataInconsistencyError):
        picard(SL4, (-1, 0, 0))


def test_sl4_picard():
    pic, idx = picard(SL4, (3, 2, 1))
    assert idx == 1 and pic.rank == 3
    pic, idx = picard(SL4, (1, 1, 0))
    assert idx == INFINITE and pic == span([(1, 1, 0)], 3)


def test_sl4_factoriality():
    nums = embedding_numbers(SL4, SL4_FAN)
    for k, i in nums.items():
        qf = is_q_factorial(SL4, chamber=i, fan=SL4_FAN)
        lf = is_locally_factorial(SL4, chamber=i, fan=SL4_FAN)
        assert qf == (k <= 4) == (SL4_FAN.cone(i).dim == 3)
        assert lf == (k <= 4)


def test_chamber_id_must_be_interior():
    with pytest.raises(DataInconsistencyError) as e:
        cov(SL4, chamber=1, fan=SL4_FAN)
    assert e.value.kind == "UNKNOWN_ID"
    with pytest.raises(DataInconsistencyError):
        embedding_report(SL4, 2, SL4_FAN)


@pytest.mark.parametrize("pq", [(1, 1), (2, 1), (1, 2), (3, 2)])
def test_sl3_type1(pq):
    p, q = pq
    prob = sl3_type1(p, q)
    assert cov(prob, (1,)) == [(i,) for i in range(1, 7)]
    pic, idx = picard(prob, (1,))
    assert idx == p * (p + q) and pic == span([(p * (p + q),)], 1)
    assert canonical_class(prob) == (-4 * p - 2 * q,)
    assert is_q_factorial(prob, (1,))
    # the literal "maximal" reading gives the whole lattice instead
    assert picard(prob, (1,), mode="maximal")[1] == 1


def test_type2_and_flag():
    assert canonical_class(sl3_type2(1, 2)) == (-9,)
    assert canonical_class(sl3_flag()) == (-2, -2)
    assert picard(sl3_flag(), (1, 1))[1] == 1
    assert is_locally_factorial(sl3_flag(), (1, 1))
    # cov is the three singletons: Z ∩ Z ∩ 2Z
    assert picard(nilpotent_sl4(), (1,))[1] == 2


def test_divisor_cones():
    eff, sample = divisor_cones(SL4, (3, 2, 1))
    assert eff == SL4.weight_cone
    assert sample == cone_from_rays([(1, 0, 0), (1, 1, 0), (1, 1, 1)], 3)
    assert sample.contains_relint((3, 2, 1))


def test_reports_json_round_trip():
    for name, (prob, _) in shipped_fixtures().items():
        fan = gitfan(prob)
        for i in interior_cones(prob, fan):
            r = embedding_report(prob, i, fan)
            text = json.dumps(r.to_dict(), sort_keys=True)
            back = EmbeddingReport.from_dict(json.loads(text))
            assert back == r, name
            assert r.sigma.contains_relint(r.chi)
            assert "Grosshans" in r.assumptions and r.grosshans_assumed


def test_report_fields_sl4():
    nums = embedding_numbers(SL4, SL4_FAN)
    r = embedding_report(SL4, nums[9], SL4_FAN)
    assert r.embedding_number == 9 and r.chi == (1, 1, 0)
    assert r.picard_index == INFINITE and r.to_dict()["picard_index"] == "infinite"
    assert not r.q_factorial and r.ample_is_relint_of == nums[9]


def test_dot_output():
    g = morphism_graph(SL4, SL4_FAN)
    dot = g.to_dot()
    assert dot.startswith("digraph morphisms {") and dot.count("->") == 16
    assert g.hasse().to_dot().count("->") == 12
