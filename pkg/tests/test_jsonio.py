import json

import pytest

from trickle.families import cactus, dual_cactus_s3, gar3
from trickle.graph import GraphError, validate
from trickle.jsonio import dump_graph, graph_from_dict, load_graph

GOOD = {
    "vertices": [{"id": "x", "mu": "inf"}, {"id": "y", "mu": "inf"},
                 {"id": "z", "mu": "inf"}],
    "edges": [["x", "y"], ["x", "z"], ["y", "z"]],
    "less": [["y", "x"], ["z", "x"]],
    "phi": {"x": [["y", "z"], ["z", "y"]]},
}


def test_load_gar3_equivalent():
    g = graph_from_dict(GOOD)
    assert g.same_structure(gar3())


def test_round_trip(tmp_path):
    for make in (gar3, dual_cactus_s3, lambda: cactus(4)):
        g = make()
        path = tmp_path / "g.json"
        path.write_text(dump_graph(g))
        again = load_graph(path)
        assert again.same_structure(g)


def test_dump_is_byte_stable():
    assert dump_graph(gar3()) == dump_graph(gar3())


def _broken(**changes):
    doc = json.loads(json.dumps(GOOD))
    doc.update(changes)
    return doc


def test_unknown_top_field_rejected():
    with pytest.raises(GraphError, match="unknown fields"):
        graph_from_dict(_broken(colour="blue"))


def test_unknown_vertex_field_rejected():
    doc = _broken(vertices=[{"id": "x", "mu": 2, "note": "?"}])
    with pytest.raises(GraphError, match="unknown vertex fields"):
        graph_from_dict(doc)


def test_bad_mu_rejected():
    with pytest.raises(GraphError, match="mu"):
        graph_from_dict(_broken(vertices=[{"id": "x", "mu": 1}], edges=[], less=[], phi={}))
    with pytest.raises(GraphError, match="mu"):
        graph_from_dict(_broken(vertices=[{"id": "x", "mu": "lots"}], edges=[], less=[], phi={}))


def test_bad_ids_rejected():
    with pytest.raises(GraphError, match="may not contain"):
        graph_from_dict({"vertices": [{"id": "a b", "mu": 2}], "edges": []})
    with pytest.raises(GraphError, match="may not contain"):
        graph_from_dict({"vertices": [{"id": "a^2", "mu": 2}], "edges": []})
    with pytest.raises(GraphError, match="duplicate"):
        graph_from_dict({"vertices": [{"id": "a", "mu": 2}, {"id": "a", "mu": 2}],
                         "edges": []})


def test_unknown_vertex_in_relation_rejected():
    with pytest.raises(GraphError, match="unknown vertex"):
        graph_from_dict(_broken(edges=[["x", "w"]]))
    with pytest.raises(GraphError, match="unknown vertex"):
        graph_from_dict(_broken(less=[["w", "x"]]))


def test_order_cycle_rejected():
    with pytest.raises(GraphError, match="cycle"):
        graph_from_dict(_broken(less=[["x", "y"], ["y", "x"]]))


def test_phi_outside_star_rejected():
    doc = _broken(edges=[["x", "y"]], phi={"x": [["z", "y"]]}, less=[])
    with pytest.raises(GraphError, match="not a star vertex"):
        graph_from_dict(doc)


def test_broken_phi_loads_but_fails_validation():
    # a non-bijective star map is a file we must accept and then diagnose
    doc = _broken(phi={"x": [["y", "z"], ["z", "z"]]})
    g = graph_from_dict(doc)
    report = validate(g)
    assert not report.ok
    assert "structure" in report.axioms_violated()


def test_not_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{")
    with pytest.raises(GraphError, match="not valid JSON"):
        load_graph(path)


def test_unreadable_file(tmp_path):
    with pytest.raises(GraphError, match="cannot read"):
        load_graph(tmp_path / "missing.json")
