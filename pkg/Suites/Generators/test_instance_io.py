import json
from pathlib import Path

import pytest

import cli
from listhom.errors import EXIT_TRUE, InvalidInput
from listhom.graph_core import build_graph, complete_graph, full_lists
from listhom.homomorphism_solver import SolverStats
from listhom.instance_gen import Instance, random_instance
from listhom.instance_io import (
    CompleteTargetModel,
    GraphModel,
    InstanceDocument,
    SolveReport,
    dump_instance,
    load_instance,
    parse_instance,
)

SCHEMAS = Path(__file__).resolve().parents[2] / "schemas"

TRIANGLE = {"graph": {"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]}, "target": {"k": 3}}


def test_parse_defaults_to_full_lists():
    instance = parse_instance(json.dumps(TRIANGLE))
    assert instance.graph.edges == frozenset({(0, 1), (1, 2), (0, 2)})
    assert instance.target == complete_graph(3)
    assert instance.lists == full_lists(3, 3)


def test_parse_explicit_target_with_loop():
    text = json.dumps({
        "graph": {"n": 2, "edges": [[0, 1]]},
        "lists": [[0], [0, 1]],
        "target": {"n": 2, "edges": [[0, 1], [1, 1]]},
    })
    instance = parse_instance(text)
    assert instance.target.has_loop(1)
    assert instance.lists == (frozenset({0}), frozenset({0, 1}))


@pytest.mark.parametrize(
    "document",
    [
        {**TRIANGLE, "lists": [[0], [1]]},
        {**TRIANGLE, "lists": [[0], [1], [3]]},
        {"graph": {"n": 2, "edges": [[0, 2]]}, "target": {"k": 2}},
        {"graph": {"n": 2}, "target": {"k": 2}, "colours": 2},
        {"graph": {"n": -1}, "target": {"k": 2}},
        {"graph": {"n": 2, "edges": [[0, 1, 1]]}, "target": {"k": 2}},
        {"graph": {"n": 2}},
    ],
)
def test_parse_rejects_invalid(document):
    with pytest.raises(InvalidInput):
        parse_instance(json.dumps(document))


def test_dump_uses_complete_shorthand():
    document = json.loads(dump_instance(random_instance(4, 6, 3, 0.7, "permutation")))
    assert document["target"] == {"k": 3}
    assert len(document["lists"]) == 6


def test_dump_keeps_explicit_target():
    h = build_graph(2, [(0, 1), (0, 0)])
    document = json.loads(dump_instance(Instance(build_graph(1, []), full_lists(1, 2), h)))
    assert document["target"] == {"n": 2, "edges": [[0, 0], [0, 1]]}


def test_dump_then_load(tmp_path):
    instance = random_instance(9, 7, 4, 0.6, "interval", target="random", target_loops=0.5)
    path = tmp_path / "instance.json"
    path.write_text(dump_instance(instance), encoding="utf-8")
    loaded = load_instance(path)
    assert loaded.graph == instance.graph
    assert loaded.target == instance.target
    assert loaded.lists == instance.lists


def test_load_missing_file(tmp_path):
    with pytest.raises(InvalidInput):
        load_instance(tmp_path / "missing.json")


def test_document_model_round_trip_of_shorthand():
    document = InstanceDocument.model_validate(TRIANGLE)
    assert document.target.to_graph() == complete_graph(3)


def _schema(name):
    return json.loads((SCHEMAS / name).read_text(encoding="utf-8"))


def _required(model):
    return {name for name, info in model.model_fields.items() if info.is_required()}


def test_instance_schema_matches_models():
    schema = _schema("instance.schema.json")
    assert set(schema["properties"]) == set(InstanceDocument.model_fields)
    assert set(schema["required"]) == _required(InstanceDocument)
    graph, complete = schema["$defs"]["graph"], schema["$defs"]["complete"]
    assert set(graph["properties"]) == set(GraphModel.model_fields)
    assert set(graph["required"]) == _required(GraphModel)
    assert set(complete["properties"]) == set(CompleteTargetModel.model_fields)
    assert set(complete["required"]) == _required(CompleteTargetModel)


def test_solve_result_schema_matches_report():
    schema = _schema("solve_result.schema.json")
    generated = SolveReport.model_json_schema()
    assert set(schema["properties"]) == set(generated["properties"])
    assert set(schema["required"]) == set(generated.get("required", []))
    assert set(schema["properties"]["stats"]["properties"]) == set(SolverStats().as_dict())


@pytest.mark.parametrize("target", ["complete", "random"])
def test_dumped_documents_use_declared_keys(target):
    schema = _schema("instance.schema.json")
    graph_keys = set(schema["$defs"]["graph"]["properties"])
    target_keys = graph_keys | set(schema["$defs"]["complete"]["properties"])
    document = json.loads(dump_instance(random_instance(11, 6, 3, 0.8, "interval", target=target, target_loops=0.5)))
    assert set(document) <= set(schema["properties"])
    assert set(document["graph"]) <= graph_keys
    assert set(document["target"]) <= target_keys


def test_solve_json_uses_declared_keys(tmp_path, capsys):
    schema = _schema("solve_result.schema.json")
    path = tmp_path / "p4.json"
    path.write_text(json.dumps({"graph": {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}, "target": {"k": 3}}), encoding="utf-8")
    assert cli.main(["solve", str(path), "--json", "--stats"]) == EXIT_TRUE
    report = json.loads(capsys.readouterr().out)
    assert set(report) <= set(schema["properties"])
    assert set(schema["required"]) <= set(report)
    assert set(report["stats"]) <= set(schema["properties"]["stats"]["properties"])
