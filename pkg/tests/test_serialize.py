import json

from hadwiger import constructions, embeddings, graphs, minors, serialize, vortex
from hadwiger.graphs import Split


def test_label_round_trip():
    labels = [3, "apex", (1, 2), ((1, 1), 2), Split((1, 1), 3), Split(0, 1)]
    for lab in labels:
        assert serialize.label_from_json(serialize.label_to_json(lab)) == lab


def test_graph_round_trip():
    g = graphs.lex_product(graphs.grid_graph(2), 2)
    back = serialize.graph_from_json(serialize.graph_to_json(g))
    assert back.labels == g.labels
    assert back.edges() == g.edges()


def test_graph_to_dot_mentions_every_edge():
    g = graphs.complete_graph(3)
    dot = serialize.graph_to_dot(g)
    assert dot.count("--") == 3


def test_embedding_round_trip_preserves_faces():
    emb = embeddings.triangulation_catalog(6)
    back = serialize.embedding_from_json(serialize.embedding_to_json(emb))
    assert embeddings.euler_genus(back) == 1
    assert len(embeddings.trace_faces(back)) == len(embeddings.trace_faces(emb))


def test_certificate_round_trip_reverifies():
    cert = constructions.with_apex(1, 1, 2, 1)
    text = serialize.dumps(serialize.certificate_to_json(cert))
    back = serialize.certificate_from_json(json.loads(text))
    assert back.target == cert.target
    assert back.guarantee == cert.guarantee
    assert constructions.verify_certificate(back).ok


def test_dumps_is_deterministic():
    cert = constructions.combined(0, 1, 2)
    a = serialize.dumps(serialize.certificate_to_json(cert))
    b = serialize.dumps(serialize.certificate_to_json(constructions.combined(0, 1, 2)))
    assert a == b


def test_model_round_trip():
    model = constructions.grid_model(2, 1)
    obj = serialize.model_to_json(model)
    back = serialize.model_from_json(obj, model.host)
    assert back.branch_sets == model.branch_sets
    assert minors.verify_model(back).ok


def test_vortex_round_trip():
    structure, _ = constructions.construct_vortex_graph(
        embeddings.triangulation_catalog(3), [embeddings.trace_faces(embeddings.triangulation_catalog(3))[0]], 2
    )
    v = structure.vortices[0]
    back = serialize.vortex_from_json(serialize.vortex_to_json(v))
    assert back.perimeter == v.perimeter
    assert back.bags == v.bags
    assert vortex.validate_circular(back).ok
