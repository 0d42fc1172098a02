import json

import pytest

from django_wallcross import documents
from django_wallcross.graphs import make_graph
from django_wallcross.weights import TargetProfile


@pytest.fixture
def point():
    return TargetProfile.point()


@pytest.fixture
def p2():
    return TargetProfile.projective_space(2)


@pytest.fixture
def tripod(point):
    return make_graph(point, [(0, None)], [], [(0, 1, '1'), (0, 1, '2'), (0, 1, '3')])


@pytest.fixture
def write_json(tmp_path):
    def write(name, document):
        path = tmp_path / name
        path.write_text(json.dumps(document))
        return str(path)
    return write


@pytest.fixture
def graph_file(write_json):
    def write(graph, name='graph.json'):
        return write_json(name, documents.serialize_graph(graph))
    return write
