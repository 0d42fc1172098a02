# -*- coding: utf-8 -*-
"""
External formats: graph documents (JSON-compatible dicts), isogeny
documents, option strings for weights, classes and target profiles, and
JSON rendering of reports. Rationals always travel as "p/q" strings.
"""
import json
import re
from fractions import Fraction

from django_wallcross.category import Isogeny
from django_wallcross.graphs import Flag
from django_wallcross.graphs import Vertex
from django_wallcross.graphs import WGraph
from django_wallcross.weights import CurveClass
from django_wallcross.weights import TargetProfile
from django_wallcross.weights import WallcrossException
from django_wallcross.weights import WeightData
from django_wallcross.weights import format_rational
from django_wallcross.weights import parse_rational

PROFILE_RE = re.compile(r'^\s*(-?\d+)\s*:\s*(.*)$')
PROJECTIVE_RE = re.compile(r'^\s*[Pp](\d+)\s*$')


class DocumentException(WallcrossException):
    pass


def _fail(code, where, message):
    raise DocumentException(code, '{}: {}'.format(where, message))


def _integer(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        _fail('malformed', where, 'expected an integer, got {!r}'.format(value))
    return value


def _identifier(value, where):
    if not isinstance(value, str) or not value:
        _fail('malformed', where, 'expected a non-empty string id, got {!r}'.format(value))
    return value


def _items(document, key, where):
    value = document.get(key)
    if not isinstance(value, list):
        _fail('malformed', '{}.{}'.format(where, key), 'expected a list')
    for position, item in enumerate(value):
        if not isinstance(item, dict):
            _fail('malformed', '{}.{}[{}]'.format(where, key, position), 'expected an object')
    return value


def parse_profile_document(document, where='profile'):
    if not isinstance(document, dict):
        _fail('malformed', where, 'expected an object')
    dim_v = _integer(document.get('dim_v'), where + '.dim_v')
    kappa = document.get('kappa', [])
    if not isinstance(kappa, list):
        _fail('malformed', where + '.kappa', 'expected a list')
    kappa = tuple(_integer(k, '{}.kappa[{}]'.format(where, i)) for i, k in enumerate(kappa))
    try:
        return TargetProfile(dim_v, kappa)
    except WallcrossException as e:
        _fail(e.code, where, str(e))


def parse_document(document, where='$'):
    """Return ``(graph, meta)``; errors name the offending position."""
    if not isinstance(document, dict):
        _fail('malformed', where, 'a graph document is an object')
    profile = parse_profile_document(document.get('profile'), where + '.profile')

    vertices = []
    vertex_ids = {}
    for position, item in enumerate(_items(document, 'vertices', where)):
        at = '{}.vertices[{}]'.format(where, position)
        name = _identifier(item.get('id'), at + '.id')
        if name in vertex_ids:
            _fail('duplicate-id', at, 'vertex id {!r} repeats'.format(name))
        genus = _integer(item.get('genus', 0), at + '.genus')
        beta = item.get('beta', [0] * profile.rank)
        if not isinstance(beta, list) or len(beta) != profile.rank:
            _fail('malformed', at + '.beta',
                  'expected a list of {} integers'.format(profile.rank))
        coords = [_integer(c, '{}.beta[{}]'.format(at, i)) for i, c in enumerate(beta)]
        try:
            beta = CurveClass(tuple(coords))
        except WallcrossException as e:
            _fail(e.code, at + '.beta', str(e))
        vertex_ids[name] = len(vertices)
        vertices.append(Vertex(name, genus, beta))

    items = _items(document, 'flags', where)
    flag_ids = {}
    for position, item in enumerate(items):
        at = '{}.flags[{}]'.format(where, position)
        name = _identifier(item.get('id'), at + '.id')
        if name in flag_ids:
            _fail('duplicate-id', at, 'flag id {!r} repeats'.format(name))
        flag_ids[name] = position

    flags = []
    for position, item in enumerate(items):
        at = '{}.flags[{}]'.format(where, position)
        name = item['id']
        vertex = _identifier(item.get('vertex'), at + '.vertex')
        if vertex not in vertex_ids:
            _fail('unknown-vertex', at + '.vertex',
                  'flag {} sits on unknown vertex {!r}'.format(name, vertex))
        try:
            weight = parse_rational(item.get('weight', '1'))
        except WallcrossException as e:
            _fail(e.code, at + '.weight', str(e))
        partner = item.get('partner')
        if partner is None:
            partner_index = position
        elif _identifier(partner, at + '.partner') not in flag_ids:
            _fail('dangling-partner', at + '.partner',
                  'flag {} has unknown partner {!r}'.format(name, partner))
        else:
            partner_index = flag_ids[partner]
            if partner_index == position or items[partner_index].get('partner') != name:
                _fail('involution', at + '.partner',
                      'flag {} and {} are not partners of each other'.format(name, partner))
        flags.append(Flag(name, vertex_ids[vertex], partner_index, weight))

    meta = document.get('meta')
    return WGraph(profile, tuple(vertices), tuple(flags)), meta


def parse_graph(document):
    return parse_document(document)[0]


def serialize_graph(graph, meta=None):
    document = {
        'profile': {
            'dim_v': graph.profile.dim_v,
            'kappa': list(graph.profile.kappa),
        },
        'vertices': [
            {'id': v.name, 'genus': v.genus, 'beta': list(v.beta.coords)}
            for v in graph.vertices],
        'flags': [
            {
                'id': flag.name,
                'vertex': graph.vertices[flag.vertex].name,
                'weight': format_rational(flag.weight),
                'partner': None if flag.partner == index
                else graph.flags[flag.partner].name,
            }
            for index, flag in enumerate(graph.flags)],
    }
    if meta is not None:
        document['meta'] = meta
    return document


def loads(text, where='$'):
    try:
        return json.loads(text)
    except ValueError as e:
        raise DocumentException(
            'malformed', '{}: invalid JSON at line {} column {}'.format(
                where, getattr(e, 'lineno', '?'), getattr(e, 'colno', '?')))


def load_json(path):
    try:
        with open(path) as handle:
            text = handle.read()
    except OSError as e:
        raise DocumentException('malformed', '{}: {}'.format(path, e.strerror))
    return loads(text, path)


def load_graph(path):
    return parse_document(load_json(path), path)[0]


def dumps(value):
    return json.dumps(value, indent=2, ensure_ascii=False, default=_encode)


def _encode(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, CurveClass):
        return list(value.coords)
    if isinstance(value, WeightData):
        return {label: format_rational(w) for label, w in value.items()}
    if isinstance(value, WGraph):
        return serialize_graph(value)
    raise TypeError('cannot encode {!r}'.format(value))


# Isogeny documents


def parse_isogeny(document, where='$'):
    """
    ``{"source": graph, "target": graph, "flag_map": {target flag: source
    flag}, "vertex_map": {source vertex: target vertex}}``.
    """
    if not isinstance(document, dict):
        _fail('malformed', where, 'an isogeny document is an object')
    source = parse_document(document.get('source'), where + '.source')[0]
    target = parse_document(document.get('target'), where + '.target')[0]
    flag_map = document.get('flag_map')
    vertex_map = document.get('vertex_map')
    if not isinstance(flag_map, dict) or not isinstance(vertex_map, dict):
        _fail('malformed', where, 'flag_map and vertex_map must be objects')

    def lookup(names, name, code, at):
        for index, item in enumerate(names):
            if item.name == name:
                return index
        _fail(code, at, 'unknown id {!r}'.format(name))

    flags = []
    for flag in target.flags:
        if flag.name not in flag_map:
            _fail('malformed', where + '.flag_map', 'flag {} is not mapped'.format(flag.name))
        flags.append(lookup(source.flags, flag_map[flag.name], 'unknown-flag',
                            '{}.flag_map.{}'.format(where, flag.name)))
    vertices = []
    for vertex in source.vertices:
        if vertex.name not in vertex_map:
            _fail('malformed', where + '.vertex_map',
                  'vertex {} is not mapped'.format(vertex.name))
        vertices.append(lookup(target.vertices, vertex_map[vertex.name], 'unknown-vertex',
                               '{}.vertex_map.{}'.format(where, vertex.name)))
    return Isogeny(source, target, tuple(flags), tuple(vertices))


def serialize_isogeny(isogeny, with_graphs=True):
    source, target = isogeny.source, isogeny.target
    document = {}
    if with_graphs:
        document['source'] = serialize_graph(source)
        document['target'] = serialize_graph(target)
    document['flag_map'] = {
        target.flags[f].name: source.flags[x].name
        for f, x in enumerate(isogeny.flag_map)}
    document['vertex_map'] = {
        source.vertices[w].name: target.vertices[v].name
        for w, v in enumerate(isogeny.vertex_map)}
    return document


# Option strings


def parse_weight_spec(text):
    """
    ``"1,1/2,1/2"`` or ``"a=1,b=1/2"``: a list of ``(label, Fraction)``,
    labels being None when not given.
    """
    entries = []
    for chunk in str(text).split(','):
        label, sep, value = chunk.rpartition('=')
        entries.append((label.strip() if sep else None, parse_rational(value)))
    labelled = {label is not None for label, _ in entries}
    if len(labelled) > 1:
        raise DocumentException('malformed', 'label either all weights or none')
    return entries


def weights_from_spec(entries, labels=None):
    values = [value for _, value in entries]
    given = [label for label, _ in entries]
    if given and given[0] is not None:
        labels = given
    return WeightData.from_values(values, labels)


def parse_weights(text, labels=None):
    return weights_from_spec(parse_weight_spec(text), labels)


def parse_class(text):
    """``"1,0"``; ``"-"`` or the empty string for the rank-0 class."""
    text = str(text).strip()
    if text in ('', '-'):
        return CurveClass(())
    try:
        return CurveClass(tuple(int(part) for part in text.split(',')))
    except ValueError:
        raise DocumentException('malformed', 'not a curve class: {!r}'.format(text))


def parse_profile(text):
    """``point``, ``P<n>``, or ``<dim>:<kappa,...>``."""
    text = str(text).strip()
    if text.lower() == 'point':
        return TargetProfile.point()
    match = PROJECTIVE_RE.match(text)
    if match:
        return TargetProfile.projective_space(int(match.group(1)))
    match = PROFILE_RE.match(text)
    if match is None:
        raise DocumentException('malformed', 'not a target profile: {!r}'.format(text))
    kappa = match.group(2).strip()
    try:
        kappa = tuple(int(k) for k in kappa.split(',')) if kappa else ()
    except ValueError:
        raise DocumentException('malformed', 'not a target profile: {!r}'.format(text))
    return TargetProfile(int(match.group(1)), kappa)
