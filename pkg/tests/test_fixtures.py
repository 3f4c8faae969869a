from __future__ import (
    absolute_import,
    unicode_literals,
)

import io
import os

import pytest

from dualeq.constants import FIXTURES_ENVIRONMENT_VARIABLE
from dualeq.error import FixtureError
from dualeq.fixtures import (
    BUNDLED_DIRECTORY,
    FIXTURE_DIGESTS,
    fixture_digest,
    fixture_names,
    fixture_path,
    fixtures_directory,
    load_fixture,
)
from dualeq.graphs.core import (
    edge_labels,
    standard_graph,
)
from dualeq.graphs.io import graph_to_json
from dualeq.shapes import parse_partition


STANDARD_FIXTURES = ('g321', 'g33', 'g411', 'g42', 'g51')


class TestBundledFixtures(object):
    def test_names(self):  # type: () -> None
        assert fixture_names() == ['g321', 'g33', 'g411', 'g42', 'g51', 'musiker']

    def test_digests_are_pinned(self):  # type: () -> None
        for name in fixture_names():
            assert fixture_digest(name) == FIXTURE_DIGESTS[name]

    def test_files_are_in_canonical_form(self):  # type: () -> None
        for name in fixture_names():
            with io.open(fixture_path(name), 'r', encoding='utf-8') as f:
                assert f.read() == graph_to_json(load_fixture(name))

    @pytest.mark.parametrize('name', STANDARD_FIXTURES)
    def test_standard_fixtures_match_the_standard_graphs(self, name):
        g = load_fixture(name)
        expected = standard_graph(parse_partition(','.join(name[1:])))
        assert (g.n, g.N) == (expected.n, expected.N)
        assert len(g) == len(expected)
        assert edge_labels(g) == edge_labels(expected)

    def test_musiker(self):  # type: () -> None
        g = load_fixture('musiker')
        assert (g.n, g.N) == (6, 6)
        assert len(g) == 32

    def test_unknown_name(self):  # type: () -> None
        with pytest.raises(FixtureError):
            load_fixture('g7')


class TestFixtureDirectories(object):
    def test_default_directory(self, monkeypatch):
        monkeypatch.delenv(FIXTURES_ENVIRONMENT_VARIABLE, raising=False)
        assert fixtures_directory() == BUNDLED_DIRECTORY

    def test_environment_variable(self, monkeypatch, tmpdir):
        monkeypatch.setenv(FIXTURES_ENVIRONMENT_VARIABLE, tmpdir.strpath)
        assert fixtures_directory() == tmpdir.strpath
        assert fixtures_directory('/elsewhere') == '/elsewhere'
        assert fixture_names() == []

    def test_digest_mismatch(self, tmpdir):
        with io.open(fixture_path('g42'), 'r', encoding='utf-8') as f:
            content = f.read()
        tmpdir.join('g42.json').write(content.replace('"N": 6', '"N":  6'))
        with pytest.raises(FixtureError):
            load_fixture('g42', directory=tmpdir.strpath)
        g = load_fixture('g42', directory=tmpdir.strpath, verify=False)
        assert len(g) == 9

    def test_unpinned_fixtures_load_without_a_digest(self, tmpdir):
        tmpdir.join('tiny.json').write(graph_to_json(standard_graph(parse_partition('2,1'))))
        assert fixture_names(tmpdir.strpath) == ['tiny']
        assert len(load_fixture('tiny', directory=tmpdir.strpath)) == 2

    def test_missing_directory(self, tmpdir):
        with pytest.raises(FixtureError):
            fixture_names(os.path.join(tmpdir.strpath, 'missing'))
