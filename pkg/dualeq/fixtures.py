from __future__ import (
    absolute_import,
    unicode_literals,
)

import hashlib
import json
import logging
import os
from typing import (
    List,
    Optional,
)

import six

from dualeq.constants import FIXTURES_ENVIRONMENT_VARIABLE
from dualeq.error import FixtureError
from dualeq.graphs.core import SignedColoredGraph
from dualeq.graphs.io import graph_from_json


__all__ = (
    'FIXTURE_DIGESTS',
    'fixture_digest',
    'fixture_names',
    'fixture_path',
    'fixtures_directory',
    'load_fixture',
)


_logger = logging.getLogger(__name__)


BUNDLED_DIRECTORY = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')


# sha256 of the bundled files, byte for byte
FIXTURE_DIGESTS = {
    'g321': '8dcbb2ff88d82673a85f54c07ff107eac51af7e220380d5cf9fe9f9967906d03',
    'g33': 'dd5ad1b0097d9d796c98a825adbadfd1dbe6cc2b5808d9318f8938d255a45390',
    'g411': '07a3f86034cb6eefc1021ef18844580cbdfa58618ae9370115906ae8a521b4e3',
    'g42': 'd8b3c1e6f31eccc9e3f65bb8c0213f2148e1f3b17743d0213e4b9d1db6391bdb',
    'g51': 'df98a4c42d49d31b41823c0ba99341ac52b5f237e1f1d96acb74b6241f82ff28',
    'musiker': '2eb54117f26894e61e7aa4f253ba86a0f65d91e858b3ff7a15d84b1fbf8029f8',
}


def fixtures_directory(directory=None):  # type: (Optional[six.text_type]) -> six.text_type
    """`directory` if given, else the `DEG_FIXTURES` environment variable, else the bundled fixtures."""
    return directory or os.environ.get(FIXTURES_ENVIRONMENT_VARIABLE) or BUNDLED_DIRECTORY


def fixture_names(directory=None):  # type: (Optional[six.text_type]) -> List[six.text_type]
    where = fixtures_directory(directory)
    try:
        found = os.listdir(where)
    except OSError as e:
        raise FixtureError('Cannot list fixtures in {}: {}'.format(where, e))
    return sorted(six.text_type(name[:-len('.json')]) for name in found if name.endswith('.json'))


def fixture_path(name, directory=None):  # type: (six.text_type, Optional[six.text_type]) -> six.text_type
    path = os.path.join(fixtures_directory(directory), '{}.json'.format(name))
    if not os.path.isfile(path):
        raise FixtureError('No fixture named {!r} in {}'.format(name, fixtures_directory(directory)))
    return path


def fixture_digest(name, directory=None):  # type: (six.text_type, Optional[six.text_type]) -> six.text_type
    with open(fixture_path(name, directory), 'rb') as f:
        return six.text_type(hashlib.sha256(f.read()).hexdigest())


def load_fixture(name, directory=None, verify=True):
    # type: (six.text_type, Optional[six.text_type], bool) -> SignedColoredGraph
    """
    Loads a fixture graph by name. Fixtures with a pinned digest must match it byte for byte unless `verify` is off.
    """
    path = fixture_path(name, directory)
    with open(path, 'rb') as f:
        content = f.read()
    if verify and name in FIXTURE_DIGESTS:
        digest = hashlib.sha256(content).hexdigest()
        if digest != FIXTURE_DIGESTS[name]:
            raise FixtureError('Fixture {} has digest {} but {} is pinned'.format(path, digest, FIXTURE_DIGESTS[name]))
    graph = graph_from_json(json.loads(content.decode('utf-8')))
    _logger.debug('Loaded fixture %s with %d vertices', name, len(graph))
    return graph
