from __future__ import (
    absolute_import,
    unicode_literals,
)

import logging.config
import os
from typing import (
    Any,
    Dict,
)

from conformity import fields
from conformity.fields.logging import PYTHON_LOGGING_CONFIG_SCHEMA
from conformity.settings import Settings
import six

from dualeq.constants import (
    DEFAULT_MAX_CELLS,
    FIXTURES_ENVIRONMENT_VARIABLE,
    FORMAT_TEXT,
    OUTPUT_FORMATS,
)


__all__ = (
    'RunSettings',
    'build_settings',
    'logging_config',
)


def logging_config(level='WARNING'):  # type: (six.text_type) -> Dict[six.text_type, Any]
    """A console handler on standard error at `level`, applied to the `dualeq` loggers."""
    return {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'console': {'format': '%(levelname)s %(name)s: %(message)s'},
        },
        'handlers': {
            'console': {
                'class': 'logging.StreamHandler',
                'formatter': 'console',
                'level': level,
                'stream': 'ext://sys.stderr',
            },
        },
        'loggers': {
            'dualeq': {'handlers': ['console'], 'level': level, 'propagate': False},
        },
    }


class RunSettings(Settings):
    """
    Settings for one command line run. Library functions never read these; the command line passes the values on as
    keyword arguments.
    """

    schema = {
        'max_cells': fields.Integer(
            gte=1,
            description='The largest number of cells any enumeration may visit.',
        ),
        'format': fields.Constant(
            *OUTPUT_FORMATS,
            description='How reports and graphs are written.'
        ),
        'fixtures_path': fields.Nullable(fields.UnicodeString(
            description='A directory of fixture files used instead of the bundled ones.',
        )),
        'require_iso': fields.Boolean(
            description='Whether a component that covers a standard graph several times counts as a failure.',
        ),
        'jobs': fields.Integer(
            gte=1,
            description='The number of worker processes used by sweeps.',
        ),
        'logging': PYTHON_LOGGING_CONFIG_SCHEMA,
    }

    defaults = {
        'max_cells': DEFAULT_MAX_CELLS,
        'format': FORMAT_TEXT,
        'fixtures_path': None,
        'require_iso': False,
        'jobs': 1,
        'logging': logging_config(),
    }

    def configure_logging(self):  # type: () -> None
        logging.config.dictConfig(self['logging'])


def build_settings(**values):  # type: (**Any) -> RunSettings
    """
    Builds `RunSettings` from the given values, taking the fixtures directory from the environment when none is
    given. Raises `RunSettings.ImproperlyConfigured` for invalid values.
    """
    data = {key: value for key, value in values.items() if value is not None}
    if 'fixtures_path' not in data and os.environ.get(FIXTURES_ENVIRONMENT_VARIABLE):
        data['fixtures_path'] = six.text_type(os.environ[FIXTURES_ENVIRONMENT_VARIABLE])
    return RunSettings(data)
