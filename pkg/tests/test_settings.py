from __future__ import (
    absolute_import,
    unicode_literals,
)

import logging

import pytest

from dualeq.constants import (
    DEFAULT_MAX_CELLS,
    FIXTURES_ENVIRONMENT_VARIABLE,
    FORMAT_JSON,
    FORMAT_TEXT,
)
from dualeq.settings import (
    RunSettings,
    build_settings,
    logging_config,
)


class TestRunSettings(object):
    def test_defaults(self, monkeypatch):
        monkeypatch.delenv(FIXTURES_ENVIRONMENT_VARIABLE, raising=False)
        settings = build_settings()
        assert settings['max_cells'] == DEFAULT_MAX_CELLS
        assert settings['format'] == FORMAT_TEXT
        assert settings['fixtures_path'] is None
        assert settings['require_iso'] is False
        assert settings['jobs'] == 1
        assert settings['logging']['loggers']['dualeq']['level'] == 'WARNING'

    def test_values_override_defaults(self, monkeypatch):
        monkeypatch.delenv(FIXTURES_ENVIRONMENT_VARIABLE, raising=False)
        settings = build_settings(max_cells=8, format=FORMAT_JSON, require_iso=True, jobs=None)
        assert settings['max_cells'] == 8
        assert settings['format'] == FORMAT_JSON
        assert settings['require_iso'] is True
        assert settings['jobs'] == 1

    def test_fixtures_path_from_environment(self, monkeypatch, tmpdir):
        monkeypatch.setenv(FIXTURES_ENVIRONMENT_VARIABLE, tmpdir.strpath)
        assert build_settings()['fixtures_path'] == tmpdir.strpath
        assert build_settings(fixtures_path='/elsewhere')['fixtures_path'] == '/elsewhere'

    def test_validation(self):  # type: () -> None
        with pytest.raises(RunSettings.ImproperlyConfigured):
            build_settings(format='xml')

        with pytest.raises(RunSettings.ImproperlyConfigured):
            build_settings(max_cells=0)

        with pytest.raises(RunSettings.ImproperlyConfigured):
            build_settings(jobs='two')

        with pytest.raises(RunSettings.ImproperlyConfigured) as error_context:
            build_settings(colour='blue')
        assert 'colour' in error_context.value.args[0]

    def test_configure_logging(self):  # type: () -> None
        try:
            build_settings(logging=logging_config('DEBUG')).configure_logging()
            assert logging.getLogger('dualeq').level == logging.DEBUG
            assert logging.getLogger('dualeq').propagate is False
        finally:
            build_settings().configure_logging()
        assert logging.getLogger('dualeq').level == logging.WARNING
