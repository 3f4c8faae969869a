from __future__ import (
    absolute_import,
    unicode_literals,
)

from typing import (
    Any,
    Dict,
    List,
    Optional,
)

import attr
import six

from dualeq.utils import (
    attr_is_optional,
    attr_is_string,
)


__all__ = (
    'CheckReport',
    'Failure',
    'Issue',
)


@attr.s
class Issue(object):
    """
    Represents something found while checking a graph, a family or an expansion.
    """
    message = attr.ib(validator=attr_is_string())  # type: six.text_type
    pointer = attr.ib(default=None, validator=attr_is_optional(attr_is_string()))  # type: Optional[six.text_type]


@attr.s
class Failure(Issue):
    """
    Represents a failed check. `witness` holds JSON-ready details (vertices, colors, windows, residual terms) that
    let the failure be reproduced.
    """
    code = attr.ib(default='', validator=attr_is_string())  # type: six.text_type
    witness = attr.ib(factory=dict)  # type: Dict[six.text_type, Any]

    def as_dict(self):  # type: () -> Dict[six.text_type, Any]
        result = {'code': self.code, 'message': self.message}  # type: Dict[six.text_type, Any]
        if self.pointer:
            result['pointer'] = self.pointer
        if self.witness:
            result['witness'] = self.witness
        return result


@attr.s
class CheckReport(object):
    failures = attr.ib(factory=list)  # type: List[Failure]

    @property
    def passed(self):  # type: () -> bool
        return not self.failures

    def as_dict(self):  # type: () -> Dict[six.text_type, Any]
        return {
            'passed': self.passed,
            'failures': [f.as_dict() for f in self.failures],
        }
