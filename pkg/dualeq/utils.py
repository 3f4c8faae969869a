from __future__ import (
    absolute_import,
    unicode_literals,
)

from typing import (
    Any as AnyType,
    Callable,
    Optional,
    Tuple as TupleType,
    Type,
    Union,
)

import attr
import six


AttrsValidator = Callable[[AnyType, AnyType, AnyType], None]


attr_is_instance = (
    attr.validators.instance_of  # type: ignore
)  # type: Callable[[Union[Type, TupleType[Type, ...]]], AttrsValidator]
attr_is_optional = attr.validators.optional  # type: Callable[[AttrsValidator], AttrsValidator]


def attr_is_int():  # type: () -> AttrsValidator
    """Creates an Attrs validator that ensures the argument is an integer."""
    return attr_is_instance(six.integer_types)


def attr_is_string():  # type: () -> AttrsValidator
    """Creates an Attrs validator that ensures the argument is a unicode string."""
    return attr_is_instance(six.text_type)


def attr_is_positive_int(minimum=1, error=ValueError):  # type: (int, Type[Exception]) -> AttrsValidator
    """
    Creates an Attrs validator that ensures the argument is an integer no smaller than `minimum`, raising `error`
    otherwise.
    """

    def validator(_instance, attribute, value):
        if not isinstance(value, six.integer_types) or isinstance(value, bool) or value < minimum:
            raise error(
                "'{name}' must be an integer >= {minimum} (got {value!r}).".format(
                    name=attribute.name,
                    minimum=minimum,
                    value=value,
                ),
            )

    return validator


def attr_is_int_sequence(
    minimum=None,  # type: Optional[int]
    maximum=None,  # type: Optional[int]
    error=ValueError,  # type: Type[Exception]
):
    # type: (...) -> AttrsValidator
    """
    Creates an Attrs validator that ensures the argument is a tuple of integers, each optionally bounded. Values
    out of bounds raise `error`.
    """

    # noinspection PyShadowingNames
    def validator(_instance, attr, value):
        if not isinstance(value, tuple):
            raise TypeError(
                "'{name}' must be a tuple (got {value!r} that is a {actual!r}).".format(
                    name=attr.name,
                    value=value,
                    actual=type(value),
                ),
            )
        for i, item in enumerate(value):
            if not isinstance(item, six.integer_types) or isinstance(item, bool):
                raise TypeError("'{name}[{i}]' must be an integer (got {item!r}).".format(
                    name=attr.name, i=i, item=item,
                ))
            if minimum is not None and item < minimum:
                raise error("'{name}[{i}]' must be >= {m} (got {item!r}).".format(
                    name=attr.name, i=i, m=minimum, item=item,
                ))
            if maximum is not None and item > maximum:
                raise error("'{name}[{i}]' must be <= {m} (got {item!r}).".format(
                    name=attr.name, i=i, m=maximum, item=item,
                ))

    return validator


def attr_is_instance_or_instance_tuple(
    check_type,  # type: Union[Type, TupleType[Type, ...]]
):
    # type: (...) -> AttrsValidator
    """
    Creates an Attrs validator that ensures the argument is a instance of or tuple of instances of the given type.
    """

    if not isinstance(check_type, type):
        if not isinstance(check_type, tuple):
            raise TypeError("'check_type' must be a type or tuple of types")
        for i, t in enumerate(check_type):
            if not isinstance(t, type):
                raise TypeError("'check_type[{i}] must be a type or tuple of types".format(i=i))

    def validator(_instance, attribute, value):
        if isinstance(value, check_type):
            return

        if not isinstance(value, tuple):
            raise TypeError(
                "'{name}' must be a {t!r} or a tuple of {t!r} (got {value!r} that is a {actual!r}).".format(
                    name=attribute.name,
                    actual=type(value),
                    value=value,
                    t=check_type,
                ),
            )

        for i, item in enumerate(value):
            if not isinstance(item, check_type):
                raise TypeError(
                    "'{name}[{i}]' must be a {t!r} (got {value!r} that is a {actual!r}).".format(
                        i=i,
                        name=attribute.name,
                        actual=type(item),
                        value=item,
                        t=check_type,
                    ),
                )

    return validator
