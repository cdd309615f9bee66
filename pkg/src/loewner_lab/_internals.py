"""Internals.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


import sys
import enum
import json
import dataclasses
from typing import (
    Annotated,
    Any,
    ClassVar,
    Literal,
    final,
    get_args,
    get_origin,
)
from collections.abc import (
    Callable,
    Generator,
)
if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self
# not 3.11 because we need frozen_default
if sys.version_info >= (3, 12):
    from typing import dataclass_transform
else:
    from typing_extensions import dataclass_transform
from types import MappingProxyType

import numpy as np


@final
class _UnsetType:
    def __copy__(self) -> Self:
        return self

    def __deepcopy__(self, memo: Any) -> Self:
        return self

    def __bool__(self) -> Literal[False]:
        return False

    def __repr__(self) -> str:
        return "<unset>"


_Unset = _UnsetType()


def fmt_float(value: float) -> str:
    """Format a float with 17 significant digits (round-trip exact)."""
    return f"{float(value):.17g}"


@dataclass_transform(eq_default=False, frozen_default=True)
class _Record:
    """Record base class that is used to handle JSON serialization.

    Fields may be annotated as ``Annotated[type, "key"]`` or
    ``Annotated[type, "key", serializer]`` to rename them or to override
    the default serializer. Fields holding `_Unset` are skipped.

    """
    _context: ClassVar[
        MappingProxyType[str, tuple[str, Callable[[Any], Any]]]
    ]

    def __init_subclass__(cls) -> None:
        """Handle dataclass initialization and build the serialization
        context.

        """
        cls._context = MappingProxyType({
            k: cls._get_context(k, a)
            for k, a in cls.__annotations__.items()
            if get_origin(a) is not ClassVar and a is not ClassVar
        })
        dataclasses.dataclass(eq=False, frozen=True)(cls)

    @classmethod
    def _get_context(
        cls, name: str, annotation: Any
    ) -> tuple[str, Callable[[Any], Any]]:
        """Get the context information from the given type annotation"""
        key: str = name
        serializer: Callable[[Any], Any] = cls._default_serializer

        if get_origin(annotation) is not Annotated:
            return (key, serializer)

        args = get_args(annotation)

        if len(args) >= 2 and args[1] is not None:
            key = args[1]
        if len(args) == 3:
            serializer = args[2]

        return (key, serializer)

    @classmethod
    def _default_serializer(cls, value: Any) -> Any:
        """Default serializer that does the following:
        - Leaves JSON scalars alone
        - Converts numpy scalars and arrays to Python values and lists
        - Writes complex numbers as ``[re, im]`` pairs
        - Writes enum members as their values
        - Recurses into nested records, mappings and sequences

        """
        if value is None or isinstance(value, (bool, str, int, float)):
            return value

        if isinstance(value, enum.Enum):
            return value.value

        if isinstance(value, _Record):
            return value.serialize()

        if isinstance(value, np.ndarray):
            return [cls._default_serializer(v) for v in value.tolist()]

        if isinstance(value, np.generic):
            return cls._default_serializer(value.item())

        if isinstance(value, complex):
            return [value.real, value.imag]

        if isinstance(value, dict):
            return {
                str(k): cls._default_serializer(v) for k, v in value.items()
            }

        if isinstance(value, (list, tuple)):
            return [cls._default_serializer(v) for v in value]

        raise TypeError(f"Unknown type: {value.__class__.__name__!r}")

    def _serialize(self) -> Generator[tuple[str, Any], None, None]:
        """Generate segments that will later be turned into a dictionary
        in `~.serialize`.

        """
        for k, v in self.__dict__.items():
            if v is _Unset or k not in self._context:
                continue

            key, serializer = self._context[k]

            yield (key, serializer(v))

    def serialize(self) -> dict[str, Any]:
        """Serialize this record into a JSON-compatible dictionary"""
        return dict(self._serialize())

    def to_json(self, indent: int | None = 2) -> str:
        """Serialize this record into a JSON document"""
        return json.dumps(self.serialize(), indent=indent)
