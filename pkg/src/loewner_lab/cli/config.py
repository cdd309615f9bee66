"""Plain ``key = value`` experiment files.

:copyright: (c) 2024 Tanner Corcoran
:license: Apache 2.0, see LICENSE for more details.

"""

__author__ = "Tanner Corcoran"
__license__ = "Apache 2.0 License"
__copyright__ = "Copyright (c) 2024 Tanner Corcoran"


from pathlib import Path
from typing import Union

_TRUE = frozenset({"true", "yes", "on"})
_FALSE = frozenset({"false", "no", "off"})


def read_config(path: Union[str, Path]) -> dict[str, str]:
    """Read a config file.

    Blank lines are skipped and ``#`` starts a comment. Keys may use
    dashes or underscores; a later key overrides an earlier one.

    Raises:
        ValueError: A line is not of the form ``key = value``.

    """
    values: dict[str, str] = {}
    text = Path(path).read_text(encoding="utf-8")
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("_", "-")
        if not sep or not key:
            raise ValueError(f"{path}:{number}: expected 'key = value'")
        values[key] = value.strip()
    return values


def config_tokens(values: dict[str, str]) -> list[str]:
    """Turn config entries into command-line tokens.

    ``true``/``false`` toggle bare flags, and whitespace separates the
    items of list options.

    """
    tokens: list[str] = []
    for key, value in values.items():
        flag = f"--{key}"
        if value.lower() in _TRUE:
            tokens.append(flag)
        elif value.lower() in _FALSE:
            continue
        elif len(value.split()) == 1:
            tokens.append(f"{flag}={value}")
        else:
            tokens.extend([flag, *value.split()])
    return tokens
