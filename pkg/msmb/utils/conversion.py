# Copyright msmb 2024-Present
# Full MIT License can be found in `LICENSE` at the project root.

from __future__ import annotations

from dataclasses import fields, is_dataclass
from enum import Enum
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Any, Dict, List, Set, Tuple, Union


def remove_none(
    obj: Union[List, Dict, Set, Tuple]
) -> Union[List, Dict, Set, Tuple]:
    """
    Removes all ``None`` values from a list, dict or set.

    Parameters
    ----------
    obj : Union[List, Dict, Set, Tuple]
        The list, dict, set or tuple to remove ``None`` values from.

    Returns
    -------
    Union[List, Dict, Set, Tuple]
        The list, dict, set or tuple, without ``None`` values.
    """
    if isinstance(obj, list):
        return [i for i in obj if i is not None]
    elif isinstance(obj, tuple):
        return tuple(i for i in obj if i is not None)
    elif isinstance(obj, set):
        return obj - {None}
    elif isinstance(obj, dict):
        return {k: v for k, v in obj.items() if None not in (k, v)}
    return obj


def to_plain(obj: Any) -> Any:
    """
    Converts a result object into JSON-ready data.

    Dataclasses become dicts without their ``None`` and private
    fields, enums become their value, tuples and sets become lists and
    objects with a ``to_dict`` method are asked for it.

    Parameters
    ----------
    obj: Any
        The object to convert.

    Returns
    -------
    Any
        Nested dicts, lists, strings, integers and booleans.
    """
    if hasattr(obj, "to_dict") and not isinstance(obj, type):
        return obj.to_dict()

    if is_dataclass(obj) and not isinstance(obj, type):
        return fields_to_plain(obj)

    if isinstance(obj, Enum):
        return obj.value

    if isinstance(obj, dict):
        return {str(k): to_plain(v) for k, v in obj.items()}

    if isinstance(obj, (set, frozenset)):
        return [to_plain(v) for v in sorted(obj)]

    if isinstance(obj, (list, tuple)):
        return [to_plain(v) for v in obj]

    return obj


def fields_to_plain(obj: Any) -> Dict[str, Any]:
    """The dataclass branch of :func:`to_plain`, usable from ``to_dict``
    methods that only want to add or rename a few keys.
    """
    return remove_none({
        f.name: to_plain(getattr(obj, f.name))
        for f in fields(obj)
        if not f.name.startswith("_")
    })
