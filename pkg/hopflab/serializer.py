import abc
import enum
from typing import Any, Dict

import ujson as json

from hopflab.cardinals import ExtCard

SCHEMA_VERSION = 1


class Serializer(abc.ABC):
    """Serializer Abstract Class."""

    @staticmethod
    def serialize(data: Any) -> str:
        """serialize.

        Args:
            data (dict): Serialize a dict
        """
        raise NotImplementedError()

    @staticmethod
    def deserialize(data: str) -> Any:
        """deserialize.

        Args:
            data (str): -
        """
        raise NotImplementedError()


class JSONSerializer(Serializer):
    """Thin wrapper to implement json serializer.

    Static class. Keys are sorted and every document carries
    "schema": SCHEMA_VERSION, so equal data gives byte-identical output.
    """

    @staticmethod
    def serialize(data: Dict[str, Any], indent: int = 2) -> str:
        """serialize.

        Args:
            data (dict): Serialize to json string
            indent (int): 0 for a single line
        """
        doc = {'schema': SCHEMA_VERSION}
        doc.update(data)
        return str(json.dumps(JSONSerializer.make_primitives(doc),
                              sort_keys=True, indent=indent,
                              ensure_ascii=False))

    @staticmethod
    def deserialize(data: str) -> Dict[str, Any]:
        """deserialize.

        Args:
            data (str): json str to dict
        """
        return json.loads(data)

    @staticmethod
    def make_primitive_value(val: Any):
        if isinstance(val, dict):
            return JSONSerializer.make_primitives(val)
        elif isinstance(val, (list, tuple)):
            return list([JSONSerializer.make_primitive_value(v) for v in val])
        elif isinstance(val, ExtCard):
            return val.dump()
        elif isinstance(val, enum.Enum):
            return JSONSerializer.make_primitive_value(val.value)
        elif isinstance(val, bool) or val is None:
            return val
        elif isinstance(val, (int, float, str)):
            return val
        else:
            return str(val)

    @staticmethod
    def make_primitives(data: Dict[str, Any]):
        return {str(JSONSerializer.make_primitive_value(key)):
                JSONSerializer.make_primitive_value(val)
                for key, val in data.items()}
