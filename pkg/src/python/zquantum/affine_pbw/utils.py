"""General-purpose utilities."""
import json
from os import PathLike
from typing import Any, Dict

from .typing import DumpTarget, LoadSource

SCHEMA_VERSION = "zapata-v1"
RNDSEED = 12345


def _is_path(target) -> bool:
    return isinstance(target, (str, bytes, PathLike))


def save_generic_dict(dictionary: Dict, target: DumpTarget, artifact_name: str = "dict"):
    """Save dictionary as json, tagged with a schema.

    Args:
        dictionary (dict): the dict containing the data
        target (str or file-like object): the name of the file, or a file-like object
        artifact_name (str): suffix of the schema name
    """
    dictionary_stored: Dict[str, Any] = {"schema": SCHEMA_VERSION + "-" + artifact_name}
    dictionary_stored.update(dictionary)
    if _is_path(target):
        with open(target, "w") as f:
            f.write(json.dumps(dictionary_stored, indent=2))
    else:
        target.write(json.dumps(dictionary_stored, indent=2))  # type: ignore


def load_generic_dict(source: LoadSource) -> Dict:
    """Load a json dictionary saved by save_generic_dict.

    Args:
        source (str or file-like object): the name of the file, or a file-like object.

    Returns:
        dict: the stored dictionary, schema included
    """
    if _is_path(source):
        with open(source, "r") as f:
            return json.load(f)
    return json.load(source)  # type: ignore


def check_schema(dictionary: Dict, artifact_name: str) -> None:
    expected = SCHEMA_VERSION + "-" + artifact_name
    schema = dictionary.get("schema")
    if schema is not None and schema != expected:
        raise ValueError(f"Invalid {artifact_name} schema: {schema}")
