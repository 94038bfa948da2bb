#  Created by the pconnect developers
#  Distributed under the terms of the MIT License.

# import modules
import re
import json
from .constants import *
from .errors import SchemaError

# compile basic patterns
INT_PATTERN = re.compile('^-?[0-9]+$')


def encode_int(value):
    """
    Encodes integer for JSON output.

    Integers whose magnitude reaches 2^63 are written as decimal strings so
    that the document survives readers with 64-bit integers.

    Args:
        value: int
            Integer value.

    Returns:
        int or str
            JSON value.
    """

    value = int(value)
    if abs(value) >= JSON_INT_LIMIT:
        return str(value)

    return value


def decode_int(data, location=None):
    """
    Decodes integer from JSON number or decimal string.

    Args:
        data: int or str
            JSON value.

        location: str or None
            Location used in error message.

    Returns:
        int
            Integer value.
    """

    if isinstance(data, bool):
        message = "Integer expected! -> %s" % (data,)
        raise SchemaError(message, location=location)

    if isinstance(data, int):
        return data

    if isinstance(data, str) and INT_PATTERN.match(data.strip()):
        return int(data.strip())

    message = "Integer expected! -> %s" % (data,)
    raise SchemaError(message, location=location)


def load_document(path):
    """
    Loads JSON document and checks its schema version.

    Args:
        path: str
            File path.

    Returns:
        dict
            Parsed document.
    """

    # read file
    with open(path) as f:
        text = f.read()

    # parse JSON
    try:
        data = json.loads(text)
    except ValueError as e:
        location = "line %d column %d" % (e.lineno, e.colno) if hasattr(e, 'lineno') else None
        message = "Malformed JSON! -> '%s' (%s)" % (path, e)
        raise SchemaError(message, location=location)

    # check document
    if not isinstance(data, dict):
        message = "Document must be a JSON object! -> '%s'" % path
        raise SchemaError(message, location='$')

    version = data.get('schema_version', None)
    if version != SCHEMA_VERSION:
        message = "Unsupported schema version! -> %s" % (version,)
        raise SchemaError(message, location='schema_version')

    return data


def dump_document(data):
    """
    Serializes document deterministically.

    Args:
        data: dict
            Document data.

    Returns:
        str
            JSON text.
    """

    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def require(data, key, location):
    """
    Gets required value from JSON object.

    Args:
        data: dict
            JSON object.

        key: str
            Item name.

        location: str
            Location of the object used in error message.

    Returns:
        ?
            Item value.
    """

    if not isinstance(data, dict):
        message = "JSON object expected! -> %s" % (data,)
        raise SchemaError(message, location=location)

    if key not in data:
        message = "Missing item! -> '%s'" % key
        raise SchemaError(message, location="%s.%s" % (location, key))

    return data[key]
