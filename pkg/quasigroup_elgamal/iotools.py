"""
Saving and loading key and ciphertext files.

Files are UTF-8 JSON objects with one top-level key per line. Every file
carries a `type` entry naming a registered datatype and a `version` entry;
`load` uses the type entry to find the class and calls its
`from_repr_json` method. Classes are saved through their `repr_json`
property.

Extra top-level entries (e.g. the `codec` of a ciphertext file) are
written after the object's own fields and returned by `load_with_fields`.
"""

import os
import json
import logging
from inspect import isclass
from .rcparams import rcParams
logger = logging.getLogger('quasigroup_elgamal.iotools')

##################################
# Custom errors
class KeyFileError(ValueError):
    pass

_load_types = {}

def register_datatype(type, typename=None):
    assert(isclass(type))
    if typename is None:
        typename = type.__name__
    assert(isinstance(typename, str))
    _load_types[typename] = type

def find_registered_typename(type):
    """
    If `type` is a registered datatype, return its associated name.
    Otherwise, find the nearest parent of `type` which is registered and
    return its name. If no parents are registered, return `type.__name__`.
    """
    def get_name(type):
        for registered_name, registered_type in _load_types.items():
            if registered_type is type:
                return registered_name
        return None

    for base in type.__mro__:
        typename = get_name(base)
        if typename is not None:
            return typename
    return type.__name__

def _dumps(record):
    lines = ['  {}: {}'.format(json.dumps(key), json.dumps(value, separators=(',', ':')))
             for key, value in record.items()]
    return '{\n' + ',\n'.join(lines) + '\n}\n'

def save(file, data, **fields):
    """
    Write `data` as a typed JSON record, overwriting `file`.

    Parameters
    ----------
    file: str | path-like
    data: object with a `repr_json` property
    **fields:
        Additional top-level entries. Values with a `repr_json` property
        are expanded.

    Returns
    -------
    str: the output path
    """
    record = {'type': find_registered_typename(type(data)),
              'version': rcParams['keyfile.version']}
    record.update(data.repr_json)
    for key, value in fields.items():
        record[key] = getattr(value, 'repr_json', value)
    dirname = os.path.dirname(os.fspath(file))
    if dirname != "":
        os.makedirs(dirname, exist_ok=True)
    with open(file, 'w', encoding='utf-8') as f:
        f.write(_dumps(record))
    logger.info("Saved {} to '{}'.".format(record['type'], file))
    return os.fspath(file)

def load_with_fields(file, types=None):
    """
    Load a record written by `save`.

    Parameters
    ----------
    file: str | path-like
    types: str | tuple of str
        (Optional) Accepted type names. A file of another type raises
        `KeyFileError`.

    Returns
    -------
    obj:
        Instance of the registered class.
    record: dict
        The raw record, from which extra fields can be read.
    """
    with open(file, 'r', encoding='utf-8') as f:
        try:
            record = json.load(f)
        except json.JSONDecodeError as e:
            raise KeyFileError("'{}' is not a valid JSON file: {}".format(file, e))
    if not isinstance(record, dict) or 'type' not in record:
        raise KeyFileError("'{}' has no 'type' entry.".format(file))
    typename = record['type']
    if isinstance(types, str):
        types = (types,)
    if types is not None and typename not in types:
        raise KeyFileError("'{}' holds a {}, but a {} was expected."
                           .format(file, typename, ' or '.join(types)))
    if typename not in _load_types:
        raise KeyFileError("'{}' has unrecognized type '{}'.".format(file, typename))
    version = record.get('version')
    if version != rcParams['keyfile.version']:
        raise KeyFileError("'{}' has version {}; only version {} is supported."
                           .format(file, version, rcParams['keyfile.version']))
    try:
        obj = _load_types[typename].from_repr_json(record)
    except KeyError as e:
        raise KeyFileError("'{}' is missing the entry {}.".format(file, e))
    except (ValueError, TypeError) as e:
        raise KeyFileError("'{}' failed validation: {}".format(file, e))
    logger.info("Loaded {} from '{}'.".format(typename, file))
    return obj, record

def load(file, types=None):
    """Same as `load_with_fields`, returning only the object."""
    return load_with_fields(file, types)[0]
