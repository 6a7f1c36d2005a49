# -*- coding: utf-8 -*-
"""
Collection of useful short snippets shared by the command line tools.
"""

import re
import hashlib
from collections.abc import Iterable

def strip_comments(s, comment_mark='#'):
    """
    Remove single line comments from plain text.
    Searches for `comment_mark` and removes everything follows,
    up to but excluding the next newline.
    """
    return '\n'.join(line.partition(comment_mark)[0].rstrip()
                     for line in s.splitlines())

_separator_re = re.compile(r'[\s,]+')
_int_re = re.compile(r'[0-9]+')

def parse_int_list(s):
    """
    Parse integers separated by whitespace and/or commas, ignoring
    `#` comments. Used for raw symbol files and the `--eph r,s,t` option.

    Raises
    ------
    ValueError
        If a token is not a decimal integer.
    """
    tokens = [tok for tok in _separator_re.split(strip_comments(s)) if tok]
    for tok in tokens:
        if not _int_re.fullmatch(tok):
            raise ValueError("'{}' is not an integer.".format(tok))
    return [int(tok) for tok in tokens]

def stablehash(o):
    """
    Builtin `hash` is not stable across sessions for security reasons.
    This function can be used when consistency of a hash is required, e.g.
    to print a key fingerprint.
    """
    return hashlib.sha1(_tobytes(o)).hexdigest()

def _tobytes(o):
    if isinstance(o, bytes):
        return o
    elif isinstance(o, str):
        return o.encode('utf8')
    elif isinstance(o, int):
        return str(o).encode('utf8') + b','
    elif isinstance(o, dict):
        return b''.join(_tobytes(k) + _tobytes(v) for k, v in o.items())
    elif isinstance(o, Iterable):
        return b'[' + b''.join(_tobytes(oi) for oi in o) + b']'
    else:
        return bytes(o)
