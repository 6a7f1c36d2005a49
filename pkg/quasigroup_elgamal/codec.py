"""
Fixed-width conversion between bytes and symbol strings over an alphabet
of order `n`.

Every byte becomes exactly `w` base-`n` digits, most significant first,
where `w` is the smallest integer with ``n**w >= 256``.
"""

import operator
import numpy as np

##################################
# Custom errors
class CodecError(ValueError):
    pass

class CodecConfig:
    """Alphabet order `order` ≥ 2 and the derived digit `width`."""
    def __init__(self, order):
        try:
            order = operator.index(order)
        except TypeError:
            raise CodecError("Alphabet order must be an integer; received {!r}."
                             .format(order))
        if order < 2:
            raise CodecError("Alphabet order must be at least 2; received {}."
                             .format(order))
        width = 1
        while order**width < 256:
            width += 1
        self.order = order
        self.width = width

    def __eq__(self, other):
        if not isinstance(other, CodecConfig):
            return NotImplemented
        return self.order == other.order

    def __repr__(self):
        return "CodecConfig(order={}, width={})".format(self.order, self.width)

    @property
    def weights(self):
        return self.order ** np.arange(self.width - 1, -1, -1, dtype=np.int64)

    @property
    def repr_json(self):
        return {'order': self.order, 'width': self.width}

    @classmethod
    def from_repr_json(cls, data):
        try:
            order, width = data['order'], operator.index(data['width'])
        except (KeyError, TypeError):
            raise CodecError("Malformed codec entry {!r}.".format(data))
        config = cls(order)
        if width != config.width:
            raise CodecError("Codec width {} is inconsistent with order {} "
                             "(expected {}).".format(data['width'], config.order,
                                                     config.width))
        return config

def encode(data, n):
    """
    Parameters
    ----------
    data: bytes
    n: int
        Alphabet order.

    Returns
    -------
    ndarray of int64, length ``width * len(data)``.
    """
    config = CodecConfig(n)
    b = np.frombuffer(bytes(data), dtype=np.uint8).astype(np.int64)
    digits = (b[:, None] // config.weights[None, :]) % n
    return digits.reshape(-1)

def decode(symbols, n):
    """Exact inverse of `encode`."""
    config = CodecConfig(n)
    arr = np.asarray(symbols).reshape(-1)
    if len(arr) and arr.dtype.kind not in 'iu':
        raise CodecError("Symbols must be integers; received dtype '{}'."
                         .format(arr.dtype))
    arr = arr.astype(np.int64)
    if len(arr) % config.width != 0:
        raise CodecError("Symbol stream of length {} is not a multiple of the "
                         "codec width {}.".format(len(arr), config.width))
    if len(arr) and (arr.min() < 0 or arr.max() >= n):
        raise CodecError("Symbol stream contains values outside 0..{}.".format(n-1))
    values = arr.reshape(-1, config.width) @ config.weights
    if len(values) and values.max() > 255:
        i = int(np.flatnonzero(values > 255)[0])
        raise CodecError("Symbol group {} decodes to {}, which exceeds the byte "
                         "range; the stream is corrupt.".format(i, values[i]))
    return values.astype(np.uint8).tobytes()
