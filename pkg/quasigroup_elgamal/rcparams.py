# This module creates a dictionary holding global configuration parameters,
# in the style of matplotlib's `RcParams`.
# At the moment we just use a plain dictionary; values are read when a
# function is called, so changing an entry after import takes effect.

# `rcParams` is imported into the package namespace by __init__.py.

rcParams = {
    'keyfile.version': 1,
        # Written to every key and ciphertext file; files with another
        # version are rejected on load.
    'cli.min_order': 2,
    'cli.max_order': 256,
        # Bounds for `keygen --order`. 256 keeps every symbol within one byte.
    'cli.progress_threshold': 65536,
        # Streams longer than this (in symbols) get a progress bar.
    'cli.loglevel': 'WARNING',
    'scheme.exponent_max': 2**31 - 1,
        # Sampled private and ephemeral exponents are uniform in
        # [1, exponent_max]. Powers are reduced modulo the permutation order,
        # so the magnitude has no effect on cost.
    'scheme.max_resample': 256,
        # Number of redraws allowed for a degenerate ephemeral triple.
}
