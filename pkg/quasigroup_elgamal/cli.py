"""
Command line interface.

Usage::

    qgelgamal keygen --order 7 --seed 1 --out-pub pub.json --out-priv priv.json
    qgelgamal encrypt --pub pub.json --in msg.txt --out msg.ct
    qgelgamal decrypt --pub pub.json --priv priv.json --in msg.ct --out msg.txt
    qgelgamal demo --paper-example 3
    qgelgamal attack --pub pub.json

Exit codes: 0 on success, 2 on usage errors, 3 when a key, ciphertext or
worked example fails validation, 1 on file system errors.
"""

import logging
import contextlib
import numpy as np
import pandas as pd
import click

from .rcparams import rcParams
from . import iotools, codec, scheme, utils
from .tqdm import install_handler
from .worked_examples import run_example
logger = logging.getLogger('quasigroup_elgamal.cli')

##################################
# Custom errors
class ValidationFailed(click.ClickException):
    """Invalid key material, ciphertext or worked example (exit code 3)."""
    exit_code = 3

@contextlib.contextmanager
def _reported_errors():
    """Translate library errors into click exceptions with the right exit code."""
    try:
        yield
    except click.ClickException:
        raise
    except OSError as e:
        raise click.FileError(e.filename or "", hint=e.strerror or str(e))
    except ValueError as e:
        raise ValidationFailed("{}: {}".format(type(e).__name__, e))

def _parse_eph(ctx, param, value):
    if value is None:
        return None
    try:
        return scheme.EphemeralExponents(*utils.parse_int_list(value))
    except ValueError as e:
        raise click.BadParameter(str(e), ctx=ctx, param=param)

def _check_order(order):
    lo, hi = rcParams['cli.min_order'], rcParams['cli.max_order']
    if not lo <= order <= hi:
        raise click.BadParameter("Order must be between {} and {}; received {}."
                                 .format(lo, hi, order), param_hint="'--order'")
    return order

def _show_progress(progress, length):
    if progress is None:
        return length > rcParams['cli.progress_threshold']
    return progress

def _fingerprint(path):
    with open(path, 'rb') as f:
        return utils.stablehash(f.read())[:16]

@click.group()
@click.option('-v', '--verbose', count=True,
              help="Repeat to increase log verbosity.")
def cli(verbose):
    level = logging.getLevelName(rcParams['cli.loglevel'])
    install_handler('quasigroup_elgamal', max(logging.DEBUG, level - 10*verbose))

@click.command()
@click.option('--order', required=True, type=int,
              help="Quasigroup order n.")
@click.option('--seed', type=int, default=None,
              help="Seed for a reproducible key.")
@click.option('--out-pub', required=True, type=click.Path(dir_okay=False))
@click.option('--out-priv', required=True, type=click.Path(dir_okay=False))
def keygen(order, seed, out_pub, out_priv):
    """Generate a random key pair of order ORDER."""
    _check_order(order)
    rng = np.random.default_rng(seed)
    with _reported_errors():
        pub, priv = scheme.random_keygen(order, rng)
        iotools.save(out_pub, pub)
        iotools.save(out_priv, priv)
        click.echo("Public key:  {} ({})".format(out_pub, _fingerprint(out_pub)))
        click.echo("Private key: {}".format(out_priv))

@click.command()
@click.option('--pub', 'pub_path', required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option('--in', 'in_path', required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option('--out', 'out_path', required=True, type=click.Path(dir_okay=False))
@click.option('--seed', type=int, default=None,
              help="Seed for the ephemeral exponents.")
@click.option('--eph', default=None, callback=_parse_eph,
              help="Explicit ephemeral exponents 'r,s,t'.")
@click.option('--raw-symbols', is_flag=True, default=False,
              help="Input is a list of symbols in 0..n-1 instead of bytes.")
@click.option('--progress/--no-progress', default=None,
              help="Progress bar (default: only for long messages).")
def encrypt(pub_path, in_path, out_path, seed, eph, raw_symbols, progress):
    """Encrypt a file for the owner of a public key."""
    if seed is not None and eph is not None:
        raise click.UsageError("--seed and --eph are mutually exclusive.")
    with _reported_errors():
        pub = iotools.load(pub_path, 'PublicKey')
        with open(in_path, 'rb') as f:
            data = f.read()
        if raw_symbols:
            symbols = utils.parse_int_list(data.decode('utf-8'))
            config = "raw"
        else:
            config = codec.CodecConfig(pub.order)
            symbols = codec.encode(data, pub.order)
        if eph is None:
            eph = np.random.default_rng(seed)
        ct = scheme.encrypt(pub, symbols, eph,
                            progress=_show_progress(progress, len(symbols)))
        iotools.save(out_path, ct, codec=config)
    logger.info("Encrypted {} symbols.".format(len(symbols)))

@click.command()
@click.option('--pub', 'pub_path', required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option('--priv', 'priv_path', required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option('--in', 'in_path', required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option('--out', 'out_path', required=True, type=click.Path(dir_okay=False))
@click.option('--progress/--no-progress', default=None)
def decrypt(pub_path, priv_path, in_path, out_path, progress):
    """Decrypt a ciphertext file written by `encrypt`."""
    with _reported_errors():
        pub = iotools.load(pub_path, 'PublicKey')
        priv = iotools.load(priv_path, 'PrivateKey')
        ct, record = iotools.load_with_fields(in_path, 'Ciphertext')
        if 'codec' not in record:
            raise iotools.KeyFileError("'{}' has no 'codec' entry.".format(in_path))
        symbols = scheme.decrypt(pub, priv, ct,
                                 progress=_show_progress(progress, len(ct.body)))
        if record['codec'] == "raw":
            text = " ".join(str(u) for u in symbols.tolist())
            data = (text + "\n").encode('utf-8') if text else b""
        else:
            config = codec.CodecConfig.from_repr_json(record['codec'])
            if config.order != pub.order:
                raise codec.CodecError("Ciphertext was encoded for order {}, but the "
                                       "key has order {}.".format(config.order, pub.order))
            data = codec.decode(symbols, config.order)
        with open(out_path, 'wb') as f:
            f.write(data)
    logger.info("Decrypted {} symbols.".format(len(symbols)))

@click.command()
@click.option('--paper-example', 'example_id', required=True,
              type=click.Choice(['1', '2', '3']),
              help="1, 2: classic ElGamal; 3: the order-7 quasigroup walkthrough.")
def demo(example_id):
    """Recompute a worked example and compare every intermediate value."""
    run = run_example(int(example_id), echo=click.echo)
    if not run.ok:
        raise ValidationFailed("Worked example {} does not reproduce: {}"
                               .format(example_id, run.mismatch[0]))
    click.echo("All values match.")

@click.command()
@click.option('--pub', 'pub_path', required=True,
              type=click.Path(exists=True, dir_okay=False))
def attack(pub_path):
    """Recover the private exponents of a public key by discrete logarithms."""
    with _reported_errors():
        pub = iotools.load(pub_path, 'PublicKey')
        residues = scheme.recover_exponents(pub)
    summary = pd.DataFrame(
        {'component': ['alpha', 'beta', 'gamma'],
         'base': [str(p) for p in pub.base_isotopy],
         'exponent': ['m', 'n', 'k'],
         'residue': [r.value for r in residues],
         'modulus': [r.modulus for r in residues]}
        ).set_index('component')
    click.echo(summary.to_string())
    for name, r in zip(('m', 'n', 'k'), residues):
        click.echo("{} ≡ {} (mod {})".format(name, r.value, r.modulus))
    if not scheme.regenerates(pub, residues):
        raise ValidationFailed("Recovered residues do not regenerate the powered isotopy.")
    click.echo("Recovered exponents regenerate the public powered isotopy.")

cli.add_command(keygen)
cli.add_command(encrypt)
cli.add_command(decrypt)
cli.add_command(demo)
cli.add_command(attack)

if __name__ == "__main__":
    cli()
