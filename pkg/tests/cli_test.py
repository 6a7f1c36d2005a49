import json
import numpy as np
import pytest
from click.testing import CliRunner

from quasigroup_elgamal import iotools
from quasigroup_elgamal.cli import cli
from quasigroup_elgamal import worked_examples as wx

@pytest.fixture
def runner():
    return CliRunner()

@pytest.fixture
def walkthrough_keys(tmp_path):
    pub, priv = wx.example_keys()
    iotools.save(tmp_path/"pub.json", pub)
    iotools.save(tmp_path/"priv.json", priv)
    return str(tmp_path/"pub.json"), str(tmp_path/"priv.json")

def keygen(runner, tmp_path, order, seed, prefix=""):
    pub, priv = str(tmp_path/(prefix + "pub.json")), str(tmp_path/(prefix + "priv.json"))
    result = runner.invoke(cli, ['keygen', '--order', str(order), '--seed', str(seed),
                                 '--out-pub', pub, '--out-priv', priv])
    assert result.exit_code == 0, result.output
    return pub, priv

def keygen_deterministic_test(runner, tmp_path):
    a = keygen(runner, tmp_path, 7, 1, prefix="a_")
    b = keygen(runner, tmp_path, 7, 1, prefix="b_")
    for x, y in zip(a, b):
        with open(x, 'rb') as fx, open(y, 'rb') as fy:
            assert fx.read() == fy.read()
    assert iotools.load(a[0]).order == 7

@pytest.mark.parametrize('order', [0, 1, 257])
def keygen_bad_order_test(runner, tmp_path, order):
    result = runner.invoke(cli, ['keygen', '--order', str(order),
                                 '--out-pub', str(tmp_path/"pub.json"),
                                 '--out-priv', str(tmp_path/"priv.json")])
    assert result.exit_code == 2
    assert not (tmp_path/"pub.json").exists()

def encrypt_walkthrough_test(runner, tmp_path, walkthrough_keys):
    pub, priv = walkthrough_keys
    (tmp_path/"msg.txt").write_text("6 3 0 5 1 2 4 0 3\n")
    result = runner.invoke(cli, ['encrypt', '--pub', pub, '--in', str(tmp_path/"msg.txt"),
                                 '--out', str(tmp_path/"msg.ct"), '--eph', '5,3,6',
                                 '--raw-symbols'])
    assert result.exit_code == 0, result.output
    with open(tmp_path/"msg.ct") as f:
        record = json.load(f)
    assert record['body'] == [6, 2, 0, 0, 6, 5, 3, 1, 1]
    assert record['ephemeral'][0] == [5, 6, 4, 2, 3, 1, 0]
    assert record['codec'] == "raw"

    result = runner.invoke(cli, ['decrypt', '--pub', pub, '--priv', priv,
                                 '--in', str(tmp_path/"msg.ct"),
                                 '--out', str(tmp_path/"out.txt")])
    assert result.exit_code == 0, result.output
    assert (tmp_path/"out.txt").read_text() == "6 3 0 5 1 2 4 0 3\n"

def empty_input_test(runner, tmp_path, walkthrough_keys):
    pub, priv = walkthrough_keys
    for raw in ([], ['--raw-symbols']):
        (tmp_path/"empty").write_bytes(b"")
        result = runner.invoke(cli, ['encrypt', '--pub', pub, '--in', str(tmp_path/"empty"),
                                     '--out', str(tmp_path/"empty.ct"), '--seed', '3']
                                    + raw)
        assert result.exit_code == 0, result.output
        assert iotools.load(tmp_path/"empty.ct").body.tolist() == []
        result = runner.invoke(cli, ['decrypt', '--pub', pub, '--priv', priv,
                                     '--in', str(tmp_path/"empty.ct"),
                                     '--out', str(tmp_path/"empty.out")])
        assert result.exit_code == 0, result.output
        assert (tmp_path/"empty.out").read_bytes() == b""

def byte_mode_test(runner, tmp_path, walkthrough_keys):
    pub, priv = walkthrough_keys
    (tmp_path/"msg").write_bytes(b"B")
    result = runner.invoke(cli, ['encrypt', '--pub', pub, '--in', str(tmp_path/"msg"),
                                 '--out', str(tmp_path/"msg.ct"), '--seed', '4'])
    assert result.exit_code == 0, result.output
    ct, record = iotools.load_with_fields(tmp_path/"msg.ct")
    assert len(ct.body) == 3
    assert record['codec'] == {'order': 7, 'width': 3}
    result = runner.invoke(cli, ['decrypt', '--pub', pub, '--priv', priv,
                                 '--in', str(tmp_path/"msg.ct"),
                                 '--out', str(tmp_path/"msg.out")])
    assert result.exit_code == 0, result.output
    assert (tmp_path/"msg.out").read_bytes() == b"B"

@pytest.mark.parametrize('order', [2, 7, 16, 256])
def file_roundtrip_test(runner, tmp_path, order):
    pub, priv = keygen(runner, tmp_path, order, seed=order)
    rng = np.random.default_rng(order)
    for i, size in enumerate([1, 1000, 65536]):
        data = rng.integers(0, 256, size=size, dtype=np.uint8).tobytes()
        src, ct, out = (str(tmp_path/"{}.{}".format(i, ext)) for ext in ("in", "ct", "out"))
        with open(src, 'wb') as f:
            f.write(data)
        result = runner.invoke(cli, ['encrypt', '--pub', pub, '--in', src, '--out', ct,
                                     '--seed', str(i), '--no-progress'])
        assert result.exit_code == 0, result.output
        result = runner.invoke(cli, ['decrypt', '--pub', pub, '--priv', priv,
                                     '--in', ct, '--out', out, '--no-progress'])
        assert result.exit_code == 0, result.output
        with open(out, 'rb') as f:
            assert f.read() == data

def encrypt_deterministic_test(runner, tmp_path, walkthrough_keys):
    pub, _ = walkthrough_keys
    (tmp_path/"msg").write_bytes(b"hello")
    outputs = []
    for name in ("a.ct", "b.ct"):
        result = runner.invoke(cli, ['encrypt', '--pub', pub, '--in', str(tmp_path/"msg"),
                                     '--out', str(tmp_path/name), '--seed', '9'])
        assert result.exit_code == 0, result.output
        outputs.append((tmp_path/name).read_bytes())
    assert outputs[0] == outputs[1]

def seed_and_eph_exclusive_test(runner, tmp_path, walkthrough_keys):
    pub, _ = walkthrough_keys
    (tmp_path/"msg").write_bytes(b"x")
    result = runner.invoke(cli, ['encrypt', '--pub', pub, '--in', str(tmp_path/"msg"),
                                 '--out', str(tmp_path/"msg.ct"), '--seed', '1',
                                 '--eph', '5,3,6'])
    assert result.exit_code == 2

@pytest.mark.parametrize('eph', ['5,3', '5,x,6', '0,3,6', '5,3,6,1', '5,+3,6'])
def malformed_eph_test(runner, tmp_path, walkthrough_keys, eph):
    pub, _ = walkthrough_keys
    (tmp_path/"msg").write_bytes(b"x")
    result = runner.invoke(cli, ['encrypt', '--pub', pub, '--in', str(tmp_path/"msg"),
                                 '--out', str(tmp_path/"msg.ct"), '--eph', eph])
    assert result.exit_code == 2
    assert "--eph" in result.output
    assert not (tmp_path/"msg.ct").exists()

def raw_symbol_out_of_range_test(runner, tmp_path, walkthrough_keys):
    pub, _ = walkthrough_keys
    (tmp_path/"msg.txt").write_text("1 2 7")
    result = runner.invoke(cli, ['encrypt', '--pub', pub, '--in', str(tmp_path/"msg.txt"),
                                 '--out', str(tmp_path/"msg.ct"), '--raw-symbols'])
    assert result.exit_code == 3
    assert "outside the alphabet" in result.output

def tampered_ciphertext_test(runner, tmp_path, walkthrough_keys):
    pub, priv = walkthrough_keys
    (tmp_path/"msg.txt").write_text("6 3 0 5 1 2 4 0 3")
    runner.invoke(cli, ['encrypt', '--pub', pub, '--in', str(tmp_path/"msg.txt"),
                        '--out', str(tmp_path/"msg.ct"), '--eph', '5,3,6', '--raw-symbols'])
    with open(tmp_path/"msg.ct") as f:
        record = json.load(f)
    record['body'][4] = 7
    with open(tmp_path/"msg.ct", 'w') as f:
        json.dump(record, f)
    result = runner.invoke(cli, ['decrypt', '--pub', pub, '--priv', priv,
                                 '--in', str(tmp_path/"msg.ct"),
                                 '--out', str(tmp_path/"out.txt")])
    assert result.exit_code == 3
    assert not (tmp_path/"out.txt").exists()

def corrupt_codec_group_test(runner, tmp_path, walkthrough_keys):
    pub, priv = walkthrough_keys
    # 5·49 + 1·7 + 4 = 256
    (tmp_path/"msg.txt").write_text("5 1 4")
    result = runner.invoke(cli, ['encrypt', '--pub', pub, '--in', str(tmp_path/"msg.txt"),
                                 '--out', str(tmp_path/"msg.ct"), '--seed', '2',
                                 '--raw-symbols'])
    assert result.exit_code == 0, result.output
    with open(tmp_path/"msg.ct") as f:
        record = json.load(f)
    record['codec'] = {'order': 7, 'width': 3}
    with open(tmp_path/"msg.ct", 'w') as f:
        json.dump(record, f)
    result = runner.invoke(cli, ['decrypt', '--pub', pub, '--priv', priv,
                                 '--in', str(tmp_path/"msg.ct"),
                                 '--out', str(tmp_path/"out")])
    assert result.exit_code == 3
    assert "CodecError" in result.output
    assert "exceeds the byte range" in result.output
    assert not (tmp_path/"out").exists()

def mismatched_key_order_test(runner, tmp_path, walkthrough_keys):
    pub7, priv7 = walkthrough_keys
    pub5, _ = keygen(runner, tmp_path, 5, 0, prefix="five_")
    (tmp_path/"msg").write_bytes(b"abc")
    runner.invoke(cli, ['encrypt', '--pub', pub5, '--in', str(tmp_path/"msg"),
                        '--out', str(tmp_path/"msg.ct"), '--seed', '1'])
    result = runner.invoke(cli, ['decrypt', '--pub', pub7, '--priv', priv7,
                                 '--in', str(tmp_path/"msg.ct"),
                                 '--out', str(tmp_path/"out")])
    assert result.exit_code == 3
    assert "DegreeMismatch" in result.output

def missing_file_test(runner, tmp_path):
    result = runner.invoke(cli, ['attack', '--pub', str(tmp_path/"nope.json")])
    assert result.exit_code == 2

@pytest.mark.parametrize('example_id', ['1', '2', '3'])
def demo_test(runner, example_id):
    result = runner.invoke(cli, ['demo', '--paper-example', example_id])
    assert result.exit_code == 0, result.output
    assert "All values match." in result.output

def demo_output_test(runner):
    result = runner.invoke(cli, ['demo', '--paper-example', '1'])
    assert "d = g^c mod p = 21" in result.output
    assert "(r, e) = (17, 12)" in result.output
    result = runner.invoke(cli, ['demo', '--paper-example', '3'])
    assert "b' = 620065311" in result.output
    assert "b = 630512403" in result.output

def demo_mismatch_test(runner, monkeypatch):
    monkeypatch.setitem(wx.EXAMPLE_2, 'd', 95)
    result = runner.invoke(cli, ['demo', '--paper-example', '2'])
    assert result.exit_code == 3
    assert "MISMATCH" in result.output

def demo_bad_id_test(runner):
    assert runner.invoke(cli, ['demo', '--paper-example', '4']).exit_code == 2

def attack_walkthrough_key_test(runner, walkthrough_keys):
    pub, _ = walkthrough_keys
    result = runner.invoke(cli, ['attack', '--pub', pub])
    assert result.exit_code == 0, result.output
    assert "m ≡ 3 (mod 12)" in result.output
    assert "n ≡ 2 (mod 4)" in result.output
    assert "k ≡ 5 (mod 7)" in result.output
    assert "regenerate" in result.output

def attack_random_key_test(runner, tmp_path):
    pub, _ = keygen(runner, tmp_path, 8, 12)
    result = runner.invoke(cli, ['attack', '--pub', pub])
    assert result.exit_code == 0, result.output

def attack_inconsistent_key_test(runner, walkthrough_keys):
    pub, _ = walkthrough_keys
    with open(pub) as f:
        record = json.load(f)
    record['isotopy_pow'][0] = [1, 0, 2, 3, 4, 5, 6]
    with open(pub, 'w') as f:
        json.dump(record, f)
    result = runner.invoke(cli, ['attack', '--pub', pub])
    assert result.exit_code == 3
    assert "InconsistentKey" in result.output

def attack_rejects_private_key_test(runner, walkthrough_keys):
    _, priv = walkthrough_keys
    result = runner.invoke(cli, ['attack', '--pub', priv])
    assert result.exit_code == 3
    assert "KeyFileError" in result.output

def verbose_logging_test(runner, walkthrough_keys):
    pub, _ = walkthrough_keys
    result = runner.invoke(cli, ['-vv', 'attack', '--pub', pub])
    assert result.exit_code == 0, result.output
