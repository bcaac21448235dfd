# Copyright 2026 The misgraph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import subprocess

import pytest

CLI = os.environ.get("MISGRAPH_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="MISGRAPH_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, check=False)


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_realize_and_verify_round_trip(tmp_path):
    out = tmp_path / "g.json"
    r = run("realize", "--n", "1000", "--out", str(out), "--verify", "--report")
    assert r.returncode == 0, r.stderr
    assert "verified: 1000" in r.stderr
    assert "ratio:" in r.stderr
    v = run("verify", str(out))
    assert v.returncode == 0
    assert v.stdout.strip() == "mis: 1000"


def test_verify_examples(tmp_path):
    p4 = write(tmp_path, "p4.dimacs", "p bip 2 2 3\ne 1 1\ne 2 1\ne 2 2\n")
    assert run("verify", p4).stdout.strip() == "mis: 3"
    empty = write(tmp_path, "empty.json", '{"left":0,"right":0,"edges":[]}')
    assert run("verify", empty).stdout.strip() == "mis: 1"


def test_exit_codes(tmp_path):
    bad = write(tmp_path, "bad.txt", "garbage")
    assert run("verify", bad).returncode == 2
    assert run("realize", "--pattern", "01^2").returncode == 2
    assert run("realize", "--n", "0").returncode == 2
    big = run("realize", "--pattern", "1^200", "--verify")
    assert big.returncode == 4
    assert run("realize", "--pattern", "1^200", "--verify", "--force-ledger-only").returncode == 0


def test_verify_count_is(tmp_path):
    p4 = write(tmp_path, "p4.json", '{"left":2,"right":2,"edges":[[0,0],[1,0],[1,1]]}')
    r = run("verify", p4, "--count-is")
    assert r.stdout.splitlines() == ["mis: 3", "is: 8"]


def test_batch_sweep():
    r = run("batch", "--from", "1", "--to", "2000")
    assert r.returncode == 0, r.stderr
    assert "failures: 0" in r.stdout


def test_mersenne():
    r = run("mersenne", "--t", "2")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["vertices"] == 5
    assert doc["is"] == "15"
    assert "is: 15" in r.stderr


def test_search_gadgets():
    r = run("search-gadgets", "--max-vertices", "4")
    assert r.returncode == 0
    pairs = {(d["h_prime"], d["h_dprime"]) for d in map(json.loads, r.stdout.splitlines())}
    assert (2, 0) in pairs and (3, 0) in pairs
    assert run("search-gadgets", "--max-vertices", "15").returncode == 2
