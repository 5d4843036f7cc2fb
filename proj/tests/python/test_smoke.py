import json
import os
import subprocess

import pytest

import berkp


def test_capacity_and_c_E():
    assert berkp.capacity([berkp.point(0, -2)]) == "-2"
    assert berkp.c_E([berkp.point(0, -2), berkp.point(1, -2)]) == "2"


def test_equilibrium_weights():
    eq = berkp.equilibrium([berkp.point(0, -1), berkp.point(1, -2)], berkp.infinity())
    assert eq["log_cap"] == "-2/3"
    assert sorted(eq["measure"]["weights"]) == ["1/3", "2/3"]


def test_kernel_and_image():
    assert berkp.kernel(berkp.point(0, 0), berkp.point(1, -1))["exp"] == "0"
    img = berkp.image(["0", "0", "1"], ["1"], berkp.point(0, -1))
    assert img == berkp.point(0, -2)


def test_reduction():
    out = berkp.reduction(["0", "0", "1"], ["1"], berkp.point(0, 0))
    assert out["degree"] == 2


def test_domain_error():
    with pytest.raises(berkp.BerkpError) as err:
        berkp.julia_cylinders("2/25", 2)
    assert err.value.code == "NonResidueBranch"
    assert err.value.status == 2


def test_cli_matches_module():
    cli = os.environ.get("BERKP_CLI")
    if not cli:
        pytest.skip("BERKP_CLI not set")
    doc = {"E": [berkp.point(0, -2), berkp.point(1, -2)]}
    out = subprocess.run([cli, "cE"], input=json.dumps(doc), capture_output=True, text=True, check=True)
    assert json.loads(out.stdout) == berkp.run("cE", doc)
