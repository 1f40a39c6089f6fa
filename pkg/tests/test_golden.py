"""Golden-file regression: shipped Gelfand reports reproduce exactly.

The reports are fully deterministic (fixed table ordering, fixed mixing
seed, canonically chosen ell), so everything except the run metadata is
compared verbatim.
"""

import json
from pathlib import Path

import pytest

from klyachko.gelfand import verify_gelfand

GOLDEN_DIR = Path(__file__).parent / "golden"
GOLDEN_CASES = [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2)]


def strip_meta(js):
    out = dict(js)
    out.pop("meta", None)
    return out


@pytest.mark.parametrize("n,q", GOLDEN_CASES)
def test_gelfand_report_matches_golden(n, q, table_store):
    path = GOLDEN_DIR / f"gelfand_n{n}_q{q}.json"
    golden = json.loads(path.read_text())
    live = verify_gelfand(n, q, table=table_store(n, q)).to_json_dict()
    assert strip_meta(live) == strip_meta(golden)
