"""Fast subgroup enumeration against the exhaustive subset oracle.

Covers every pinned-catalog group small enough for the oracle: the
class-at-a-time search and the power-set sweep must produce identical
sets of subgroups.
"""

import pytest

import oracles
from latcover.groups import parse_spec
from latcover.verify import CATALOG, analyze_spec

SMALL = (
    "C1",
    "C2",
    "C3",
    "C4",
    "C6",
    "C8",
    "C9",
    "C12",
    "C2xC2",
    "D6",
    "D8",
    "D10",
    "D12",
    "D16",
    "D20",
    "D24",
    "Q8",
    "Q16",
    "Dic3",
    "SD16",
    "M2^4",
    "S3",
    "S4",
    "A4",
    "ZM(7,3,2)",
    "ZM(5,4,2)",
    "Q8xC3",
)


def test_small_is_exactly_the_catalog_up_to_24():
    want = [s for s in CATALOG if parse_spec(s).expected_order() <= 24]
    assert sorted(SMALL) == sorted(want)


@pytest.mark.parametrize("spec", SMALL)
def test_enumeration_matches_oracle(spec):
    a = analyze_spec(spec)
    fast = {s.elems for s in a.lattice.subs}
    slow = set(oracles.subgroups_by_spec(spec))
    assert fast == slow
