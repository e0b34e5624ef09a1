import json

import pytest

from golden_reports import GOLDEN_TAGS, path_for, render


@pytest.mark.parametrize("tag", GOLDEN_TAGS)
def test_golden_regenerates_byte_identical(tag):
    assert render(tag).encode() == path_for(tag).read_bytes()


@pytest.mark.parametrize("tag", GOLDEN_TAGS)
def test_golden_bases_are_sound(tag):
    # deltas may be anything, but every named basis must be a genuine basis
    for n, rep in json.loads(path_for(tag).read_text()).items():
        assert rep["defects"] == [] and rep["independent"] and rep["spans_bider"], n
