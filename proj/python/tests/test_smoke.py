# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 The framelet Authors

import json
import math

import numpy as np
import pytest

import framelet

EXAMPLE1 = np.array([[1, 0, -1], [0, 1, -1]])
EXAMPLE2 = np.array([[1, 0, -1, 0], [0, 1, 0, -1]])


def test_haar_counts_and_verification():
    for d, count in [(1, 1), (2, 6), (3, 28)]:
        bank = framelet.haar_bank(d)
        assert bank.dim == d
        assert len(bank) == count
        assert bank.verify()["pass"]
    assert len(framelet.haar_bank(3).census()) == 13


def test_missing_filter_reports_witness():
    doc = json.loads(framelet.haar_bank(1).to_json())
    doc["highpass"] = []
    report = framelet.Bank.from_json(json.dumps(doc)).verify()
    assert not report["pass"]
    assert report["first_failure"]["gamma"] == (0,)
    assert report["first_failure"]["actual"] == "1/4"
    assert report["first_failure"]["expected"] == "1/2"


def test_example_banks():
    ex1 = framelet.boxspline_bank(EXAMPLE1)
    assert len(ex1) == 21
    assert sorted(ex1.census().values()) == [2, 2, 2, 5, 5, 5]
    ex2 = framelet.boxspline_bank(EXAMPLE2)
    assert len(ex2) == 36
    reduced = framelet.boxspline_bank(EXAMPLE2, reduce="pairs")
    assert len(reduced) == 30
    assert reduced.verify()["pass"]
    assert ex2.frequency_defect(8) < 1e-12


def test_json_round_trip():
    bank = framelet.boxspline_bank(EXAMPLE1, mode="projected")
    again = framelet.Bank.from_json(bank.to_json())
    assert again.to_json() == bank.to_json()


def test_mask_and_fibers():
    mask = framelet.boxspline_mask(EXAMPLE1)
    assert mask[(0, 0)] == 0.25
    assert len(mask) == 7
    assert math.isclose(sum(mask.values()), 1.0)
    assert framelet.preimage_vertices(EXAMPLE2, [1, 1]) == [(1, 1, 0, 0)]


def test_validation():
    assert framelet.validate_matrix(EXAMPLE1)["valid"]
    bad = framelet.validate_matrix(np.array([[2, 0], [0, 1]]))
    assert bad["status"] == "fails_odd_condition"
    assert bad["witness"] == (1, 0)
    with pytest.raises(framelet.FrameletError):
        framelet.boxspline_bank(np.array([[2, 0], [0, 1]]))


def test_transform_round_trip():
    rng = np.random.default_rng(5)
    u = rng.standard_normal((16, 16))
    bank = framelet.boxspline_bank(EXAMPLE2)
    pyramid = framelet.analyze(bank, u, levels=2)
    assert len(pyramid["levels"]) == 2
    assert len(pyramid["levels"][0]) == 36
    assert pyramid["lowpass"].shape == (4, 4)
    energy = sum(float(np.sum(t**2)) for level in pyramid["levels"] for t in level)
    energy += float(np.sum(pyramid["lowpass"] ** 2))
    assert math.isclose(energy, float(np.sum(u**2)), rel_tol=1e-10)
    back = framelet.synthesize(bank, pyramid, u.shape)
    assert np.max(np.abs(back - u)) <= 1e-10 * np.max(np.abs(u))
    pr, parseval = framelet.roundtrip_defects(bank, u, 2)
    assert pr <= 1e-10 and parseval <= 1e-10


def test_transform_rejects_bad_shape():
    with pytest.raises(framelet.FrameletError):
        framelet.analyze(framelet.haar_bank(2), np.zeros((6, 8)), 2)


def test_cascade():
    bank = framelet.boxspline_bank(EXAMPLE1)
    phi = framelet.cascade_phi(bank, 3)
    values = phi["values"]
    lower = phi["lower"]
    assert values[-lower[0], -lower[1]] == 1.0
    assert np.all(values >= 0)
    psi = framelet.sample_psi(bank, 2)
    assert len(psi) == 21
    assert all(abs(float(np.sum(g["values"]))) < 1e-12 for g in psi)
    assert framelet.boxspline_fourier(EXAMPLE1, [0.0, 0.0]) == 1.0
