# Copyright 2026 The mlpareto Authors
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

import math

import numpy as np
import pytest

import mlpareto as mp

BRIDGE = [(0, 1, 1), (0, 2, 1), (1, 2, 1), (3, 4, 1), (3, 5, 1), (4, 5, 1), (2, 3, 1)]


def bridge():
    return mp.Layer("bridge", 6, BRIDGE)


def test_layer_and_laplacian():
    layer = mp.Layer("l", 3, [(2, 0, 1.5), (1, 1, 4.0)])
    assert layer.edges == [(0, 2, 1.5)]
    lap = mp.laplacian(layer)
    assert lap.shape == (3, 3)
    np.testing.assert_allclose(lap.sum(axis=1), 0.0)
    with pytest.raises(mp.InvalidArgumentError):
        mp.Layer("bad", 2, [(0, 1, -1.0)])
    with pytest.raises(IndexError):
        mp.Layer("bad", 2, [(0, 5, 1.0)])


def test_fiedler_matches_numpy():
    value, vector = mp.fiedler_vector(bridge())
    expected = np.linalg.eigvalsh(mp.laplacian(bridge()))[1]
    assert value == pytest.approx(expected, abs=1e-8)
    assert abs(sum(vector)) < 1e-8


def test_spectral_bisect_bridge():
    result = mp.spectral_bisect(bridge())
    assert result.objective_value == pytest.approx(1 / 3, abs=1e-12)
    labels = result.partition.labels
    assert labels[0] == labels[1] == labels[2] != labels[3]
    assert result.method == "spectral-sweep"


def test_pareto_walk_and_midpoint():
    path = mp.Layer("path", 6, [(i, i + 1, 1) for i in range(5)])
    walk = mp.pareto_walk(mp.MultiLayerGraph(6, [bridge(), path]))
    assert len(walk.visited) == walk.hamming_distance + 1
    front = walk.front
    assert 0 <= front.selected < len(front.candidates)
    points = [tuple(c.objectives) for c in front.candidates]
    for a in points:
        assert not any(mp.dominates(mp.Objectives(*b), mp.Objectives(*a)) for b in points)


def test_nondominated_filter_and_select_midpoint():
    cands = [
        mp.FrontCandidate(mp.Partition([1, 2]), mp.Objectives(f1, f2), k)
        for k, (f1, f2) in enumerate([(0, 1), (0.5, 0.5), (1, 0), (1, 1)])
    ]
    front = mp.nondominated_filter(cands)
    assert [c.step_index for c in front] == [0, 1, 2]
    assert mp.select_midpoint(front) == 1


def test_ari_and_matrix():
    a = mp.Partition([1, 1, 2, 2])
    b = mp.Partition([1, 2, 1, 2])
    assert mp.adjusted_rand_index(a, b) == pytest.approx(-0.5)
    m = mp.ari_matrix([a, b, mp.Partition([2, 2, 1, 1])])
    assert m.shape == (3, 3)
    np.testing.assert_allclose(np.diag(m), 1.0)
    assert m[0, 2] == 1.0


def test_synthetic_recovery_and_recursion():
    planted = mp.block_partition(40, 2)
    g = mp.generate_synthetic(planted, 0.9, 0.05, seed=1)
    walk = mp.pareto_walk(g)
    chosen = walk.front.selected_candidate().partition
    assert mp.adjusted_rand_index(chosen, planted) >= 0.9
    parts = mp.recursive_communities(g, max_depth=2)
    assert 2 <= parts.part_count <= 4
    with pytest.raises(mp.InvalidArgumentError):
        mp.generate_synthetic(planted, 0.1, 0.5)


def test_layer_builders(tmp_path):
    events = tmp_path / "events.tsv"
    events.write_text("0\tu1\ta\n0\tu1\tb\n0\tu2\ta\n")
    records, volumes, tags = mp.ingest_events(str(events))
    assert tags == ["a", "b"]
    assert [v.counts for v in volumes] == [[2], [1]]
    user = mp.build_user_layer(records, 0, tags)
    assert user.edges == [(0, 1, 1.0)]

    x = mp.VolumeSeries("x", [1, 2, 3, 4, 5])
    y = mp.VolumeSeries("y", [2, 4, 5, 4, 5])
    assert mp.pearson_window(x, y, 4) == pytest.approx(6 / math.sqrt(60))
    assert mp.fisher_z(math.tanh(1.3859)) == pytest.approx(1.3859)
    with pytest.raises(mp.DomainError):
        mp.fisher_z(1.0)
    with pytest.raises(mp.InsufficientHistoryError):
        mp.build_volume_layer([x, y], 3)
    assert mp.build_volume_layer([x, x], 4).edge_count == 1
    assert issubclass(mp.FormatError, mp.Error)
    assert issubclass(mp.Error, RuntimeError)


def test_version():
    assert mp.__version__
