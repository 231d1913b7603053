# Copyright 2026 The alphabound Authors
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
from fractions import Fraction

import pytest

import alphabound as ab


def star(k):
    return ab.Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def test_graph_basics():
    g = star(3)
    assert g.num_vertices == 4 and g.num_edges == 3
    assert g.neighbors(0) == [1, 2, 3]
    assert ab.degree_profile(g) == [0, 3, 0, 1]
    assert ab.is_in_class(g, 3)
    with pytest.raises(ab.Error):
        ab.Graph(2, [(0, 0)])


def test_parse_graph_relabels():
    g, labels = ab.parse_graph("# demo\n10 30\n30 20\n")
    assert labels == [10, 20, 30]
    assert g.has_edge(0, 2)
    with pytest.raises(ab.ParseError, match="line 2"):
        ab.parse_graph("0 1\n1 x\n")


def test_coefficients_are_fractions():
    assert ab.c_sequence(4) == [Fraction(5, 8), Fraction(3, 8), Fraction(1, 4), Fraction(1, 4)]
    assert ab.c_sequence(6)[:4] == [Fraction(91, 144), Fraction(53, 144), Fraction(19, 72),
                                    Fraction(5, 24)]
    assert ab.corollary1_sequence(3, Fraction(2, 7)) == [Fraction(9, 14), Fraction(5, 14),
                                                         Fraction(2, 7)]
    # Big denominators survive the conversion.
    c = ab.c_sequence(40)
    assert c[0] == ab.c_explicit(1, 40)
    assert c[0].denominator > 2**64
    with pytest.raises(ab.Error):
        ab.c_sequence(2)


def test_d_sequence():
    d = ab.d_sequence(4)
    assert (d[0].a, d[0].b) == (1, -1)
    assert (d[3].a, d[3].b) == (-2, 6)
    assert d[2].to_decimal(4) == "0.2642"
    assert math.isclose(float(d[0]), 1 - 1 / math.e)
    assert str(d[1]) == "1/e"
    assert d[3] < d[2] < d[1] < d[0]
    assert ab.d_closed_form(4) == d[3]


def test_bounds_on_gstar():
    g = ab.gen_gstar(10)
    assert ab.bound_theorem2(g) == Fraction(75, 8)
    assert ab.bound_theorem4(g, 6) == Fraction(1373, 144)
    t5 = ab.bound_theorem5(g)
    assert (t5.a, t5.b) == (18, -23)
    report = ab.compute_bounds(g, (5, 7))
    assert sorted(report["theorem4"]) == [5, 6, 7]
    assert report["caro_wei"] == Fraction(159, 20)
    with pytest.raises(ab.ClassError, match="requires"):
        ab.bound_theorem4(g, 4)


def test_class_errors():
    k4 = ab.Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    with pytest.raises(ab.ClassError, match="K_"):
        ab.bound_theorem2(k4)


def test_exact_and_witness():
    g = ab.gen_gstar(10)
    r = ab.exact_alpha(g)
    assert r["alpha"] == 11
    assert ab.is_independent(g, r["optimal_set"])
    w = ab.witness_theorem2(g)
    assert w["ok"]
    assert len(w["independent_set"]) >= math.ceil(w["certified_bound"])
    assert all(step["peel_weight"] <= 1 for step in w["trace"] if step["kind"] == "peel")


def test_budget_exceeded_carries_best():
    g = ab.gen_random_regular(80, 3, 1)
    with pytest.raises(ab.BudgetExceeded) as info:
        ab.exact_alpha(g, budget=3)
    assert ab.is_independent(g, info.value.best)


def test_families_are_tight():
    for delta, k in [(3, 3), (4, 2), (5, 4)]:
        g = ab.gen_chain_A(delta, k)
        assert ab.bound_theorem2(g) == k == ab.exact_alpha(g)["alpha"]
    b = ab.gen_attach_B(4, 2, 1)
    assert ab.exact_alpha(b)["alpha"] == 8 == ab.bound_theorem2(b)
    blocks = ab.gen_regular_blocks(3, ab.circulant_template(4, 3))
    assert ab.exact_alpha(blocks)["alpha"] == 4


def test_kp_hypothesis():
    g = ab.gen_random_connected(10, 4, 3)
    weights = [ab.corollary1_sequence(4, Fraction(2, 9))[g.degree(v) - 1]
               for v in range(g.num_vertices)]
    res = ab.check_kp_hypothesis(g, weights)
    assert res["holds"]
    assert ab.exact_alpha(g)["alpha"] >= res["total"]
    regular = ab.gen_random_regular(10, 3, 0)
    res = ab.check_kp_hypothesis(regular, [Fraction(1, 3)] * 10)
    assert not res["holds"] and res["violating_vertex"] is not None


def test_generators_are_deterministic():
    assert ab.gen_random_connected(20, 4, 9) == ab.gen_random_connected(20, 4, 9)
    text = ab.write_edge_list(ab.gen_gstar(5), "gstar")
    assert ab.parse_graph(text)[0] == ab.gen_gstar(5)
