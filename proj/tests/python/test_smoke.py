import pstwalk


def test_classify_transfer_family():
    v = pstwalk.classify(12, [1, 5])
    assert v["occurs"]
    assert v["target"] == 6
    assert v["tau_min"] == 6
    assert v["gamma"] == 1
    assert v["case"] == "v4-sum-l-2mod4"


def test_classify_cubic_and_bipartite():
    assert not pstwalk.classify(10, [3, 5])["occurs"]
    assert not pstwalk.classify(6, [1, 3])["occurs"]


def test_search_matches_classification():
    v = pstwalk.search_min_pst(6, [1, 2])
    assert v["occurs"] and v["tau_min"] == 6 and v["target"] == 3 and v["gamma"] == 1


def test_simulate_even_cycle():
    trace = pstwalk.simulate(6, [1], 0, 3, 20)
    hit_taus = [h["tau"] for h in trace["hits"]]
    assert hit_taus[:2] == [3, 9]
    assert abs(trace["fidelities"][2] - 1.0) < 1e-9
    assert abs(trace["hits"][0]["phase"] - 1.0) < 1e-9


def test_delta_integrality():
    assert not pstwalk.delta_integrality(5, 1, 2)["algebraic_integer"]
    assert pstwalk.delta_integrality(3, 1, 2)["algebraic_integer"]


def test_crt_decompose():
    dec = pstwalk.crt_decompose(36, 5)
    assert [p["component"] for p in dec["parts"]] == [1, 8]
    assert [p["pi"] for p in dec["parts"]] == [1, 2]
    assert [p["theta"] for p in dec["parts"]] == [0, 2]


def test_bosma_exponents():
    exps = pstwalk.bosma_exponents(36, {3: [0, 2]})
    assert exps == [0, 1, 4, 5, 8, 9, 13, 17, 24, 28, 32, 33]


def test_eigenvalues_and_identity():
    evs = pstwalk.circulant_eigenvalues(6, [1])
    assert abs(evs[0][1] - 1.0) < 1e-12
    assert pstwalk.chebyshev_identity_max_deviation(8, [1, 3], 20) < 1e-9


def test_connectivity():
    assert pstwalk.is_connected(6, [1, 3])
    assert not pstwalk.is_connected(6, [2])


def test_verify_suite():
    out = pstwalk.verify(suite="theorems", n_max=8)
    assert out["failures"] == 0
    assert out["checks"] > 0
