import pytest
from hypothesis import given, settings, strategies as st

from mu_spectra import (
    Certificate,
    EdgeColoring,
    GraphError,
    InvalidColoringError,
    analyze,
    check_certificate,
    cycle,
    graph_to_dict,
    is_interval,
    is_valid,
    petersen,
    rebind,
    reflect,
    require_valid,
    sample,
    spectrum,
    validate,
)
from mu_spectra.graphs import Graph

from oracles import naive_f, naive_valid


class TestIntervalPredicate:
    @pytest.mark.parametrize("colors,expect", [
        ({3}, True), ({2, 3, 4}, True), ({1, 2, 4}, False),
        ({5, 6}, True), ({1, 3}, False), ({10, 11, 12, 13}, True)])
    def test_examples(self, colors, expect):
        assert is_interval(colors) is expect

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_interval(set())

    @given(st.sets(st.integers(1, 20), min_size=1, max_size=8))
    def test_agrees_with_consecutive_run_definition(self, s):
        expect = sorted(s) == list(range(min(s), max(s) + 1))
        assert is_interval(s) is expect


class TestValidate:
    def test_catalog_colorings_are_valid(self, P, catalog):
        for cert in catalog.values():
            assert validate(P, cert.coloring()) == ()
            assert is_valid(P, cert.coloring())

    def test_wrong_length_is_shape_violation(self, P):
        bad = EdgeColoring(t=4, colors=(1, 2, 3))
        kinds = [v.kind for v in validate(P, bad)]
        assert kinds == ["shape"]

    def test_out_of_range_color_reported(self, P, catalog):
        c = catalog["sigma"].coloring()
        bad = EdgeColoring(t=4, colors=(9,) + c.colors[1:])
        kinds = {v.kind for v in validate(P, bad)}
        assert "range" in kinds

    def test_properness_clash_names_both_edges(self, P, catalog):
        c = catalog["sigma"].coloring()
        # copy the color of edge (x2,x3) onto the adjacent edge (x1,x2)
        bad = EdgeColoring(t=4, colors=(c.colors[1],) + c.colors[1:])
        clashes = [v for v in validate(P, bad) if v.kind == "properness"]
        assert clashes
        assert any(v.where == "x2" for v in clashes)

    def test_unused_color_is_surjectivity_violation(self, P, catalog):
        c = catalog["phi"].coloring()
        # color 15 appears once; overwrite it
        i = c.colors.index(15)
        bad = EdgeColoring(t=15, colors=c.colors[:i] + (1,) + c.colors[i + 1:])
        surj = [v for v in validate(P, bad) if v.kind == "surjectivity"]
        assert [v.where for v in surj] == ["15"]

    def test_all_violations_reported_not_just_first(self, P):
        bad = EdgeColoring(t=15, colors=(1,) * 15)
        kinds = {v.kind for v in validate(P, bad)}
        assert {"properness", "surjectivity"} <= kinds
        assert len(validate(P, bad)) > 5

    def test_require_valid_raises_with_details(self, P):
        with pytest.raises(InvalidColoringError) as exc:
            require_valid(P, EdgeColoring(t=15, colors=(1,) * 15))
        assert exc.value.violations


class TestSpectra:
    def test_distinct_colors_spectrum(self, P, catalog):
        assert spectrum(P, catalog["phi"].coloring(), "x1") == {1, 2, 4}

    def test_four_color_spectrum(self, P, catalog):
        assert spectrum(P, catalog["sigma"].coloring(), "y1") == {1, 2, 4}

    def test_analyze_counts_and_flags(self, P, catalog):
        rep = analyze(P, catalog["psi"].coloring())
        assert rep.f == 6
        assert rep.interval_vertices(P) == ("x1", "x3", "x4", "x5", "y2", "y3")
        assert sum(rep.interval_flags) == rep.f
        assert rep.v_int.bit_count() == rep.f

    def test_analyze_requires_validity(self, P):
        with pytest.raises(InvalidColoringError):
            analyze(P, EdgeColoring(t=15, colors=(1,) * 15))

    @settings(deadline=None, max_examples=25)
    @given(st.integers(0, 10**6), st.integers(4, 15))
    def test_spectrum_size_equals_degree(self, seed, t):
        P = petersen()
        (c,) = sample(P, t, seed=seed, count=1)
        rep = analyze(P, c)
        for label in P.vertices:
            assert len(spectrum(P, c, label)) == 3
        assert rep.f == naive_f(P, c)
        assert naive_valid(P, c)


class TestReflect:
    @settings(deadline=None, max_examples=25)
    @given(st.integers(0, 10**6), st.integers(4, 15))
    def test_involution_preserving_validity_and_f(self, seed, t):
        P = petersen()
        (c,) = sample(P, t, seed=seed, count=1)
        r = reflect(c)
        assert reflect(r) == c
        assert is_valid(P, r)
        assert analyze(P, r).f == analyze(P, c).f

    def test_reflection_of_best_four_coloring(self, P, catalog):
        r = reflect(catalog["sigma"].coloring())
        assert analyze(P, r).f == 8


def _rotate_petersen(g, c):
    """Push a coloring through the order-5 rotation automorphism."""
    succ = {f"x{i}": f"x{i % 5 + 1}" for i in range(1, 6)}
    succ |= {f"y{i}": f"y{i % 5 + 1}" for i in range(1, 6)}
    out = [0] * g.m
    for i, (a, b) in enumerate(g.edge_labels):
        out[g.edge_index[frozenset((succ[a], succ[b]))]] = c.colors[i]
    return EdgeColoring(t=c.t, colors=tuple(out))


class TestAutomorphismInvariance:
    def test_rotation_is_an_automorphism(self, P):
        succ = {f"x{i}": f"x{i % 5 + 1}" for i in range(1, 6)}
        succ |= {f"y{i}": f"y{i % 5 + 1}" for i in range(1, 6)}
        for a, b in P.edge_labels:
            assert P.has_edge(succ[a], succ[b])

    @settings(deadline=None, max_examples=20)
    @given(st.integers(0, 10**6), st.integers(4, 15))
    def test_f_is_invariant_under_rotation(self, seed, t):
        P = petersen()
        (c,) = sample(P, t, seed=seed, count=1)
        rotated = _rotate_petersen(P, c)
        assert is_valid(P, rotated)
        assert analyze(P, rotated).f == analyze(P, c).f


class TestCertificates:
    def test_roundtrip_with_catalog_source(self, P, catalog):
        cert = catalog["psi"]
        doc = cert.to_dict()
        assert doc["graph"] == "petersen"
        again = Certificate.from_dict(doc)
        assert again.colors == cert.colors
        assert again.claim_f == 6

    def test_roundtrip_with_inline_graph(self):
        g = cycle(4)
        cert = Certificate(graph=g, t=3, colors=(1, 2, 1, 3), claim_f=2)
        doc = cert.to_dict()
        assert doc["graph"]["name"] == "cycle:4"
        again = Certificate.from_dict(doc)
        assert again.graph == g
        assert check_certificate(again).ok

    def test_edge_keys_accept_either_endpoint_order(self, P, catalog):
        doc = catalog["sigma"].to_dict()
        flipped = {}
        for key, val in doc["colors"].items():
            a, b = key.split("-")
            flipped[f"{b}-{a}"] = val
        doc["colors"] = flipped
        cert = Certificate.from_dict(doc)
        assert check_certificate(cert).ok

    def test_claim_intervals_checked(self, P, catalog):
        base = catalog["psi"]
        good = Certificate(graph=P, t=15, colors=base.colors,
                           claim_intervals=(("x1", True), ("x2", False)),
                           source="petersen")
        assert check_certificate(good).ok
        bad = Certificate(graph=P, t=15, colors=base.colors,
                          claim_intervals=(("x2", True),), source="petersen")
        result = check_certificate(bad)
        assert not result.ok
        assert "x2" in result.mismatches[0]

    def test_wrong_f_claim_is_a_mismatch_not_an_error(self, P, catalog):
        cert = Certificate(graph=P, t=15, colors=catalog["psi"].colors,
                           claim_f=9, source="petersen")
        result = check_certificate(cert)
        assert result.f == 6
        assert not result.ok
        assert "claimed f=9" in result.mismatches[0]

    @pytest.mark.parametrize("mutate,match", [
        (lambda d: d.pop("t"), "missing"),
        (lambda d: d.pop("colors"), "missing"),
        (lambda d: d["colors"].pop("x1-x2"), "misses edges"),
        (lambda d: d["colors"].update({"x1-x3": 1}), "not an edge"),
        (lambda d: d["colors"].update({"bogus": 1}), "does not name"),
    ])
    def test_malformed_documents_rejected(self, catalog, mutate, match):
        doc = catalog["psi"].to_dict()
        mutate(doc)
        with pytest.raises(GraphError, match=match):
            Certificate.from_dict(doc)

    def test_rebind_across_edge_orderings(self, P, catalog):
        shuffled = Graph.from_labels(
            "petersen-shuffled", P.vertices, tuple(reversed(P.edge_labels)))
        c = rebind(catalog["sigma"], shuffled)
        assert is_valid(shuffled, c)
        assert analyze(shuffled, c).f == 8

    def test_rebind_requires_same_edges(self, catalog):
        with pytest.raises(GraphError):
            rebind(catalog["sigma"], cycle(5))

    def test_inline_graph_survives_json(self, tmp_path):
        g = cycle(4)
        doc = {"graph": graph_to_dict(g), "t": 2,
               "colors": {"v0-v1": 1, "v1-v2": 2, "v2-v3": 1, "v0-v3": 2},
               "claims": {"f": 4}}
        cert = Certificate.from_dict(doc)
        assert cert.source is None
        assert check_certificate(cert).ok
