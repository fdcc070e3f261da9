import pytest

from semicr.data_model import Mode
from semicr.vine import (
    EdgeTag,
    build_dvine,
    classify_edges,
    decomposition,
    format_decomposition,
    needed_predicate,
    same_arm_predicate,
    sensitivity_parameter_map,
)


class TestBuildDvine:
    def test_four_variable_structure(self):
        vine = build_dvine(("1", "2", "3", "4"))
        t1 = [(e.pair, e.given) for e in vine.levels[0]]
        assert t1 == [(("1", "2"), ()), (("2", "3"), ()), (("3", "4"), ())]
        t2 = [(e.pair, e.given) for e in vine.levels[1]]
        assert t2 == [(("1", "3"), ("2",)), (("2", "4"), ("3",))]
        t3 = [(e.pair, e.given) for e in vine.levels[2]]
        assert t3 == [(("1", "4"), ("2", "3"))]

    def test_minimal_vine(self):
        vine = build_dvine(("a", "b"))
        assert len(vine.levels) == 1
        assert vine.levels[0][0].pair == ("a", "b")
        assert vine.levels[0][0].given == ()

    def test_six_variables_edge_count(self):
        vine = build_dvine(tuple("abcdef"))
        assert len(vine.edges) == 15
        assert len(vine.levels) == 5

    def test_edge_count_identity(self):
        for d in range(2, 11):
            vine = build_dvine(tuple(str(i) for i in range(d)))
            assert len(vine.edges) == d * (d - 1) // 2
            for l, level in enumerate(vine.levels, start=1):
                assert len(level) == d - l
                for e in level:
                    assert len(e.given) == l - 1

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError):
            build_dvine(("x", "x", "y"))
        with pytest.raises(ValueError):
            build_dvine(("x",))


class TestClassification:
    def test_one_terminal_tags(self):
        vine, tags, params = decomposition(Mode.ONE_TERMINAL)
        by_tag = {t: [] for t in EdgeTag}
        for edge in vine.edges:
            by_tag[tags[edge.key()]].append(edge)
        assert len(by_tag[EdgeTag.SENSITIVITY]) == 3
        assert len(by_tag[EdgeTag.UNNEEDED]) == 1
        assert len(by_tag[EdgeTag.IDENTIFIED]) == 2
        sens = {frozenset(e.pair) for e in by_tag[EdgeTag.SENSITIVITY]}
        assert sens == {
            frozenset({"death@1", "death@0"}),
            frozenset({"prog@1", "death@0"}),
            frozenset({"prog@0", "death@1"}),
        }
        unneeded = by_tag[EdgeTag.UNNEEDED][0]
        assert frozenset(unneeded.pair) == {"prog@1", "prog@0"}
        assert set(unneeded.given) == {"death@1", "death@0"}

    def test_one_terminal_consumed_parameters(self):
        # one free correlation per consumed sensitivity edge: rho + two rho*_z
        params = sensitivity_parameter_map(Mode.ONE_TERMINAL)
        assert sorted(params.values()) == ["rho", "rho_star_0", "rho_star_1"]

    def test_two_terminal_tags(self):
        vine, tags, params = decomposition(Mode.TWO_TERMINAL)
        counts = {t: 0 for t in EdgeTag}
        for k, t in tags.items():
            counts[t] += 1
        assert counts[EdgeTag.SENSITIVITY] == 8
        assert counts[EdgeTag.UNNEEDED] == 1
        assert counts[EdgeTag.IDENTIFIED] == 6
        # top-of-order identified run: same-arm tree-1 and tree-2 edges
        level1 = vine.levels[0]
        assert tags[level1[0].key()] is EdgeTag.IDENTIFIED
        assert tags[level1[1].key()] is EdgeTag.IDENTIFIED
        assert tags[level1[2].key()] is EdgeTag.SENSITIVITY  # cross-arm other-death pair

    def test_two_terminal_parameter_map(self):
        params = sensitivity_parameter_map(Mode.TWO_TERMINAL)
        free = sorted(v for v in params.values() if v != "zero")
        assert free == ["rho", "rho_star_0", "rho_star_1", "rho_star_star"]
        assert sum(1 for v in params.values() if v == "zero") == 4

    def test_all_identified_predicate(self):
        vine = build_dvine(("a", "b", "c"))
        tags = classify_edges(vine, lambda e: True, lambda e: True)
        assert all(t is EdgeTag.IDENTIFIED for t in tags.values())

    def test_idempotent_and_order_stable(self):
        vine = build_dvine(("prog@1", "death@1", "death@0", "prog@0"))
        t1 = classify_edges(vine, same_arm_predicate, needed_predicate)
        t2 = classify_edges(vine, same_arm_predicate, needed_predicate)
        assert t1 == t2


def test_format_decomposition_renders_both_modes():
    for mode in Mode:
        text = format_decomposition(mode)
        assert "tree 1:" in text
        assert "sensitivity" in text
        assert "unneeded" in text
    two = format_decomposition(Mode.TWO_TERMINAL)
    assert "rho_star_star" in two
    assert "independence, fixed 0" in two
