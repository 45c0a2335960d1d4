import json

import pytest

from descjones.algebra.cyclotensor import CycloTensor
from descjones.algebra.cyclotomic import CyclotomicNumber
from descjones.habiro import jones_from_habiro
from descjones.statesum import (
    DiagramError,
    LongKnotDiagram,
    Slice,
    braid_closure_diagram,
    builtin_diagram,
    conjecture2_check,
    conjugation_symmetry_check,
    contract,
    crossing_weight,
    insert_curl_pair,
    invariance_check,
    kink_checks,
    load_diagram,
    naive_contract,
    naive_sum_41,
    segment_weight,
    slide_translate,
    tangle_tensor,
    validate_diagram,
    weight_relation_checks,
)
from helpers import to_complex


def events(*pairs):
    return LongKnotDiagram.from_events(pairs)


def test_builtin_diagrams_are_valid():
    d = builtin_diagram("4_1")
    assert d.crossing_count == 4 and d.writhe == 0
    assert sorted(s.event for s in d.slices if s.event[0] == "X") == ["X1+", "X2-", "X4+", "X4-"]
    trefoil = builtin_diagram("3_1")
    assert trefoil.crossing_count == 6 and trefoil.writhe == 0
    for name in ("4_1_braid", "unknot", "unknot_kinks"):
        assert builtin_diagram(name).writhe == 0
    with pytest.raises(DiagramError):
        builtin_diagram("8_19")


def test_validation_fills_orientations():
    d = validate_diagram(events(("cup", 1), ("X4+", 1), ("X4-", 0), ("cap", 0)))
    assert [s.orient for s in d.slices] == [("u", "u", "d"), ("u", "d", "u"), ("d", "u", "u"), ("u",)]
    assert d.strands_max == 3


def test_unbalanced_kinks_are_rejected():
    with pytest.raises(DiagramError, match="writhe must be zero, got 2"):
        validate_diagram(events(("cup", 1), ("X4+", 1), ("X4+", 0), ("cap", 0)))
    assert validate_diagram(events(("cup", 1), ("X4+", 1), ("X4-", 0), ("cap", 0))).writhe == 0


def test_orientation_mismatch_is_rejected():
    with pytest.raises(DiagramError, match="orientation"):
        validate_diagram(events(("cup", 1), ("X1+", 1), ("X1-", 1), ("cap", 0)))
    with pytest.raises(DiagramError, match="cap"):
        validate_diagram(events(("cup", 0), ("cap", 0)))
    bad = LongKnotDiagram((Slice("cup", 1, ("u", "d", "u")), Slice("cap", 0)))
    with pytest.raises(DiagramError, match="declared"):
        validate_diagram(bad)


def test_structural_errors():
    with pytest.raises(DiagramError, match="closed components"):
        validate_diagram(events(("cup", 0), ("X4+", 0), ("cap", 0)))
    assert validate_diagram(events(("cup", 0), ("cap", 1))).strands_max == 3
    with pytest.raises(DiagramError, match="open strands"):
        validate_diagram(events(("cup", 1)))
    with pytest.raises(DiagramError, match="unknown event"):
        validate_diagram(events(("twist", 0)))
    with pytest.raises(DiagramError, match="strands_max"):
        validate_diagram(LongKnotDiagram(builtin_diagram("4_1").slices, 2))


def test_diagram_json_round_trip(tmp_path):
    d = builtin_diagram("4_1")
    path = tmp_path / "d.json"
    path.write_text(d.dumps())
    again = validate_diagram(load_diagram(path))
    assert again == d
    path.write_text("{not json")
    with pytest.raises(DiagramError):
        load_diagram(path)
    with pytest.raises(DiagramError):
        LongKnotDiagram.from_json({"slices": [{"event": "cup", "pos": "one"}]})
    with pytest.raises(DiagramError):
        LongKnotDiagram.from_json({"slices": [{"event": "cup", "orient": ["sideways"]}]})


def test_long_orientation_words_are_accepted():
    data = {"slices": [{"event": "cup", "pos": 1, "orient": ["up", "up", "down"]},
                       {"event": "cap", "pos": 0, "orient": ["UP"]}]}
    with pytest.raises(DiagramError):
        validate_diagram(LongKnotDiagram.from_json(data))  # closed component
    assert Slice.from_json(data["slices"][0]).orient == ("u", "u", "d")


def test_weight_examples():
    for kind in ("X1+", "X2+", "X3+"):
        assert crossing_weight(kind, 0, 0, 0, 0, 0, 0, 2) == 1
    with pytest.raises(ValueError):
        crossing_weight("X5+", 0, 0, 0, 0, 0, 0, 2)
    assert segment_weight("up", 1, 1) == 1
    assert segment_weight("cap", 1, 0) == 0


def test_cup_cap_is_identity():
    N = 3
    got = tangle_tensor([Slice("cup", 1), Slice("cap", 0)], 1, N, 0, 0)
    assert got == CycloTensor.identity(N, N)


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_kinks(N):
    for n in range(N):
        report = kink_checks(N, n)
        assert report.ok and len(report) == 6


@pytest.mark.parametrize("N", [2, 3, 4])
def test_weight_relations(N):
    assert weight_relation_checks(N).ok
    assert conjugation_symmetry_check(N).ok


def test_figure_eight_example():
    inv = contract(builtin_diagram("4_1"), 2, 1)
    assert inv.scalar() == 5
    assert str(inv) == "(5) * 1_2"
    assert inv.in_ring()


def test_contract_matches_naive_sum_on_small_diagrams():
    for name in ("4_1", "unknot_kinks"):
        d = builtin_diagram(name)
        for n in range(2):
            assert contract(d, 2, n) == naive_contract(d, 2, n)
    d = builtin_diagram("4_1")
    assert contract(d, 3, 2) == naive_contract(d, 3, 2)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_oracle_equivalence(N):
    d = builtin_diagram("4_1")
    for n in range(N):
        assert contract(d, N, n) == naive_sum_41(N, n)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_diagram_independence(N):
    base = builtin_diagram("4_1")
    others = [builtin_diagram("4_1_braid"), validate_diagram(insert_curl_pair(base, 3, 0)),
              validate_diagram(slide_translate(base))]
    for n in range(N):
        for other in others:
            assert invariance_check("4_1", base, other, N, n).ok
        assert contract(builtin_diagram("unknot_kinks"), N, n).matrix == CycloTensor.identity(N, N)


def test_braid_closure_rejects_bad_words():
    with pytest.raises(ValueError):
        braid_closure_diagram([3], 3, ["X4+", "X4-"])
    with pytest.raises(ValueError):
        braid_closure_diagram([1], 3, ["X4+"])


def test_trefoil_matches_colored_jones():
    d = builtin_diagram("3_1")
    for N in (2, 3, 4):
        for n in range(N):
            expected = jones_from_habiro("3_1", n + 1).at_root(N)
            inv = contract(d, N, n)
            assert inv.scalar() == expected


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_conjecture_for_figure_eight(N):
    for n in range(N):
        report = conjecture2_check("4_1", None, N, n)
        assert report.ok, report.text()


def test_kashaev_diagonal_frozen():
    inv = contract(builtin_diagram("4_1"), 5, 4)
    # J_5 of 4_1 at exp(2 pi i / 5), from an independent cmath finite sum
    for i in range(5):
        assert abs(to_complex(inv.entry(i, i)) - 50.4721359549996) < 1e-9


def test_invariant_json():
    inv = contract(builtin_diagram("4_1"), 3, 1, knot="4_1")
    data = json.loads(json.dumps(inv.to_json()))
    assert data["N"] == 3 and data["color"] == 1 and len(data["entries"]) == 3
    assert CyclotomicNumber.from_json(data["entries"][1][1]) == inv.entry(1, 1)
