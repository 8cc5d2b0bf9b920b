import json

import pytest

from e2quantum.io import InputError, bundled_e2_path, parse_input
from e2quantum.lie import builtin_cobracket, check_bialgebra_axioms, make_e2

E2 = json.loads(bundled_e2_path().read_text())


def doc(**changes):
    out = json.loads(json.dumps(E2))
    out.update(changes)
    return out


def test_bundled_file_is_e2():
    algebra, delta = parse_input(str(bundled_e2_path()))
    assert algebra == make_e2()
    assert delta is not None and delta.is_zero()


def test_inline_json():
    algebra, _ = parse_input(json.dumps(E2))
    assert algebra == make_e2()


def test_missing_cobracket_section():
    d = doc()
    del d["cobracket"]
    assert parse_input(d)[1] is None


def test_cobracket_entries():
    d = doc(cobracket=[{"i": 2, "j": 0, "k": 1, "coeff": "1"}])
    _, delta = parse_input(d)
    assert delta == builtin_cobracket("delta2") and check_bialgebra_axioms(delta)


def test_symmetric_constants_rejected():
    d = doc(brackets=[{"i": 0, "j": 1, "k": 2, "coeff": "1"}, {"i": 1, "j": 0, "k": 2, "coeff": "1"}])
    with pytest.raises(InputError) as exc:
        parse_input(d)
    assert exc.value.location == "brackets" and "antisymmetry" in str(exc.value) and "P1" in str(exc.value)


@pytest.mark.parametrize(
    "changes, location",
    [
        ({"brackets": [{"i": 3, "j": 0, "k": 1, "coeff": "i"}]}, "brackets[0].i"),
        ({"brackets": [{"i": 2, "j": 0, "k": 1, "coeff": "1/0"}]}, "brackets[0].coeff"),
        ({"brackets": [{"i": 2, "j": 0, "k": 1, "coeff": 1}]}, "brackets[0].coeff"),
        ({"brackets": [{"i": 2, "j": 0, "k": 1}]}, "brackets[0]"),
        ({"brackets": [{"i": 2, "j": 0, "k": 1, "coeff": "i", "x": 0}]}, "brackets[0]"),
        ({"brackets": [{"i": True, "j": 0, "k": 1, "coeff": "i"}]}, "brackets[0].i"),
        ({"cobracket": [{"i": 2, "j": 1, "k": 0, "coeff": "1"}]}, "cobracket"),
        ({"cobracket": [{"i": 2, "j": 0, "k": 1, "coeff": "1"}] * 2}, "cobracket[1]"),
        ({"dimension": 0}, "dimension"),
        ({"basis": ["P1", "P1", "J"]}, "basis"),
        ({"extra": 1}, "<document>"),
    ],
)
def test_malformed_documents(changes, location):
    with pytest.raises(InputError) as exc:
        parse_input(doc(**changes))
    assert exc.value.location == location


def test_invalid_json_has_position():
    with pytest.raises(InputError) as exc:
        parse_input('{"dimension": 3,,}')
    assert exc.value.location.startswith("<inline>:1:")


def test_missing_file():
    with pytest.raises(InputError):
        parse_input("/nonexistent/e2.json")


def test_top_level_must_be_object(tmp_path):
    p = tmp_path / "list.json"
    p.write_text("[1, 2]")
    with pytest.raises(InputError):
        parse_input(str(p))
