"""Grammar conformance suite: thirty expressions with their expected values,
plus error reporting."""

import pytest

from qnichols.cyclo import CycScalar
from qnichols.families import build_family
from qnichols.freealg import (braided_commutator, generator, interval_bracket,
                              iterated_bracket, one)
from qnichols.grammar import GrammarError, parse_element


@pytest.fixture(scope="module")
def m():
    return build_family({"family": "SuperA", "theta": 3, "order": 8, "J": [2]})


def expected_table(m):
    x1, x2, x3 = (generator(m, i) for i in (1, 2, 3))
    z = m.zeta_power(1)
    unit = one(m)
    half = CycScalar.from_rational(1) / CycScalar.from_rational(2)
    return [
        ("x1", x1),
        ("x2 ", x2),
        ("x1*x2", x1 * x2),
        ("x1 x2", x1 * x2),
        ("x1 * x2 * x3", x1 * x2 * x3),
        ("x1 + x2", x1 + x2),
        ("x1 - x2", x1 - x2),
        ("-x1", -x1),
        ("- x1 + x1", x1 - x1),
        ("2*x1", x1.scale(2)),
        ("x1*2", x1.scale(2)),
        ("x1^3", x1 * x1 * x1),
        ("(x1+x2)^2", (x1 + x2) * (x1 + x2)),
        ("x1^0", unit),
        ("z", unit.scale(z)),
        ("z^3*x2", x2.scale(z ** 3)),
        ("z^-2", unit.scale(z.inverse() ** 2)),
        ("x1*x2 - z^3*x2*x1", x1 * x2 - (z ** 3) * (x2 * x1)),
        ("q(1,2)", unit.scale(m.entry(0, 1))),
        ("q(2,1)*x3", x3.scale(m.entry(1, 0))),
        ("xw(1,2)", iterated_bracket(m, [1, 2])),
        ("xw(1,1,2)", iterated_bracket(m, [1, 1, 2])),
        ("xw(3,3,2)", iterated_bracket(m, [3, 3, 2])),
        ("xint(1,3)", iterated_bracket(m, [1, 2, 3])),
        ("xint(2,2)", x2),
        ("ad(1,x2)", iterated_bracket(m, [1, 2])),
        ("ad(2, x1*x3)", braided_commutator(x2, x1 * x3)),
        ("[x1,x2]", braided_commutator(x1, x2)),
        ("[xw(1,1,2), xw(1,2)]",
         braided_commutator(iterated_bracket(m, [1, 1, 2]),
                            iterated_bracket(m, [1, 2]))),
        ("(1+z)/(1+z)*x1", x1),
        ("1/2*x1", x1.scale(half)),
        ("xw(1,2)^2 - [x1,x2]*[x1,x2]", interval_bracket(m, 1, 2) ** 2
         - braided_commutator(x1, x2) * braided_commutator(x1, x2)),
    ]


def test_conformance_suite(m):
    table = expected_table(m)
    assert len(table) >= 30
    for text, expected in table:
        got = parse_element(text, m)
        assert (got - expected).is_zero(), text


@pytest.mark.parametrize("text,fragment", [
    ("[[xint(1,3),x2]", "expected"),
    ("x1 +", "unexpected"),
    ("x9", "out of range"),
    ("xw(1,9)", "out of range"),
    ("xint(3,1)", "i <= j"),
    ("x1/x2", "scalar"),
    ("x1/(x2 - x2)", "zero"),
    ("x2^-1", "non-invertible"),
    ("x1 $ x2", "unexpected character"),
    ("q(1)", "expected"),
])
def test_errors_carry_positions(m, text, fragment):
    with pytest.raises(GrammarError) as err:
        parse_element(text, m)
    assert fragment in str(err.value)
    assert "line" in str(err.value) and "column" in str(err.value)


def test_error_position_is_exact(m):
    with pytest.raises(GrammarError) as err:
        parse_element("x1 + x9", m)
    assert err.value.col == 6
