import pytest

import shintani

Q5 = {"name": "Q(sqrt5)", "minpoly": ["-1", "-1", "1"]}
CHI = {"type": "norm-induced", "kronecker": "-3"}


def config(p, **extra):
    c = {"field": Q5, "character": CHI, "p": str(p)}
    c.update(extra)
    return c


def test_oracle():
    assert shintani.oracle_l0([-1, -1, 1], -3)["rational"] == "2/3"


def test_lvalue_matches_oracle():
    out = shintani.lvalue(config(11))
    assert out["L_Sp_at_0"]["rational"] == "8/3"
    assert out["match"] is True


def test_trivial_zero_report():
    out = shintani.lp(config(19, level="2"))
    assert out["r"] == "2"
    assert out["pass"] is True
    assert out["mass"]["rational"] == "0"


def test_errors_carry_codes():
    with pytest.raises(shintani.Error) as e:
        shintani.field({"field": {"minpoly": ["1", "0", "1"]}})
    assert e.value.code == "NotTotallyReal"
    assert e.value.exit_code == 1
    with pytest.raises(shintani.Error) as e:
        shintani.run("lp", config(7, colour="blue"))
    assert e.value.code == "UnknownKey"


def test_verify_suite():
    assert shintani.verify(config(7), "fourier")["failures"] == "0"
