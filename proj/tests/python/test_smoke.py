"""Smoke tests for the quiverhom python module against known fixture values."""

import quiverhom as qh


def test_nakayama_3334():
    a = qh.nakayama("cyclic", [3, 3, 3, 4])
    assert a.dim == 13
    info = a.analyze()
    assert info["gldim"] == 5
    assert info["domdim"] == 5
    assert info["higher_auslander"] is True
    v = a.qf1()
    assert v["qf1"] is False
    assert v["condition1"]["pdim_tau_g_DA"] == 3
    assert v["condition1"]["holds"] is True
    assert v["condition2"]["holds"] is False


def test_qf1_linear_fixture():
    a = qh.nakayama("linear", [2, 3, 3, 3, 3, 2, 2, 1])
    v = a.qf1()
    assert v["qf1"] is True
    assert v["gldim"] == 4
    op = a.opposite()
    assert op.qf1()["qf1"] is True


def test_parse_and_module_expressions():
    text = """
field Q
nakayama linear 2,2,1
"""
    a = qh.parse(text)
    assert a.dim == 5
    assert a.module_dims("P(1)") == [1, 1, 0]
    assert a.module_dims("I(3)") == [0, 1, 1]
    assert a.module_dims("stableA") == [1, 0, 0]
    dims = a.homological_dims("S(1)")
    assert dims["pdim"] == 2
    assert a.ext("S(1)", "S(2)", 1) == 1
    reparsed = qh.parse(a.serialize())
    assert reparsed.dim == a.dim


def test_infinite_dimensions_are_strings():
    text = """
field Q
vertices 1 2
arrow g : 1 -> 1
arrow b : 1 -> 2
arrow al : 2 -> 2
relation 1*g*g
relation 1*al*al
relation 1*g*b + -1*b*al
"""
    a = qh.parse(text)
    info = a.analyze()
    assert info["gldim"] == ">=33"
    assert info["domdim"] == 1
    try:
        a.qf1()
        raise AssertionError("expected QhError")
    except qh.QhError:
        pass


def test_enumerate_and_scan():
    assert qh.enumerate_kupisch("linear", 3, 3) == [[2, 2, 1], [3, 2, 1]]
    report = qh.scan(kind="cyclic", max_simples=4, parity="all", workers=2)
    assert report["algebras_scanned"] > 0
    assert report["counterexamples"] == []
    assert any(rec["entries"] == [3, 3, 3, 4] for rec in report["odd_g_violations"])


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"ok {name}")
    print("python smoke tests passed")
