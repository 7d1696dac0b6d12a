import pytest

import ficat


def test_ring_info():
    info = ficat.ring_info("Z/2 x Z/3")
    assert info["size"] == 6
    assert not info["local"]
    assert [f["ring"] for f in info["local_factors"]] == ["Z/2", "Z/3"]


def test_hom_counts():
    assert ficat.hom_count("VIC", 1, 2, ring="Z/2") == 6
    assert ficat.hom_count("SI", 2, 2, ring="Z/2") == 720
    assert ficat.hom_count("FI", 2, 4) == 12
    assert len(ficat.hom("VIC", 1, 2, ring="Z/4", limit=5)) == 5
    assert all(row["identity"] for row in ficat.counts("VIC", 3, ring="Z/4"))


def test_factor():
    assert ficat.factor("Z/4", [[2, 3]]) == {"f1": [[2, 1]], "f2": [[3]]}
    with pytest.raises(ficat.PreconditionError):
        ficat.factor("Z/4", [[2, 2]])


def test_z16_products():
    f1 = {"f": [[0], [1]], "fp": [[2, 1]]}
    g1 = {"f": [[0, 0], [1, 0], [0, 1]], "fp": [[2, 1, 0], [0, 0, 1]]}
    h = ficat.compose("OVIC", g1, f1, ring="Z/16", src=1, dst=2)
    assert h["payload"]["fp"]["entries"][0] == [4, 2, 1]


def test_orders():
    f = {"f": [[1], [0]], "fp": [[1, 1]]}
    g = {"f": [[1], [0], [0]], "fp": [[1, 1, 1]]}
    assert ficat.order_cmp("OVIC", "Z/2", f, g) == {"cmp": "Less", "preceq": True}
    phi = ficat.order_phi("OVIC", "Z/2", f, g)
    assert (phi["src"], phi["dst"]) == (2, 3)
    with pytest.raises(ficat.PreconditionError):
        ficat.order_phi("OVIC", "Z/2", g, f)


def test_modules_and_homology():
    assert ficat.module_dims("VIC", "P1", 3, ring="Z/2") == [0, 1, 6, 28]
    h = ficat.homology("FI", "P0", "triple", 3)
    assert h["dims"] == {"H0": 0, "H1": 0, "H2": 0}
    plain = ficat.homology("FI", "P0", "plain", 4, degree=4)
    assert plain["dims"]["H4"] == 9


def test_axioms_and_checks():
    report = ficat.check_axioms("VIC", 2, ring="Z/2")
    assert all(c["passed"] for c in report["checks"])
    results = ficat.run_checks("quick", 0, [1, 2])
    assert [r["passed"] for r in results] == [True, True]
    with pytest.raises(ficat.PreconditionError):
        ficat.run_checks("bogus")


def test_budget():
    with pytest.raises(ficat.BudgetExceeded):
        ficat.hom_count("VIC", 3, 3, ring="Z/5")
