"""Smoke test for the holocurv Python extension.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`.
"""

import json
import tempfile

import holocurv


def main():
    names = holocurv.catalog_names()
    assert len(names) >= 20, names

    sp2 = holocurv.Rep.catalog("pi_H_10_sp2")
    assert (sp2.n, sp2.dim) == (8, 10)
    report = sp2.pspace()
    assert report["dim_P"] == 40 and report["weak_berger"] is True, report

    sp2_t = holocurv.Rep.catalog("sp_2_t")
    report = sp2_t.pspace()
    assert (report["dim_P"], report["dim_LP"], report["weak_berger"]) == (40, 10, False), report

    so3 = holocurv.Rep.catalog("so_3")
    again = holocurv.Rep.from_json(so3.to_json())
    assert json.loads(again.to_json()) == json.loads(so3.to_json())
    with tempfile.TemporaryDirectory() as d:
        cold = so3.rspace(basis=True, cache_dir=d)
        warm = so3.rspace(basis=True, cache_dir=d)
    assert cold == warm and cold["dim_R"] == 6, cold

    rows = holocurv.table(4)
    assert [r["name"] for r in rows][:1] == ["so_2"]
    assert all(r["weak_berger"] is True for r in rows)

    u2 = holocurv.Rep.catalog("u_2")
    g = holocurv.lorentz(1, u2, verify_thm3=True, berger=True)
    assert g["thm3_ok"] and g["dim_R"] == 36, g
    g = holocurv.lorentz(3, u2, phi="1", verify_thm3=True)
    assert g["thm3_lhs"] == 27, g
    try:
        holocurv.lorentz(3, so3, phi="1")
    except ArithmeticError:
        pass
    else:
        raise AssertionError("trivial center accepted")

    assert holocurv.torus_closed("1,x", min_poly="x^2-2") == {"closed": False, "rational_dim": 0}
    assert holocurv.torus_closed("1,2")["closed"] is True
    print("python smoke test: ok")


if __name__ == "__main__":
    main()
