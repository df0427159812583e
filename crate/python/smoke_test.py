"""Smoke test for the ratroot extension module."""

from fractions import Fraction

import ratroot


def main() -> None:
    f = ratroot.parse("x^2 - 1")
    assert str(f) == "x^2 - 1", str(f)
    assert ratroot.RatFunc("x") * "x" == ratroot.parse("x^2")
    assert ratroot.parse("x^3*(x-1)").squarefree_part() == ratroot.parse("x^2 - x")
    root, defect = ratroot.parse("2*x^2").sqrt()
    assert (str(root), defect) == ("x", "2/1")

    v = ratroot.decide(["x", "4*x+1", "x^2-4*x"])
    assert v.status == "not_rationalizable" and not v
    assert v.genus == 1 and v.failing_subset == [1, 2]

    v = ratroot.decide(["x", "1-x"])
    assert v.rationalizable and v.witness.exact, v

    w = ratroot.rationalize([ratroot.parse("x-1"), "x-2"])
    assert w is not None and w.accepted

    assert ratroot.genus(["x^5-x"]) == 2
    assert ratroot.hyperelliptic_genus("x^3-x") == 1
    assert ratroot.cyclic_cover_genus("x^3-x", 3) == 1
    assert ratroot.decide_root("x^2*(x-1)", 3).rationalizable
    assert ratroot.closed_form_genus([1, 1, 2], 4) == Fraction(3, 2)
    assert ratroot.subset_criterion(["x", "x-1"]) == (True, None)

    m = ratroot.minpoly(["x", "4*x+1", "x^2-4*x"], reduce=True)
    assert m["degree"] == 8 and m["poly"].startswith("z^8 + (-24*x + 12)*z^6")

    s = ratroot.scan(seed=3, trials=20)
    assert s["trials"] == 20 and s["necessity_violations"] == 0
    assert s == ratroot.scan(seed=3, trials=20)

    for bad in (lambda: ratroot.parse("x+"), lambda: ratroot.minpoly(["x", "x^3"])):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print(f"ratroot {ratroot.__version__}: smoke test passed")


if __name__ == "__main__":
    main()
