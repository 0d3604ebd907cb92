"""Smoke test for the Python bindings.

Build and install first:
    pip install --no-build-isolation ./crates/py
then run `python python/smoke_test.py`.
"""

import ternary_cubic as tc

EXAMPLE = "x1^3 - 6 x1 x2^2 - 6 x2^3 + 6 x1^2 x3 + 18 x1 x2 x3 + 12 x2^2 x3 + 4 x3^3"


def product(scalar, lines, point):
    value = scalar
    for line in lines:
        value *= sum(c * x for c, x in zip(line, point))
    return value


def main():
    c = tc.classify(EXAMPLE)
    assert c["kind"] == "CompletelyReducibleGeneric", c
    assert c["lambda"] == "-108", c

    assert tc.classify(EXAMPLE, criterion="gamma")["completely_reducible"]
    assert not tc.classify("x1^3 + x2^3 + x3^3")["completely_reducible"]

    f = tc.factor("x1 x2 x3")
    assert f["exact"]["scalar"] == "1"
    assert sorted(f["exact"]["factors"]) == ["x1", "x2", "x3"]

    # The floating factors reproduce the example at a sample point.
    g = tc.factor(EXAMPLE)
    x = (2, -1, 3)
    exact = 8 - 6 * 2 + 6 + 6 * 4 * 3 + 18 * 2 * -1 * 3 + 12 * 3 + 4 * 27
    assert abs(product(g["scalar"], g["factors"], x) - exact) < 1e-8 * abs(exact), g

    assert tc.concomitant("x1 (x1 x2 + x3^2)", "S") == "0"
    values = tc.concomitants("x1 x2 x3", verify=True)
    assert len(values) == 9 and values["F"] != "0", values

    q = tc.quad("x1^2 - x2^2")
    assert q["discriminant"] == "0" and q["factors"] is not None

    s = tc.symmetric("x1 x2 x3")
    assert s is not None and s["completely_reducible"], s
    assert tc.symmetric("x1^3 + 2 x2^3") is None

    for bad, code in [("x1^3 +", "SyntaxError"), ("x1^2", "DegreeMismatch")]:
        try:
            tc.factor(bad)
        except tc.CubicError as e:
            assert e.args[0] == code, e.args
        else:
            raise AssertionError(f"{bad!r} should fail")
    try:
        tc.factor("x1^3 + x2^3 + x3^3")
    except tc.CubicError as e:
        assert e.args[0] == "NotReducible"
    else:
        raise AssertionError("Fermat cubic should not factor")

    passed, failed, failing = tc.verify_identities(tier=2)
    assert failed == 0 and passed == 5, failing

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
