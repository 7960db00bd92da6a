import itertools
import json
import math

import numpy as np
import pytest

import freeinv

EVEN = "1 + 3*x1*x2 - 7*x1*x1 - x2*x1*x2*x2"


def burnside_orbits(d, n):
    total = 0
    perms = list(itertools.permutations(range(d)))
    for perm in perms:
        fixed = sum(1 for w in itertools.product(range(d), repeat=n) if tuple(perm[i] for i in w) == w)
        total += fixed
    return total // len(perms)


def test_parse_and_arithmetic():
    p = freeinv.parse("x1*x2 - 2*x2", 2)
    q = freeinv.FreePoly("x2", 2)
    assert str(p + 2 * q) == "x1*x2"
    assert (p * q).degree == 3
    assert freeinv.FreePoly(2).degree is None
    assert p.terms() == [((2,), -2), ((1, 2), 1)]
    assert math.isclose(p.norm(), math.sqrt(5))
    with pytest.raises(freeinv.ParseError):
        freeinv.parse("x1 +", 2)


def test_count_matches_orbit_counting():
    report = freeinv.count("sym3-natural", 4)
    assert report["f"] == [burnside_orbits(3, n) for n in range(5)]
    f = report["f"]
    g = [0] * 5
    for n in range(1, 5):
        g[n] = f[n] - sum(g[k] * f[n - k] for k in range(1, n))
    assert report["g"] == g


def test_even_example_rewrite():
    basis = freeinv.build_basis("even2", 4)
    assert basis.counts_by_degree == [0, 0, 4, 0, 0]
    p = freeinv.parse(EVEN, 2)
    hat = freeinv.rewrite(p, basis)
    assert str(hat) == "1 - 7*u1 + 3*u2 - u3*u4"
    assert (freeinv.expand(hat, basis) - p).norm() < 1e-12
    with pytest.raises(freeinv.RewriteError):
        freeinv.rewrite(freeinv.parse("x1", 2), basis)


def test_basis_is_orthonormal_and_invariant():
    rep = freeinv.UnitaryRep.builtin("sym3-natural")
    basis = freeinv.build_basis(rep, 3)
    elements = basis.elements()
    for i, a in enumerate(elements):
        assert freeinv.is_invariant(rep, a)
        for j, b in enumerate(elements):
            assert abs(a.inner(b) - (1 if i == j else 0)) < 1e-12
    report = basis.check_superorthogonality(2, 1e-10)
    assert report["passed"]
    restored = freeinv.Basis.from_dict(basis.to_dict(), rep)
    assert restored.fingerprint() == basis.fingerprint()


def test_evaluation_and_row_ball():
    x = freeinv.sample_row_contraction(2, 3, 0.1, 7)
    assert math.isclose(freeinv.row_ball_max_eigenvalue(x), 0.9, rel_tol=1e-10)
    p = freeinv.parse("1 + x1*x2", 2)
    expected = np.eye(3) + x[0] @ x[1]
    assert np.allclose(freeinv.evaluate(p, x), expected)
    basis = freeinv.build_basis("sym2-natural", 3)
    assert freeinv.check_partial_row_ball(basis, x, 3)["passed"]


def test_even_dilation_corners():
    u = freeinv.sample_row_contraction(4, 2, 0.05, 3)
    x = freeinv.even_dilation(u)
    for k, (a, b) in enumerate(itertools.product(range(2), repeat=2)):
        assert np.allclose((x[a] @ x[b])[:2, :2], u[k])


def test_cli_verify_is_deterministic():
    code, out, err = freeinv.run_cli(["verify", "--group", "even2", "--max-degree", "4", "--seed", "3"])
    assert code == 0, err
    again = freeinv.run_cli(["verify", "--group", "even2", "--max-degree", "4", "--seed", "3"])
    assert again[1] == out
    assert json.loads(out)["passed"]
    assert freeinv.run_cli(["count", "--group", "nope"])[0] == 2
