"""Smoke test for the schull extension module.

Build with `maturin develop -m crates/py/Cargo.toml`, or copy
target/release/libschull.so to schull.so on PYTHONPATH.
"""

import itertools
import json
import math
import random

import schull


def realizations(points, probs):
    for mask in itertools.product([False, True], repeat=len(points)):
        p = math.prod(q if m else 1 - q for m, q in zip(mask, probs))
        yield [x for x, m in zip(points, mask) if m], p


def diameter(points):
    return max((math.dist(a, b) for a in points for b in points), default=0.0)


def main():
    rng = random.Random(3)
    points = [[rng.random(), rng.random()] for _ in range(8)]
    probs = [rng.uniform(0.1, 1.0) for _ in points]
    ds = schull.Dataset(points, probs)
    assert len(ds) == 8 and ds.dim == 2

    exact = sum(p * diameter(r) for r, p in realizations(points, probs))
    assert math.isclose(ds.oracle("diameter"), exact, rel_tol=1e-12)
    est = ds.expected_diameter()
    assert exact / schull.WITNESS_FACTOR - 1e-12 <= est <= exact + 1e-12
    assert exact / 2 - 1e-12 <= ds.expected_diameter_two_approx() <= exact + 1e-12

    width = ds.oracle("width")
    assert ds.expected_width() <= width + 1e-12
    fpras = ds.expected_width_fpras(0.1, seed=4, gamma=1.0)
    assert fpras == ds.expected_width_fpras(0.1, seed=4, gamma=1.0)

    assert math.isclose(ds.expected_complexity(), ds.oracle("complexity"), abs_tol=1e-9)
    assert len(ds.hyperplane_stats()) == 8 * 7 // 2
    assert 0.0 <= ds.membership_prob([0.5, 0.5]) <= 1.0

    again = schull.Dataset.from_json(ds.to_json())
    assert again.points == ds.points and again.probs == ds.probs
    assert json.loads(ds.to_json())

    seq, lam = schull.witness_sequence(points)
    assert len(seq) == 5 and lam <= diameter(points) + 1e-12

    hard, alpha, beta = schull.hardness_instance(3, [(0, 1), (1, 2), (0, 2)])
    assert math.isclose(alpha, math.sqrt(3)) and math.isclose(beta, math.sqrt(6))
    assert math.isclose(hard.oracle("diameter"), beta / 2, rel_tol=1e-9)

    try:
        schull.Dataset([[0.0, 0.0]], [1.5])
    except ValueError:
        pass
    else:
        raise AssertionError("invalid probability accepted")

    print("schull smoke test passed")


if __name__ == "__main__":
    main()
