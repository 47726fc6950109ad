"""Independent brute-force oracles used to freeze expected test values.

These deliberately avoid the library's code paths: plain Python loops,
no shared helpers, so a bug cannot hide on both sides of a comparison.
"""

import math


def kripp_alpha_bruteforce(rows, metric="linear"):
    """Krippendorff alpha by explicit pair enumeration over items."""
    if metric == "linear":
        delta = lambda a, b: abs(a - b)
    else:
        delta = lambda a, b: (a - b) ** 2

    units = [[v for v in row if v is not None] for row in rows]
    units = [u for u in units if len(u) >= 2]
    if not units:
        raise ValueError("no codeable pairs")
    n = sum(len(u) for u in units)

    d_observed = 0.0
    for u in units:
        m = len(u)
        pair_sum = sum(delta(u[i], u[j]) for i in range(m) for j in range(m) if i != j)
        d_observed += pair_sum / (m - 1)
    d_observed /= n

    pooled = [v for u in units for v in u]
    d_expected = sum(delta(a, b) for a in pooled for b in pooled) / (n * (n - 1))
    if d_expected == 0.0:
        return 1.0
    return 1.0 - d_observed / d_expected


def information_gain_bruteforce(presence, labels):
    """Gain of one binary feature, straight from the entropy definition."""

    def entropy(ys):
        h = 0.0
        for y in set(ys):
            p = ys.count(y) / len(ys)
            h -= p * math.log2(p)
        return h

    with_f = [y for p, y in zip(presence, labels) if p]
    without_f = [y for p, y in zip(presence, labels) if not p]
    h = entropy(labels)
    if with_f:
        h -= (len(with_f) / len(labels)) * entropy(with_f)
    if without_f:
        h -= (len(without_f) / len(labels)) * entropy(without_f)
    return h


def pearson_bruteforce(xs, ys):
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    cov = sum((a - mx) * (b - my) for a, b in zip(xs, ys))
    vx = sum((a - mx) ** 2 for a in xs)
    vy = sum((b - my) ** 2 for b in ys)
    if vx == 0 or vy == 0:
        return None
    return cov / math.sqrt(vx * vy)
