"""Reference evaluations kept independent of the package code paths."""
from mpmath import mp, mpf, log


def stotland_excess_mp(values, dps=60):
    """Brute-force Lagrange-form sum in extended precision."""
    with mp.workdps(dps):
        p = [mpf(v) for v in values]
        total = mpf(0)
        for r, pr in enumerate(p):
            weight = mpf(1)
            for s, ps in enumerate(p):
                if s != r:
                    weight *= pr / (pr - ps)
            total += weight * pr * log(pr)
        return -total


def stotland_excess_divided_difference(values, dps=60):
    """``F = -f[p_1, ..., p_k]`` with ``f(x) = x**k ln x``, via Newton's table."""
    with mp.workdps(dps):
        x = [mpf(v) for v in values]
        k = len(x)
        table = [xi**k * log(xi) for xi in x]
        for order in range(1, k):
            table = [
                (table[i + 1] - table[i]) / (x[i + order] - x[i])
                for i in range(k - order)
            ]
        return -table[0]
