# Tiny exact 3x3 linear algebra over field elements (rows are tuples).
from __future__ import annotations

from .errors import DegenerateConfiguration


def det(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def adjugate(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def transpose(m):
    return tuple(zip(*m))


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(m, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def inverse(m):
    d = det(m)
    if d == 0:
        raise DegenerateConfiguration("singular matrix")
    return tuple(tuple(x / d for x in row) for row in adjugate(m))


def solve(m, v):
    return matvec(inverse(m), v)


def fit_projective(src, dst):
    """Matrix ``H`` with ``H @ src[i]`` proportional to ``dst[i]`` for four pairs.

    ``src`` and ``dst`` each hold four vectors, no three linearly dependent.
    """
    P = transpose(src[:3])
    Q = transpose(dst[:3])
    lam = solve(P, src[3])
    mu = solve(Q, dst[3])
    if any(x == 0 for x in lam) or any(x == 0 for x in mu):
        raise DegenerateConfiguration("four vectors not in general position")
    scale = [m / l for m, l in zip(mu, lam)]
    Qs = tuple(tuple(Q[r][k] * scale[k] for k in range(3)) for r in range(3))
    return matmul(Qs, inverse(P))
