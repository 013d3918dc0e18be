"""Dense reference linear algebra on ``fractions.Fraction`` (and complex pairs).

Shares no code with the package; used as an oracle in the tests.
"""

from fractions import Fraction


def frac(x):
    if hasattr(x, "re"):
        return complex_frac(x)
    return Fraction(int(x.numerator), int(x.denominator))


def complex_frac(z):
    return (frac(z.re), frac(z.im))


def to_frac(dense):
    return [[frac(x) for x in row] for row in dense]


def rank(rows):
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rk = 0
    for col in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][col] != 0:
                f = m[i][col] / m[rk][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def identity(k):
    return [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]


def kron(a, b):
    return [[a[i // len(b)][j // len(b[0])] * b[i % len(b)][j % len(b[0])]
             for j in range(len(a[0]) * len(b[0]))] for i in range(len(a) * len(b))]


def sparse_to_dense(vectors, ncols):
    return [[Fraction(int(v[j].numerator), int(v[j].denominator)) if j in v else Fraction(0)
             for j in range(ncols)] for v in vectors]
