"""Independent reference arithmetic used only by the tests.

Blades are generator words reduced by bubble sort, one swap at a time, so
nothing here shares code with the bitmask engine under test.
"""

from fractions import Fraction


def reduce_word(word):
    """Return (sign, sorted word without repeats) for a product of generators."""
    w = list(word)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                sign = -sign
                changed = True
            elif w[i] == w[i + 1]:
                del w[i:i + 2]
                changed = True
                break
    return sign, tuple(w)


def unit_product(words, lam):
    """Structure constants of the lambda-scaled basis spanned by ``words``.

    Returns ``table[i][j] = (k, s)`` with ``b_i b_j = s b_k`` where
    ``b_i = lam * word_i`` for non-empty words.
    """
    canon = []
    for w in words:
        s, c = reduce_word(w)
        canon.append((s, c))
    where = {c: k for k, (_, c) in enumerate(canon)}
    table = []
    for i, wi in enumerate(words):
        row = []
        for j, wj in enumerate(words):
            scale = (lam if wi else 1) * (lam if wj else 1)
            s, c = reduce_word(tuple(wi) + tuple(wj))
            k = where[c]
            sk, _ = canon[k]
            # c = sk * word_k and word_k = lam * b_k (lam^-1 = lam)
            coeff = scale * s * sk * (lam if c else 1)
            row.append((k, coeff))
        table.append(row)
    return table


def multiply(table, x, y):
    out = [Fraction(0)] * len(x)
    for i, a in enumerate(x):
        for j, b in enumerate(y):
            k, s = table[i][j]
            out[k] += s * a * b
    return out


# Expanded octonion-like product at lambda=+1, z_k = sum of sign * x_i * y_j.
OCTONION_EXPANSION = (
    "x0y0 -x1y1 -x2y2 -x3y3 -x4y4 -x5y5 -x6y6 +x7y7",
    "x1y0 +x0y1 -x3y2 +x2y3 +x5y4 -x4y5 -x7y6 -x6y7",
    "x2y0 +x3y1 +x0y2 -x1y3 -x6y4 -x7y5 +x4y6 -x5y7",
    "x3y0 -x2y1 +x1y2 +x0y3 -x7y4 +x6y5 -x5y6 -x4y7",
    "x4y0 -x5y1 +x6y2 -x7y3 +x0y4 +x1y5 -x2y6 -x3y7",
    "x5y0 +x4y1 -x7y2 -x6y3 -x1y4 +x0y5 +x3y6 -x2y7",
    "x6y0 -x7y1 -x4y2 +x5y3 +x2y4 -x3y5 +x0y6 -x1y7",
    "x7y0 +x6y1 +x5y2 +x4y3 +x3y4 +x2y5 +x1y6 +x0y7",
)


def octonion_expansion(x, y):
    out = []
    for row in OCTONION_EXPANSION:
        z = 0
        for term in row.split():
            sign = -1 if term[0] == "-" else 1
            body = term.lstrip("+-")
            i, j = int(body[1]), int(body[3])
            z += sign * x[i] * y[j]
        out.append(z)
    return out


def matvec(m, v):
    return [sum(a * b for a, b in zip(row, v)) for row in m]
