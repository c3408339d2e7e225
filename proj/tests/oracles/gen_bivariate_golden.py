"""Regenerates tests/data/bivariate_golden.json.

Uses the sum forms P(q) / (z, 1/z; q)_inf * sum c_n q^a_n (z, 1/z; q)_n / D_n(q),
rewritten as sum c_n q^a_n (P/D_n)(q) / (z q^n, q^n / z; q)_inf, and expands each
1/(x; q)_inf by the q-binomial theorem sum_k x^k / (q; q)_k. Nothing here shares
code or method with the library's product-form expansion.
"""
import json
import sys
from collections import defaultdict

N = 12


def mul(a, b):
    out = [0] * (N + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b[: N + 1 - i]):
                out[i + j] += x * y
    return out


def poch(offset, step, count):
    """prod_{j<count} (1 - q^{offset + j step}); count None means infinite."""
    s = [1] + [0] * N
    j = 0
    while (count is None or j < count) and offset + j * step <= N:
        e = offset + j * step
        s = [s[i] - (s[i - e] if i >= e else 0) for i in range(N + 1)]
        j += 1
    return s


def inv(a):
    assert a[0] == 1
    out = [0] * (N + 1)
    out[0] = 1
    for n in range(1, N + 1):
        out[n] = -sum(a[k] * out[n - k] for k in range(1, n + 1))
    return out


def shift(a, e):
    return [0] * e + a[: N + 1 - e] if e <= N else [0] * (N + 1)


def families():
    qq = poch(1, 1, None)
    q_q2 = poch(1, 2, None)
    q2_q2 = poch(2, 2, None)
    lead = {
        "A1": lambda n: n, "A3": lambda n: 2 * n, "A5": lambda n: n * n + n, "A7": lambda n: n * n,
        "C1": lambda n: n, "C5": lambda n: n * (n + 1) // 2, "E2": lambda n: n, "E4": lambda n: 2 * n,
    }
    sign = {f: (lambda n: 1) for f in lead}
    sign["E2"] = lambda n: (-1) ** n
    prod = {"A": qq, "C": mul(q_q2, qq), "E": q2_q2}
    den = {
        "A": lambda n: poch(1, 1, 2 * n),
        "C": lambda n: mul(poch(1, 2, n), poch(1, 1, n)),
        "E": lambda n: poch(2, 2, n),
    }
    for f in lead:
        yield f, lead[f], sign[f], prod[f[0]], den[f[0]]


def bivariate(lead, sign, prod, den):
    """dict (m, n) -> coefficient."""
    inv_qk = [None] + [inv(poch(1, 1, k)) for k in range(1, N + 1)]
    total = defaultdict(int)
    n = 1
    while lead(n) <= N:
        base = shift(mul(prod, inv(den(n))), lead(n))
        # 1/(z q^n; q)_inf = sum_k z^k q^{nk} / (q;q)_k, same for 1/z
        def side():
            terms = {0: [1] + [0] * N}
            k = 1
            while n * k <= N:
                terms[k] = shift(inv_qk[k], n * k)
                k += 1
            return terms
        up, down = side(), side()
        for a, sa in up.items():
            pa = mul(base, sa)
            for b, sb in down.items():
                pb = mul(pa, sb)
                for e, c in enumerate(pb):
                    if c:
                        total[(a - b, e)] += sign(n) * c
        n += 1
    return total


def main():
    out = {"order": N, "families": {}}
    for name, lead, sign, prod, den in families():
        t = bivariate(lead, sign, prod, den)
        out["families"][name] = {str(m): [str(t[(m, e)]) for e in range(1, N + 1)] for m in (-1, 0, 1)}
    json.dump(out, sys.stdout, indent=1)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
