"""Independent reference values frozen into the C++ tests.

Everything here is computed from first principles (direct formula
evaluation with mpmath, brute-force enumeration of alignments and
partitions) without touching the C++ implementation.
"""
import itertools
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 40


def q_bound(n, a, f, c=None):
    c = mp.sqrt(a) if c is None else c
    n = mp.mpf(n)
    return c * mp.sqrt(2 / (n - 1) * ((n + 1) / (n - 1) + mp.log(n - 1))) + f / (n - 1)


def alexander(n, c=mp.mpf("3.52")):
    return c * mp.sqrt(mp.log(n) / n)


def radius(n, k, a, eps, two_sided):
    return a * mp.sqrt(mp.log((2 if two_sided else 1) / mp.mpf(eps)) / (k * n))


def psi(n):
    m = 2 * mp.mpf(n)
    return 2 / (m - 1) * ((m + 1) / (m - 1) + mp.log(m - 1))


def h(q):
    return -q * mp.log(q) - (1 - q) * mp.log(1 - q)


def alignments(p, q):
    for kk in range(min(p, q) + 1):
        for pi in itertools.combinations(range(p), kk):
            for mu in itertools.combinations(range(q), kk):
                yield pi, mu


def brute_score(x, y, s, delta):
    best = None
    for pi, mu in alignments(len(x), len(y)):
        kk = len(pi)
        u = sum(s(x[i], y[j]) for i, j in zip(pi, mu))
        u += delta * Fraction((len(x) - kk) + (len(y) - kk), 2)
        best = u if best is None else max(best, u)
    return best


ind = lambda a, b: 1 if a == b else 0


def expected(n, m):
    tot = Fraction(0)
    for x in itertools.product("01", repeat=n):
        for y in itertools.product("01", repeat=m):
            tot += brute_score(x, y, ind, 0)
    return tot / 2 ** (n + m)


def partitions(k, n):
    total = k * n
    import math
    rmax = math.ceil(Fraction(2 * k * n, 2 * n - 1))
    out = []
    for r in range(k, rmax + 1):
        def rec(j, sa, sb, sizes):
            if j == r - 1:
                a, b = total - sa, total - sb
                if a >= 0 and b >= 0 and a + b <= 2 * n:
                    out.append((r, sizes + [(a, b)]))
                return
            for a in range(0, total - sa + 1):
                for b in range(0, total - sb + 1):
                    if a + b in (2 * n - 1, 2 * n):
                        rec(j + 1, sa + a, sb + b, sizes + [(a, b)])
        rec(0, 0, 0, [])
    return out


if __name__ == "__main__":
    print("q_bound(100000,1,1) =", mp.nstr(q_bound(100000, 1, 1), 12))
    print("q_bound(10,1,1)     =", mp.nstr(q_bound(10, 1, 1), 12))
    print("q_bound(10000,1,1)  =", mp.nstr(q_bound(10000, 1, 1), 12))
    print("q_bound(2,1,1)      =", mp.nstr(q_bound(2, 1, 1), 12))
    print("alexander(10, C=1)  =", mp.nstr(alexander(10, 1), 12))
    print("alexander(100000)   =", mp.nstr(alexander(100000), 12))
    print("alexander(10000)    =", mp.nstr(alexander(10000), 12))
    print("radius2(1e5,2,1,.05)=", mp.nstr(radius(100000, 2, 1, 0.05, True), 12))
    print("radius1(1e5,2,1,.05)=", mp.nstr(radius(100000, 2, 1, 0.05, False), 12))
    q = q_bound(100000, 1, 1)
    print("one_sided_upper     =", mp.nstr(mp.mpf("0.8") + q + radius(100000, 2, 1, 0.05, False), 12))
    print("point radius        =", mp.nstr(radius(100000, 2, 1, 0.05, True) + q / 2, 12))
    print("psi(3)              =", mp.nstr(psi(3), 12))
    print("h(2/7)              =", mp.nstr(h(mp.mpf(2) / 7), 12))
    print("LCS(10010,01101)    =", brute_score("10010", "01101", ind, 0))
    print("AB/BA d=-0.5        =", brute_score("AB", "BA", ind, Fraction(-1, 2)))
    for n in (1, 2, 3, 4):
        e = expected(n, n)
        print(f"EL_{n} = {e}  l_{n} = {e / n} = {float(e / n)!r}")
    for k, n in [(1, 1), (2, 2), (1, 4), (4, 1), (2, 3), (3, 2), (1, 2), (2, 1), (1, 3), (3, 1), (2, 4), (4, 2), (1, 6), (6, 1), (1,8),(8,1)]:
        ps = partitions(k, n)
        by_r = {}
        for r, _ in ps:
            by_r[r] = by_r.get(r, 0) + 1
        print(f"|B_{{{k},{n}}}| = {len(ps)} by r: {dict(sorted(by_r.items()))}")
