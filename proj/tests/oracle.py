"""Naive reference counts, independent of the C++ generators.

Terms are tuples: ('v', k), ('l', body), ('a', fun, arg). Every term of a
given weight is built by unguided recursion and then filtered by predicates.
"""
import sys
from functools import lru_cache

NATURAL = (1, 1, 1, 1)  # lambda, app, succ, zero
A1 = (1, 2, 1, 0)
MINF = (1, 1, 1, 0)


@lru_cache(maxsize=None)
def terms(n, w=NATURAL):
    lam, app, succ, zero = w
    out = []
    for k in range(n + 1):
        if succ * k + zero == n:
            out.append(('v', k))
    if n >= lam:
        out += [('l', b) for b in terms(n - lam, w)]
    if n >= app:
        for i in range(n - app + 1):
            for f in terms(i, w):
                for a in terms(n - app - i, w):
                    out.append(('a', f, a))
    return tuple(out)


def free_bound(t, depth=0):
    if t[0] == 'v':
        return max(0, t[1] - depth + 1)
    if t[0] == 'l':
        return free_bound(t[1], depth + 1)
    return max(free_bound(t[1], depth), free_bound(t[2], depth))


def neutral(t):
    return t[0] == 'v' or (t[0] == 'a' and neutral(t[1]) and normal(t[2]))


def normal(t):
    return neutral(t) or (t[0] == 'l' and normal(t[1]))


def neutral_hnf(t):
    return t[0] == 'v' or (t[0] == 'a' and neutral_hnf(t[1]))


def hnf(t):
    while t[0] == 'l':
        t = t[1]
    return neutral_hnf(t)


def subterms(t):
    yield t
    if t[0] == 'v':
        for j in range(t[1]):
            yield ('v', j)
    else:
        for c in t[1:]:
            yield from subterms(c)


OMEGA = ('a', ('l', ('a', ('v', 0), ('v', 0))), ('l', ('a', ('v', 0), ('v', 0))))


def census(n):
    ts = terms(n)
    row = {
        'plain': len(ts),
        'closed': sum(free_bound(t) == 0 for t in ts),
        'normal': sum(map(normal, ts)),
        'neutral': sum(map(neutral, ts)),
        'hnf': sum(map(hnf, ts)),
        'neutral-hnf': sum(map(neutral_hnf, ts)),
        'omega': sum(any(s == OMEGA for s in subterms(t)) for t in ts),
    }
    for m in range(1, 4):
        row['L%d' % m] = sum(free_bound(t) <= m for t in ts)
    return row


if __name__ == '__main__':
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 10
    keys = None
    for n in range(top + 1):
        row = census(n)
        if keys is None:
            keys = list(row)
            print('n', *keys)
        print(n, *(row[k] for k in keys))
    print('A1', [len(terms(n, A1)) for n in range(9)])
    print('MInf', [len(terms(n, MINF)) for n in range(7)])
