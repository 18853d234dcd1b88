"""Independent oracles used only by the tests.

These deliberately share no code with the library paths they check:
standard fillings are enumerated forwards, symmetric-group characters
come from alternant coefficient extraction in explicit variables, and
straightening is done by literal adjacent exchanges.
"""

import itertools


def brute_standard_count(shape):
    """Count standard fillings by placing 1..n into addable boxes."""
    shape = tuple(shape)
    n = sum(shape)
    rows = len(shape)

    def rec(current, placed):
        if placed == n:
            return 1
        total = 0
        for i in range(rows):
            if current[i] < shape[i] and (i == 0 or current[i - 1] > current[i]):
                total += rec(current[:i] + (current[i] + 1,) + current[i + 1:],
                             placed + 1)
        return total

    return rec((0,) * rows, 0)


def _perm_sign(perm):
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


def frobenius_character(lam, rho):
    """Symmetric-group character via alternant coefficient extraction.

    Multiplies the Vandermonde alternant by the power sums in
    max(len(lam),1) explicit variables and reads the coefficient of the
    staircase-shifted target monomial.
    """
    lam = tuple(lam)
    rho = tuple(rho)
    m = max(len(lam), 1)
    delta = tuple(range(m - 1, -1, -1))
    target = tuple((lam[i] if i < len(lam) else 0) + delta[i] for i in range(m))
    cap = max(target) if target else 0

    poly = {}
    for perm in itertools.permutations(range(m)):
        expo = tuple(delta[p] for p in perm)
        poly[expo] = poly.get(expo, 0) + _perm_sign(perm)

    for r in rho:
        nxt = {}
        for expo, coeff in poly.items():
            for i in range(m):
                e = expo[i] + r
                if e > cap:
                    continue
                key = expo[:i] + (e,) + expo[i + 1:]
                s = nxt.get(key, 0) + coeff
                if s:
                    nxt[key] = s
                else:
                    del nxt[key]
        poly = nxt
    return poly.get(target, 0)


def exchange_straighten(word):
    """Straighten a Bernstein word by literal adjacent exchanges.

    Repeatedly rewrites an ascending adjacent pair (m, n) into
    (n-1, m+1) with a sign flip; (m, m+1) annihilates the word.  A
    negative tail after sorting kills the word too.
    """
    word = list(word)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] < word[i + 1]:
                if word[i + 1] == word[i] + 1:
                    return None
                word[i], word[i + 1] = word[i + 1] - 1, word[i] + 1
                sign = -sign
                changed = True
                break
    while word and word[-1] == 0:
        word.pop()
    if word and word[-1] < 0:
        return None
    return sign, tuple(word)
