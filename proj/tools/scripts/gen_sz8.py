#!/usr/bin/env python3
"""Regenerate data/sz8_degree65.json.

Sz(8) is built as the matrix group <S(a,b), T(c), W> inside Sp_4(8) with
theta(x) = x^4, and then restricted to its action on the 65 projective
points of the orbit of <e_4> (the Suzuki-Tits ovoid). Two generators of the
resulting permutation group are chosen deterministically and the generated
group order is checked to be 29120.
"""
import itertools
import json
import sys

from sympy.combinatorics import Permutation, PermutationGroup

# GF(8) = F_2[x]/(x^3 + x + 1); elements are ints 0..7 (bit i = coeff of x^i).
MOD = 0b1011


def gmul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & 0b1000:
            a ^= MOD
    return r


def gpow(a, e):
    r = 1
    for _ in range(e):
        r = gmul(r, a)
    return r


def theta(x):
    return gpow(x, 4)


def inv(a):
    for b in range(1, 8):
        if gmul(a, b) == 1:
            return b
    raise ZeroDivisionError


def S(a, b):
    at = theta(a)
    return [
        [1, 0, 0, 0],
        [a, 1, 0, 0],
        [b, at, 1, 0],
        [gmul(gpow(a, 2), at) ^ gmul(a, b) ^ theta(b), gmul(a, at) ^ b, a, 1],
    ]


def T(c):
    # diag(c^(1+2^m), c^(2^m), c^(-2^m), c^(-1-2^m)) with m = 1
    return [[gpow(c, 3) if i == j == 0 else gpow(c, 2) if i == j == 1 else
             gpow(inv(c), 2) if i == j == 2 else gpow(inv(c), 3) if i == j == 3 else 0
             for j in range(4)] for i in range(4)]


W = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]]


def act(v, m):
    # row vector times matrix
    out = []
    for j in range(4):
        s = 0
        for i in range(4):
            s ^= gmul(v[i], m[i][j])
        out.append(s)
    return tuple(out)


def normalize(v):
    for x in v:
        if x:
            k = inv(x)
            return tuple(gmul(k, y) for y in v)
    raise ValueError


def main():
    mats = [S(1, 0), S(0, 1), T(2), W]
    start = normalize((0, 0, 0, 1))
    orbit = [start]
    seen = {start: 0}
    for v in orbit:
        for m in mats:
            w = normalize(act(v, m))
            if w not in seen:
                seen[w] = len(orbit)
                orbit.append(w)
    assert len(orbit) == 65, len(orbit)
    perms = [[seen[normalize(act(v, m))] for v in orbit] for m in mats]
    full = PermutationGroup([Permutation(p) for p in perms])
    assert full.order() == 29120, full.order()
    # Deterministic search for a 2-generating pair among short words.
    words = [Permutation(p) for p in perms]
    pool = list(words)
    for a, b in itertools.product(words, repeat=2):
        pool.append(a * b)
    for a, b in itertools.product(pool, repeat=2):
        if PermutationGroup([a, b]).order() == 29120:
            doc = {
                "name": "Sz(8)",
                "degree": 65,
                "order": 29120,
                "generators": [list(a.array_form), list(b.array_form)],
            }
            json.dump(doc, sys.stdout, indent=None)
            sys.stdout.write("\n")
            return
    raise SystemExit("no generating pair found")


if __name__ == "__main__":
    main()
