"""Shared deterministic generators for the test suite."""

from twistlab import Surface, TwistLetter, TwistWord


def random_class(surface: Surface, rng, lo=-3, hi=3):
    return surface.homology_class(
        [rng.randint(lo, hi) for _ in range(surface.betti)]
    )


def random_exponent(rng, lo=-3, hi=3) -> int:
    e = 0
    while e == 0:
        e = rng.randint(lo, hi)
    return e


def random_word(
    surface: Surface, rng, classes=None, max_len=6, exp_lo=-3, exp_hi=3
) -> TwistWord:
    length = rng.randint(0, max_len)
    letters = []
    for _ in range(length):
        curve = rng.choice(classes) if classes else random_class(surface, rng)
        letters.append(TwistLetter(curve, random_exponent(rng, exp_lo, exp_hi)))
    return TwistWord(tuple(letters), surface)


def matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def transpose(a):
    n = len(a)
    return tuple(tuple(a[j][i] for j in range(n)) for i in range(n))
