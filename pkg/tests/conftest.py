"""Shared generators for the randomized suites.

Everything is seeded explicitly so failures replay deterministically.
"""

from __future__ import annotations

import random
from fractions import Fraction

from cfrieze import (
    DegenerateSeed,
    Frieze,
    FriezeParams,
    Section,
    extract_section,
    seed_from_free,
)


def random_params(rng: random.Random, max_n: int = 6,
                  rational_c: bool = False) -> FriezeParams:
    n = rng.randint(1, max_n)
    num = rng.choice([v for v in range(-5, 6) if v != 0])
    den = rng.choice([1, 2, 3]) if rational_c else 1
    return FriezeParams(Fraction(num, den), n)


def random_frieze(rng: random.Random, max_n: int = 6,
                  rational_c: bool = False):
    """A random valid frieze from small-integer free values, or None when
    the draw is degenerate."""
    params = random_params(rng, max_n, rational_c)
    free = [Fraction(rng.randint(-4, 4)) for _ in range(params.n + 1)]
    base = rng.randint(-3, 3)
    try:
        seed = seed_from_free(params, free, base)
    except DegenerateSeed:
        return None
    return Frieze(seed)


def random_section(rng: random.Random, n: int) -> Section:
    anchor = rng.randint(-4, 4)
    style = rng.randrange(3)
    if style == 0:
        moves = ["J"] * (n + 3)
    elif style == 1:
        moves = ["I"] * (n + 3)
    else:
        moves = [rng.choice("JI") for _ in range(n + 3)]
    points = [(anchor, anchor - 2)]
    for move in moves:
        i, j = points[-1]
        points.append((i, j + 1) if move == "J" else (i - 1, j))
    return Section(tuple(points))


def random_nonzero_section_values(rng: random.Random, frieze: Frieze,
                                  tries: int = 60):
    """A random section of the frieze whose rows 0..n+1 carry no zero."""
    for _ in range(tries):
        section = random_section(rng, frieze.n)
        sv = extract_section(frieze, section)
        if all(v != 0 for v in sv.values[1:frieze.n + 3]):
            return sv
    return None


def random_repetitive_frieze(rng: random.Random, max_n: int = 4):
    """A random frieze with s = t and c = -r^2 < 0, or None on a bad draw.

    With free values x_1..x_n drawn at random, the last free value is solved
    from P_{n+1}(x_1..x_{n+1}) = +-r^{n+1}, which forces both penultimate-row
    values to coincide.
    """
    from cfrieze import continuant_eval

    n = rng.randint(1, max_n)
    r = rng.randint(1, 3)
    c = Fraction(-r * r)
    params = FriezeParams(c, n)
    head = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
    pen = continuant_eval(c, head)
    if pen == 0:
        return None
    target = rng.choice([1, -1]) * Fraction(r) ** (n + 1)
    last = (target - c * continuant_eval(c, head[:-1])) / pen
    try:
        seed = seed_from_free(params, head + [last], rng.randint(-3, 3))
    except DegenerateSeed:
        return None
    frieze = Frieze(seed)
    if frieze.s != frieze.t:
        return None
    return frieze
