import random
from fractions import Fraction

import pytest

from x3top.homology import InadmissibleShape, Shape


def random_generic_shape(rng: random.Random, lam_range: int | None = None) -> Shape:
    """One admissible generic shape, optionally with a prescribed
    lambda-range index (1..4)."""
    while True:
        den = rng.randint(5, 60)
        c2 = Fraction(rng.randint(1, den // 3), den)
        c1 = Fraction(rng.randint(1, (2 * den) // 3), den)
        if not (0 < c2 < c1 and c1 + c2 < 1):
            continue
        ell = rng.randint(0, 4)
        lden = rng.randint(2, 60)
        lam = Fraction(rng.randint(1, lden), lden)
        if ell == 0 and lam != 1:
            continue
        try:
            s = Shape(ell + lam, c1, c2)
        except InadmissibleShape:
            continue
        if s.lam != lam:
            continue
        if lam_range is None or s.lam_range() == lam_range:
            return s


@pytest.fixture
def rng():
    return random.Random(424242)
