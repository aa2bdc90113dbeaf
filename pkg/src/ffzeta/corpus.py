"""Deterministic matrix corpus shared by tests and regression scripts.

Six small fields, 36 matrices each.  Dimensions cycle through 1..4 and
entry degrees through 1 and 2, so the corpus exercises every field with a
spread of sizes while staying cheap; singular draws are rejected and
redrawn from the same stream, keeping the corpus a pure function of the
seed.  The tiny instances (q <= 3, d <= 2, degree <= 1) double as
bruteforce-checkable fixed-point cases.
"""

from __future__ import annotations

import random

from .gf import make_field
from .polycore import Poly, polyring
from .polymat import det

CORPUS_SEED = 412870
FIELDS = ((2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2))
PER_FIELD = 36


def corpus():
    """List of (field, matrix) pairs, 216 in all, det != 0 throughout."""
    rng = random.Random(CORPUS_SEED)
    out = []
    for p, e in FIELDS:
        field = make_field(p, e)
        ring = polyring(field)
        for i in range(PER_FIELD):
            d = 1 + i % 4
            maxdeg = 1 if i % 3 == 0 else 2
            while True:
                A = [
                    [
                        Poly(field, [rng.randrange(field.q) for _ in range(maxdeg + 1)])
                        for _ in range(d)
                    ]
                    for _ in range(d)
                ]
                if det(ring, A):
                    break
            out.append((field, A))
    return out


def is_bruteforce_sized(field, A) -> bool:
    return (
        field.q <= 3
        and len(A) <= 2
        and all(entry.degree <= 1 for row in A for entry in row)
    )
