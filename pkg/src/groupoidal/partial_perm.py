"""Partial permutations of {1, ..., n}.

A partial permutation is stored as a tuple of images, with 0 marking an
undefined point, so ``PartialPerm((2, 0))`` is the map 1 -> 2 on a
2-point set.  Composition follows the left-action convention:
``f * g`` applies ``g`` first.
"""

from __future__ import annotations

import json
from itertools import combinations, permutations

from .errors import ValidationError


class PartialPerm:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        if n == 0:
            raise ValidationError("degree must be positive")
        seen = set()
        for x in images:
            if x < 0 or x > n:
                raise ValidationError(f"image {x} out of range for degree {n}")
            if x:
                if x in seen:
                    raise ValidationError(f"image {x} repeated; map is not injective")
                seen.add(x)
        self.images = images

    @classmethod
    def from_dict(cls, degree, mapping):
        images = [0] * degree
        for k, v in mapping.items():
            images[k - 1] = v
        return cls(images)

    @classmethod
    def identity(cls, degree, domain=None):
        if domain is None:
            domain = range(1, degree + 1)
        return cls.from_dict(degree, {x: x for x in domain})

    @classmethod
    def parse(cls, text):
        """Parse the bracketed text form, e.g. ``"[2,0]"``."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"cannot parse partial permutation {text!r}: {exc}") from None
        if not isinstance(data, list):
            raise ValidationError(f"partial permutation must be a list, got {text!r}")
        return cls(data)

    @property
    def degree(self):
        return len(self.images)

    @property
    def domain(self):
        return frozenset(i + 1 for i, x in enumerate(self.images) if x)

    @property
    def image(self):
        return frozenset(x for x in self.images if x)

    @property
    def rank(self):
        return sum(1 for x in self.images if x)

    def __call__(self, x):
        """Image of ``x``, or ``None`` when undefined."""
        return self.images[x - 1] or None

    def __mul__(self, other):
        return compose(self, other)

    def inverse(self):
        images = [0] * self.degree
        for i, x in enumerate(self.images):
            if x:
                images[x - 1] = i + 1
        return PartialPerm(images)

    def is_idempotent(self):
        return all(x in (0, i + 1) for i, x in enumerate(self.images))

    def __eq__(self, other):
        return isinstance(other, PartialPerm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __lt__(self, other):
        return self.images < other.images

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"

    def __repr__(self):
        return f"PartialPerm({str(self)})"


def compose(f, g):
    """The map x -> f(g(x)), defined where both steps are."""
    if f.degree != g.degree:
        raise ValidationError(f"degree mismatch: {f.degree} vs {g.degree}")
    return PartialPerm([f.images[y - 1] if y else 0 for y in g.images])


def all_partial_perms(n):
    """Every injective partial map on n points, by direct enumeration."""
    points = range(1, n + 1)
    out = []
    for k in range(n + 1):
        for dom in combinations(points, k):
            for img in permutations(points, k):
                out.append(PartialPerm.from_dict(n, dict(zip(dom, img))))
    return sorted(out)
