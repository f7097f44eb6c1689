"""Finite abelian groups given as products of cyclic factors, and their characters."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .cyclotomic import CycScalar, root_of_unity


class ParentMismatch(ValueError):
    pass


Exponents = tuple[int, ...]


class FiniteAbelianGroup:
    """Z_{d_1} x ... x Z_{d_k}.

    The group law is implemented on raw exponent tuples (``compose``,
    ``inverse``, ``power``) so that hot loops elsewhere can avoid wrapping;
    :class:`GroupElement` is the checked public face.
    """

    def __init__(self, cyclic_orders: Sequence[int]):
        orders = tuple(int(d) for d in cyclic_orders)
        if any(d < 1 for d in orders):
            raise ValueError(f"cyclic orders must be >= 1, got {orders}")
        self.cyclic_orders = orders

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteAbelianGroup) and other.cyclic_orders == self.cyclic_orders

    def __hash__(self) -> int:
        return hash(("FiniteAbelianGroup", self.cyclic_orders))

    def __repr__(self) -> str:
        if not self.cyclic_orders:
            return "FiniteAbelianGroup(())"
        return "x".join(f"Z{d}" for d in self.cyclic_orders)

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @cached_property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.cyclic_orders) if self.cyclic_orders else 1

    @cached_property
    def identity_exponents(self) -> Exponents:
        return (0,) * self.rank

    # -- raw exponent-tuple arithmetic --------------------------------------

    def compose(self, a: Exponents, b: Exponents) -> Exponents:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.cyclic_orders))

    def inverse(self, a: Exponents) -> Exponents:
        return tuple((-x) % d for x, d in zip(a, self.cyclic_orders))

    def power(self, a: Exponents, k: int) -> Exponents:
        return tuple((x * k) % d for x, d in zip(a, self.cyclic_orders))

    def element_order(self, a: Exponents) -> int:
        return math.lcm(1, *(d // math.gcd(d, x) for x, d in zip(a, self.cyclic_orders)))

    def normalize(self, exps: Sequence[int]) -> Exponents:
        if len(exps) != self.rank:
            raise ValueError(f"expected {self.rank} exponents, got {len(exps)}")
        return tuple(int(x) % d for x, d in zip(exps, self.cyclic_orders))

    def pair(self, weights: Exponents, exps: Exponents) -> int:
        """k such that the character with these weights sends exps to zeta_N^k."""
        N = self.exponent
        return sum(w * e * (N // d) for w, e, d in zip(weights, exps, self.cyclic_orders)) % N

    def exponent_tuples(self) -> Iterator[Exponents]:
        """All elements, lexicographic in the exponent tuple."""
        return itertools.product(*(range(d) for d in self.cyclic_orders))

    # -- wrapped elements -------------------------------------------------

    def __call__(self, *exps: int) -> GroupElement:
        if len(exps) == 1 and isinstance(exps[0], (tuple, list)):
            exps = tuple(exps[0])
        return GroupElement(self, self.normalize(exps))

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self, self.identity_exponents)

    def elements(self) -> list[GroupElement]:
        return [GroupElement(self, e) for e in self.exponent_tuples()]

    def generators(self) -> list[GroupElement]:
        gens = []
        for j in range(self.rank):
            e = [0] * self.rank
            e[j] = 1
            gens.append(self(tuple(e)))
        return gens

    def character(self, *weights: int) -> Character:
        if len(weights) == 1 and isinstance(weights[0], (tuple, list)):
            weights = tuple(weights[0])
        return Character(self, self.normalize(weights))

    def trivial_character(self) -> Character:
        return Character(self, self.identity_exponents)

    def characters(self) -> list[Character]:
        return [Character(self, w) for w in self.exponent_tuples()]


@dataclass(frozen=True)
class GroupElement:
    group: FiniteAbelianGroup
    exponents: Exponents

    def _check(self, other: GroupElement) -> None:
        if other.group != self.group:
            raise ParentMismatch(f"elements of {self.group} and {other.group}")

    def __mul__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return GroupElement(self.group, self.group.compose(self.exponents, other.exponents))

    def inverse(self) -> GroupElement:
        return GroupElement(self.group, self.group.inverse(self.exponents))

    def __pow__(self, k: int) -> GroupElement:
        return GroupElement(self.group, self.group.power(self.exponents, k))

    @property
    def order(self) -> int:
        return self.group.element_order(self.exponents)

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.exponents)) + ")"


@dataclass(frozen=True)
class Character:
    """A character of G, stored by its weights on the cyclic generators.

    The value on the j-th generator is zeta_{d_j}^{w_j}, seen inside mu_N with
    N the exponent of G.
    """

    group: FiniteAbelianGroup
    weights: Exponents

    def _check(self, other) -> None:
        if other.group != self.group:
            raise ParentMismatch(f"characters of {self.group} and {other.group}")

    def exponent_at(self, g: GroupElement | Exponents) -> int:
        if isinstance(g, GroupElement):
            self._check(g)
            g = g.exponents
        return self.group.pair(self.weights, g)

    def __call__(self, g: GroupElement | Exponents) -> CycScalar:
        return root_of_unity(self.group.exponent, self.exponent_at(g))

    def __mul__(self, other: Character) -> Character:
        self._check(other)
        return Character(self.group, self.group.compose(self.weights, other.weights))

    def __pow__(self, k: int) -> Character:
        return Character(self.group, self.group.power(self.weights, k))

    def inverse(self) -> Character:
        return Character(self.group, self.group.inverse(self.weights))

    def is_trivial(self) -> bool:
        return not any(self.weights)

    def kernel(self) -> list[GroupElement]:
        return [GroupElement(self.group, e) for e in self.group.exponent_tuples()
                if self.group.pair(self.weights, e) == 0]

    @property
    def image_order(self) -> int:
        # order in the dual group; equals |G| / |kernel|
        return self.group.element_order(self.weights)

    def __str__(self) -> str:
        return "chi(" + ",".join(map(str, self.weights)) + ")"


def char_eval(chi: Character, g: GroupElement) -> CycScalar:
    return chi(g)
