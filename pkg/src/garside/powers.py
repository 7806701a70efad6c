"""
Stable inf/sup, the power inequalities they satisfy, certified translation
number intervals and enumeration of conjugacy classes of small translation
number.

Translation numbers are with respect to the simples and their inverses.  They
are only ever reported as exact rational intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .conjugacy import MEMBER_CAP, summit_representative, summit_set
from .core import Element, GarsideStructure, element_text, geodesic_length, power
from .errors import DomainError, InputError, ResourceError

__all__ = [
    "StableInvariants", "TranslationBounds", "stable_invariants", "stable_from_power",
    "translation_bounds", "compare_translation", "classes_below", "enumerate_ball",
    "ClassRecord", "ENUMERATION_CAP",
]

ENUMERATION_CAP = 200_000
Status = Literal["at_most", "greater", "undecided"]


@dataclass(frozen=True)
class StableInvariants:
    inf_s: int
    sup_s: int

    @property
    def len_s(self) -> int:
        return self.sup_s - self.inf_s


@dataclass(frozen=True)
class TranslationBounds:
    """``lower < t(g) ≤ upper``, read off the summit representative of ``g^N``."""

    lower: Fraction
    upper: Fraction
    witness_power: int
    # inf ≥ 0 or sup ≤ 0 at the witness: then t(g) ≥ (|h|-1)/N, so lower is strict
    lower_strict: bool = True


def stable_invariants(a: Element) -> StableInvariants:
    h, _ = summit_representative(a, "super")
    return StableInvariants(h.inf, h.sup)


def stable_from_power(n: int, power_invariants: StableInvariants) -> StableInvariants:
    """Recover ``(inf_s(g), sup_s(g))`` from those of ``g^n``."""
    if n < 1:
        raise InputError(f"power must be ≥ 1, got {n}")
    return StableInvariants(math.floor(Fraction(power_invariants.inf_s, n)),
                            math.ceil(Fraction(power_invariants.sup_s, n)))


def translation_bounds(a: Element, N: int) -> TranslationBounds:
    if N < 1:
        raise InputError(f"N must be ≥ 1, got {N}")
    h, _ = summit_representative(power(a, N), "super")
    length = geodesic_length(h)
    mixed = h.inf < 0 < h.sup
    return TranslationBounds(Fraction(length - 2, N), Fraction(length, N), N, not mixed)


def compare_translation(a: Element, r, N_max: int) -> Status:
    """
    Decide ``t(a) ≤ r`` or ``t(a) > r`` by doubling the witness power.

    ``r`` may be an int, a Fraction or a string like ``"3/2"``; floats are
    converted exactly.
    """
    if N_max < 1:
        raise InputError(f"N_max must be ≥ 1, got {N_max}")
    r = Fraction(r)
    N = 1
    while N <= N_max:
        tb = translation_bounds(a, N)
        if tb.upper <= r:
            return "at_most"
        if tb.lower > r or (tb.lower == r and tb.lower_strict):
            return "greater"
        N *= 2
    return "undecided"


def enumerate_ball(structure: GarsideStructure, radius: int, cap: int = ENUMERATION_CAP) -> list[Element]:
    """All normal forms of geodesic length ≤ ``radius``, in a fixed order."""
    proper = sorted((s for s in structure.simples if s not in (structure.one, structure.delta)),
                    key=structure.sort_key)
    # follows[s] = proper simples t with (s, t) left-weighted
    follows = {s: [t for t in proper if structure.simple_product(s, t) == (s, t)] for s in proper}
    seqs: list[list[tuple]] = [[()]]
    for k in range(1, 2 * radius + 1):
        if k == 1:
            layer = [(s,) for s in proper]
        else:
            layer = [f + (t,) for f in seqs[-1] for t in follows[f[-1]]]
        seqs.append(layer)
        if sum(map(len, seqs)) > cap:
            raise ResourceError(f"ball of radius {radius} exceeds {cap} normal forms")
    out = []
    for r in range(-radius, radius + 1):
        for k in range(0, 2 * radius + 1):
            probe = Element(structure, r, (None,) * k)
            if geodesic_length(probe) > radius:
                continue
            out.extend(Element(structure, r, f) for f in seqs[k])
            if len(out) > cap:
                raise ResourceError(f"ball of radius {radius} exceeds {cap} normal forms")
    return out


@dataclass(frozen=True)
class ClassRecord:
    representative: Element
    status: Status
    summit_size: int


def classes_below(structure: GarsideStructure, r, N_max: int,
                  cap: int = ENUMERATION_CAP, member_cap: int = MEMBER_CAP) -> list[ClassRecord]:
    """
    Conjugacy classes whose translation number may be ≤ ``r``.

    Every class with ``t ≤ r`` has a super summit element of geodesic length
    ≤ r + 2, so enumerating that ball and grouping by super summit set finds
    them all.  Classes certified ``greater`` are dropped.
    """
    r = Fraction(r)
    if r < 0:
        return []
    radius = math.floor(r + 2)
    owner: dict[Element, int] = {}
    classes = []
    for g in enumerate_ball(structure, radius, cap):
        if g in owner:
            continue
        h, _ = summit_representative(g, "super")
        if h not in owner:
            sss = summit_set(h, "super", member_cap)
            for m in sss.conjugators:
                owner[m] = len(classes)
            classes.append(sss)
        owner[g] = owner[h]
    out = []
    for sss in classes:
        rep = sss.canonical()
        status = compare_translation(rep, r, N_max)
        if status != "greater":
            out.append(ClassRecord(rep, status, len(sss)))
    out.sort(key=lambda c: element_text(c.representative))
    return out
