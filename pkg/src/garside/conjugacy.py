"""
Super and ultra summit sets, conjugacy decisions and conjugator recovery.

A summit representative is reached by cycling until the orbit closes (this
maximises inf), then decycling until the orbit closes (this minimises sup
without lowering inf).  For ultra summit sets one more round of cycling lands
on a cycling-periodic element.  The full set is the closure of one
representative under conjugation by simple elements, keeping only conjugates
that stay in the set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .core import (Element, cycling, decycling, element_text, from_factors,
                   identity, invert, multiply, simple_element)
from .errors import DomainError, ResourceError, StructureMismatch, VerificationError

__all__ = [
    "SummitSet", "Conjugate", "NotConjugate", "summit_representative",
    "summit_set", "uss_membership", "are_conjugate", "conjugate_by_simple",
    "MEMBER_CAP",
]

Kind = Literal["super", "ultra"]
MEMBER_CAP = 10**6


@dataclass(frozen=True)
class SummitSet:
    kind: str
    base: Element
    inf_s: int
    sup_s: int
    conjugators: dict = field(repr=False)

    @property
    def members(self) -> frozenset:
        return frozenset(self.conjugators)

    def __len__(self) -> int:
        return len(self.conjugators)

    def __contains__(self, h: Element) -> bool:
        return h in self.conjugators

    def sorted_members(self) -> list[Element]:
        return sorted(self.conjugators, key=element_text)

    def fingerprint(self) -> tuple[str, ...]:
        return tuple(sorted(map(element_text, self.conjugators)))

    def canonical(self) -> Element:
        return min(self.conjugators, key=element_text)


@dataclass(frozen=True)
class Conjugate:
    """``u⁻¹ a u = b``."""

    conjugator: Element


@dataclass(frozen=True)
class NotConjugate:
    fingerprint_a: tuple[str, ...]
    fingerprint_b: tuple[str, ...]


def conjugate_by_simple(h: Element, s) -> Element:
    """``s⁻¹ h s`` for a simple ``s``, in one left-weighting pass."""
    st = h.structure
    # s⁻¹ = Δ⁻¹ (Δ/s), and Δ⁻¹ x Δ^r = Δ^{r-1} τ^r(x)
    head = st.tau_power(st.left_complement(s), h.inf)
    return from_factors(st, h.inf - 1, (head,) + h.factors + (s,))


def _run_to_period(h: Element, u: Element, step, improved) -> tuple[Element, Element]:
    """Iterate ``step`` until an element repeats; restart bookkeeping on improvement."""
    seen: dict[Element, Element] = {}
    while h not in seen:
        seen[h] = u
        nxt, v = step(h)
        if improved(h, nxt):
            seen = {}
        h, u = nxt, multiply(u, v)
    return h, seen[h]


def summit_representative(a: Element, kind: Kind = "super") -> tuple[Element, Element]:
    """``(h, u)`` with ``h = u⁻¹ a u`` in the requested summit set."""
    if kind not in ("super", "ultra"):
        raise ValueError(f"kind must be 'super' or 'ultra', not {kind!r}")
    u = identity(a.structure)
    h, u = _run_to_period(a, u, cycling, lambda x, y: y.inf > x.inf)
    h, u = _run_to_period(h, u, decycling, lambda x, y: y.sup < x.sup)
    if kind == "ultra":
        h, u = _run_to_period(h, u, cycling, lambda x, y: False)
    return h, u


def _cycling_periodic(h: Element) -> bool:
    seen = set()
    x = h
    while x not in seen:
        seen.add(x)
        x = cycling(x)[0]
    return x == h


def uss_membership(h: Element) -> bool:
    """Whether a super summit element lies on a closed cycling orbit."""
    rep, _ = summit_representative(h, "super")
    if (h.inf, h.sup) != (rep.inf, rep.sup):
        raise DomainError(f"{element_text(h)} is not in its super summit set")
    return _cycling_periodic(h)


def summit_set(a: Element, kind: Kind = "super", cap: int = MEMBER_CAP) -> SummitSet:
    h0, u0 = summit_representative(a, kind)
    st = a.structure
    lo, hi = h0.inf, h0.sup
    simples = sorted((s for s in st.simples if s != st.one), key=st.sort_key)
    conjugators = {h0: u0}
    queue = [h0]
    for h in queue:
        uh = conjugators[h]
        for s in simples:
            c = conjugate_by_simple(h, s)
            if c.inf != lo or c.sup != hi or c in conjugators:
                continue
            if kind == "ultra" and not _cycling_periodic(c):
                continue
            conjugators[c] = multiply(uh, simple_element(st, s))
            queue.append(c)
            if len(conjugators) > cap:
                raise ResourceError(f"{kind} summit set exceeds {cap} members")
    return SummitSet(kind, a, lo, hi, conjugators)


def are_conjugate(a: Element, b: Element, kind: Kind = "ultra",
                  cap: int = MEMBER_CAP) -> Conjugate | NotConjugate:
    if a.structure is not b.structure:
        raise StructureMismatch("elements live in different structures")
    summit = summit_set(a, kind, cap)
    hb, ub = summit_representative(b, kind)
    if hb in summit:
        w = multiply(summit.conjugators[hb], invert(ub))
        if multiply(multiply(invert(w), a), w) != b:
            raise VerificationError("conjugator failed exact verification")
        return Conjugate(w)
    return NotConjugate(summit.fingerprint(), summit_set(b, kind, cap).fingerprint())
