"""
Semidirect products ``G ⋉ H`` of Garside structures, cartesian powers ``Gⁿ``
and the group ``G(n) = Z ⋉ Gⁿ`` in which δ cyclically shifts coordinates.

Simples of ``G ⋉ H`` are pairs ``(a, b)`` of simples.  The group law is
``(a1, b1)(a2, b2) = (a1 a2, b1^{a2} b2)`` where ``b^a`` is the right action of
``a`` on ``H⁺``; all lattice operations on pairs are synthesised from the
component lattices, so nothing of size ``|simples|²`` is ever tabulated.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Sequence

from .core import (Element, GarsideStructure, delta_power, identity, invert,
                   multiply, power, simple_element)
from .errors import InputError, ResourceError, StructureMismatch
from .instances import cyclic_structure

__all__ = [
    "ActionSpec", "TrivialAction", "TableAction", "ShiftAction",
    "SemidirectStructure", "PowerStructure", "GnStructure",
    "semidirect_structure", "power_structure", "gn_structure",
    "semidirect_make", "semidirect_parts", "power_make", "power_parts",
    "gn_make", "gn_parts", "act_element", "GN_SIMPLE_CAP",
]

GN_SIMPLE_CAP = 10**6


class ActionSpec:
    """Right action of the simples of G on the simples of H by automorphisms."""

    def act(self, b, a):
        """``b^a``."""
        raise NotImplementedError

    def act_inverse(self, b, a):
        """``b^{a⁻¹}``."""
        raise NotImplementedError


class TrivialAction(ActionSpec):
    def act(self, b, a):
        return b

    def act_inverse(self, b, a):
        return b


class TableAction(ActionSpec):
    """
    Action given by explicit permutations of H's simples, one per simple of G.

    The data is validated on construction: every permutation must fix 1 and
    Δ_H, commute with the lattice operations and complements of H, permute the
    atoms, and the assignment must be multiplicative on simple products of G.
    """

    def __init__(self, G: GarsideStructure, H: GarsideStructure, table: dict) -> None:
        self._fwd = {a: dict(perm) for a, perm in table.items()}
        self._inv = {a: {v: k for k, v in perm.items()} for a, perm in self._fwd.items()}
        self._validate(G, H)

    def act(self, b, a):
        return self._fwd[a][b]

    def act_inverse(self, b, a):
        return self._inv[a][b]

    def _validate(self, G, H) -> None:
        hs = list(H.simples)
        hset = set(hs)
        atoms = set(H.atoms)
        for a in G.simples:
            if a not in self._fwd:
                raise InputError(f"action undefined on simple {G.format_simple(a)!r}")
            perm = self._fwd[a]
            if set(perm) != hset or set(perm.values()) != hset:
                raise InputError("action is not a permutation of the simples")
            if perm[H.one] != H.one or perm[H.delta] != H.delta:
                raise InputError("action must fix 1 and Δ_H")
            if {perm[x] for x in atoms} != atoms:
                raise InputError("action must permute the atoms")
            for x in hs:
                if perm[H.right_complement(x)] != H.right_complement(perm[x]):
                    raise InputError("action does not commute with complements")
                for y in hs:
                    for op in (H.meet_l, H.join_l, H.meet_r, H.join_r):
                        if perm[op(x, y)] != op(perm[x], perm[y]):
                            raise InputError("action is not a lattice automorphism")
        for a1, a2 in itertools.product(list(G.simples), repeat=2):
            p = G.mul(a1, a2)
            if p is not None and any(self._fwd[p][x] != self._fwd[a2][self._fwd[a1][x]] for x in hs):
                raise InputError("action is not a homomorphism")


class ShiftAction(ActionSpec):
    """δ acting on ``Gⁿ`` by ``(g_1,…,g_n)^δ = (g_n, g_1, …, g_{n-1})``."""

    def act(self, b, a):
        return b[-1:] + b[:-1] if a else b

    def act_inverse(self, b, a):
        return b[1:] + b[:1] if a else b


class SemidirectStructure(GarsideStructure):
    """``G⁺ ⋉ H⁺`` with Garside element ``(Δ_G, Δ_H)``."""

    def __init__(self, G: GarsideStructure, H: GarsideStructure, action: ActionSpec) -> None:
        super().__init__()
        self.G, self.H, self.action = G, H, action
        self.name = f"({G.name})x({H.name})"
        self.one = (G.one, H.one)
        self.delta = (G.delta, H.delta)
        self.atoms = tuple((x, H.one) for x in G.atoms) + tuple((G.one, y) for y in H.atoms)

    @property
    def simples(self):
        return itertools.product(self.G.simples, self.H.simples)

    def simple_count(self) -> int:
        return self.G.simple_count() * self.H.simple_count()

    def is_simple(self, s) -> bool:
        return (isinstance(s, tuple) and len(s) == 2
                and self.G.is_simple(s[0]) and self.H.is_simple(s[1]))

    def meet_l(self, s, t):
        G, H, act = self.G, self.H, self.action
        a = G.meet_l(s[0], t[0])
        b = H.meet_l(act.act_inverse(s[1], s[0]), act.act_inverse(t[1], t[0]))
        return (a, act.act(b, a))

    def join_l(self, s, t):
        G, H, act = self.G, self.H, self.action
        a = G.join_l(s[0], t[0])
        b = H.join_l(act.act_inverse(s[1], s[0]), act.act_inverse(t[1], t[0]))
        return (a, act.act(b, a))

    def meet_r(self, s, t):
        return (self.G.meet_r(s[0], t[0]), self.H.meet_r(s[1], t[1]))

    def join_r(self, s, t):
        return (self.G.join_r(s[0], t[0]), self.H.join_r(s[1], t[1]))

    def right_complement(self, s):
        a = self.G.right_complement(s[0])
        return (a, self.H.right_complement(self.action.act(s[1], a)))

    def left_complement(self, s):
        a = self.G.left_complement(s[0])
        return (a, self.action.act_inverse(self.H.left_complement(s[1]), s[0]))

    def tau_simple(self, s):
        return (self.G.tau_simple(s[0]), self.H.tau_simple(self.action.act(s[1], self.G.delta)))

    def tau_inverse_simple(self, s):
        b = self.action.act_inverse(self.H.tau_inverse_simple(s[1]), self.G.delta)
        return (self.G.tau_inverse_simple(s[0]), b)

    def mul(self, s, t):
        a = self.G.mul(s[0], t[0])
        if a is None:
            return None
        b = self.H.mul(self.action.act(s[1], t[0]), t[1])
        return None if b is None else (a, b)

    def left_quotient(self, s, t):
        a = self.G.left_quotient(s[0], t[0])
        return (a, self.H.left_quotient(self.action.act(s[1], a), t[1]))

    def right_quotient(self, t, s):
        a = self.G.right_quotient(t[0], s[0])
        b = self.action.act_inverse(self.H.right_quotient(t[1], s[1]), s[0])
        return (a, b)

    def atom_norm_simple(self, s) -> int:
        return self.G.atom_norm_simple(s[0]) + self.H.atom_norm_simple(s[1])

    def format_simple(self, s) -> str:
        return f"({self.G.format_simple(s[0])}|{self.H.format_simple(s[1])})"

    format_proper = format_simple

    def sort_key(self, s):
        return (self.G.sort_key(s[0]), self.H.sort_key(s[1]))


class PowerStructure(GarsideStructure):
    """Cartesian power ``Gⁿ`` with componentwise operations."""

    def __init__(self, G: GarsideStructure, n: int) -> None:
        super().__init__()
        self.G, self.n = G, n
        self.name = f"({G.name})^{n}"
        self.one = (G.one,) * n
        self.delta = (G.delta,) * n
        self.atoms = tuple(self.one[:i] + (x,) + self.one[i + 1:]
                           for i in range(n) for x in G.atoms)

    @property
    def simples(self):
        return itertools.product(list(self.G.simples), repeat=self.n)

    def simple_count(self) -> int:
        return self.G.simple_count() ** self.n

    def is_simple(self, s) -> bool:
        return isinstance(s, tuple) and len(s) == self.n and all(map(self.G.is_simple, s))

    def _each(self, op, s, t=None):
        if t is None:
            return tuple(map(op, s))
        return tuple(map(op, s, t))

    def meet_l(self, s, t):
        return self._each(self.G.meet_l, s, t)

    def join_l(self, s, t):
        return self._each(self.G.join_l, s, t)

    def meet_r(self, s, t):
        return self._each(self.G.meet_r, s, t)

    def join_r(self, s, t):
        return self._each(self.G.join_r, s, t)

    def right_complement(self, s):
        return self._each(self.G.right_complement, s)

    def left_complement(self, s):
        return self._each(self.G.left_complement, s)

    def tau_simple(self, s):
        return self._each(self.G.tau_simple, s)

    def tau_inverse_simple(self, s):
        return self._each(self.G.tau_inverse_simple, s)

    def mul(self, s, t):
        out = self._each(self.G.mul, s, t)
        return None if None in out else out

    def left_quotient(self, s, t):
        return self._each(self.G.left_quotient, s, t)

    def right_quotient(self, t, s):
        return self._each(self.G.right_quotient, t, s)

    def atom_norm_simple(self, s) -> int:
        return sum(map(self.G.atom_norm_simple, s))

    def format_simple(self, s) -> str:
        return "(" + "|".join(map(self.G.format_simple, s)) + ")"

    format_proper = format_simple

    def sort_key(self, s):
        return tuple(map(self.G.sort_key, s))


class GnStructure(SemidirectStructure):
    """``G(n) = Z ⋉ Gⁿ``; a simple is ``(ε, (s_1,…,s_n))`` with ε ∈ {0, 1}."""

    def __init__(self, base: GarsideStructure, n: int) -> None:
        super().__init__(cyclic_structure(), PowerStructure(base, n), ShiftAction())
        self.base, self.n = base, n
        self.name = f"gn:{base.name}:{n}"

    @property
    def central_power(self) -> int:
        if self._central_power is None:
            shift = self.n if self.base.simple_count() > 1 else 1
            self._central_power = math.lcm(self.base.central_power, shift)
        return self._central_power

    def format_simple(self, s) -> str:
        inner = "|".join(f" {t} " if t else " " for t in map(self.base.format_simple, s[1]))
        return f"d^{s[0]} [{inner}]"

    format_proper = format_simple

    def sort_key(self, s):
        return (s[0], tuple(map(self.base.sort_key, s[1])))


def semidirect_structure(G: GarsideStructure, H: GarsideStructure,
                         action: ActionSpec | None = None) -> SemidirectStructure:
    return SemidirectStructure(G, H, action or TrivialAction())


@lru_cache(maxsize=None)
def power_structure(G: GarsideStructure, n: int) -> PowerStructure:
    if n < 1:
        raise InputError("power must be ≥ 1")
    return PowerStructure(G, n)


def gn_structure(G: GarsideStructure, n: int, cap: int = GN_SIMPLE_CAP) -> GnStructure:
    if n < 1:
        raise InputError(f"G(n) needs n ≥ 1, got {n}")
    if G.simple_count() ** n > cap:
        raise ResourceError(f"|simples|^n = {G.simple_count()}^{n} exceeds cap {cap}")
    return _gn(G, n)


@lru_cache(maxsize=None)
def _gn(G: GarsideStructure, n: int) -> GnStructure:
    return GnStructure(G, n)


# -- moving between product elements and their components -------------------


def act_element(b: Element, g: Element, action: ActionSpec) -> Element:
    """``b^g`` for ``b`` in H and ``g`` in G; automorphisms keep normal forms."""
    st = b.structure
    G = g.structure
    steps = ([(G.delta, g.inf < 0)] * abs(g.inf)) + [(s, False) for s in g.factors]
    factors = b.factors
    for s, inverse in steps:
        f = action.act_inverse if inverse else action.act
        factors = tuple(f(x, s) for x in factors)
    return Element(st, b.inf, factors)


def _embed(st: SemidirectStructure, x: Element, side: int) -> Element:
    """Image of an element of G (side 0) or H (side 1) in ``G ⋉ H``."""
    def simple(s):
        return (s, st.H.one) if side == 0 else (st.G.one, s)
    base = x.structure
    out = power(simple_element(st, simple(base.delta)), x.inf)
    for s in x.factors:
        out = multiply(out, simple_element(st, simple(s)))
    return out


def semidirect_make(st: SemidirectStructure, g: Element, h: Element) -> Element:
    """The element ``(g, h) = (g, 1)(1, h)``."""
    if g.structure is not st.G or h.structure is not st.H:
        raise StructureMismatch("components do not match the product factors")
    return multiply(_embed(st, g, 0), _embed(st, h, 1))


def semidirect_parts(alpha: Element) -> tuple[Element, Element]:
    st = alpha.structure
    if not isinstance(st, SemidirectStructure):
        raise StructureMismatch("not an element of a semidirect product")
    G, H = st.G, st.H
    g = delta_power(G, alpha.inf)
    h = delta_power(H, alpha.inf)
    for a, b in alpha.factors:
        ga = simple_element(G, a)
        h = multiply(act_element(h, ga, st.action), simple_element(H, b))
        g = multiply(g, ga)
    return g, h


def power_make(st: PowerStructure, comps: Sequence[Element]) -> Element:
    if len(comps) != st.n:
        raise InputError(f"expected {st.n} components, got {len(comps)}")
    out = identity(st)
    for i, x in enumerate(comps):
        if x.structure is not st.G:
            raise StructureMismatch("component over the wrong structure")
        def lift(s, i=i):
            return simple_element(st, st.one[:i] + (s,) + st.one[i + 1:])
        part = power(lift(st.G.delta), x.inf)
        for s in x.factors:
            part = multiply(part, lift(s))
        out = multiply(out, part)
    return out


def power_parts(x: Element) -> tuple[Element, ...]:
    st = x.structure
    comps = []
    for i in range(st.n):
        comps.append(multiply(delta_power(st.G, x.inf),
                              _from_simples(st.G, [f[i] for f in x.factors])))
    return tuple(comps)


def _from_simples(G: GarsideStructure, simples) -> Element:
    out = identity(G)
    for s in simples:
        out = multiply(out, simple_element(G, s))
    return out


def gn_make(st: GnStructure, k: int, comps: Sequence[Element]) -> Element:
    """The element ``δ^k(g_1, …, g_n)`` of ``G(n)``."""
    if not isinstance(st, GnStructure):
        raise StructureMismatch("gn_make needs a G(n) structure")
    if len(comps) != st.n:
        raise InputError(f"G({st.n}) elements need {st.n} components, got {len(comps)}")
    d = power(simple_element(st, (1, st.H.one)), k)
    return multiply(d, _embed(st, power_make(st.H, comps), 1))


def gn_parts(alpha: Element) -> tuple[int, tuple[Element, ...]]:
    """Inverse of :func:`gn_make`: ``(k, (g_1, …, g_n))``."""
    st = alpha.structure
    if not isinstance(st, GnStructure):
        raise StructureMismatch("gn_parts needs an element of G(n)")
    base, n = st.base, st.n
    k = alpha.inf
    comps = [delta_power(base, alpha.inf)] * n
    for eps, simples in alpha.factors:
        if eps:
            comps = comps[-1:] + comps[:-1]
        comps = [multiply(c, simple_element(base, s)) for c, s in zip(comps, simples)]
        k += eps
    return k, tuple(comps)
