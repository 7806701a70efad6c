"""
Generic Garside-group engine.

A Garside group is handled entirely through its finite lattice of simple
elements, described by a :class:`GarsideStructure`.  Group elements are
:class:`Element` values in left normal form ``Δ^r s_1 ⋯ s_k``, where every
``s_i`` is a simple element different from 1 and Δ and every pair
``(s_i, s_{i+1})`` is left-weighted.

Everything here is written against the structure interface only, so the same
code runs for braid groups, torus-type groups, the infinite cyclic group and
the semidirect products built in :mod:`garside.product`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import DomainError, InputError, ResourceError, StructureMismatch

Simple = Hashable

__all__ = [
    "GarsideStructure", "Element", "identity", "delta_power", "simple_element",
    "normalize", "from_factors", "multiply", "invert", "power",
    "meet_l", "join_l", "meet_r", "join_r", "left_divides", "right_divides",
    "tau_iter", "cycling", "decycling", "geodesic_length", "atom_norm",
    "lc_closure", "minimal_garside", "element_text",
]


class GarsideStructure:
    """
    Finite description of a Garside monoid through its simple elements.

    Subclasses provide the primitive operations on simples.  Products of
    simples (``mul``) and quotients are only ever requested when the result is
    known to be simple; ``mul`` returns ``None`` when it is not.

    The derived pair operations (left/right weighting) are memoised per
    instance, which is what makes summit-set searches affordable.
    """

    name: str = "garside"
    one: Simple
    delta: Simple
    atoms: tuple

    def __init__(self) -> None:
        self._lw_cache: dict = {}
        self._rw_cache: dict = {}
        self._central_power: int | None = None

    # -- primitives supplied by subclasses -------------------------------

    @property
    def simples(self) -> Iterable[Simple]:
        raise NotImplementedError

    def simple_count(self) -> int:
        return sum(1 for _ in self.simples)

    def is_simple(self, s) -> bool:
        raise NotImplementedError

    def meet_l(self, s, t):
        raise NotImplementedError

    def join_l(self, s, t):
        raise NotImplementedError

    def meet_r(self, s, t):
        raise NotImplementedError

    def join_r(self, s, t):
        raise NotImplementedError

    def right_complement(self, s):
        """The simple ``s\\Δ`` with ``s · (s\\Δ) = Δ``."""
        raise NotImplementedError

    def left_complement(self, s):
        """The simple ``Δ/s`` with ``(Δ/s) · s = Δ``."""
        raise NotImplementedError

    def tau_simple(self, s):
        """``Δ⁻¹ s Δ``."""
        raise NotImplementedError

    def tau_inverse_simple(self, s):
        raise NotImplementedError

    def mul(self, s, t):
        """``s·t`` if it is simple, otherwise ``None``."""
        raise NotImplementedError

    def left_quotient(self, s, t):
        """``s⁻¹t`` for ``s ≤_L t``."""
        raise NotImplementedError

    def right_quotient(self, t, s):
        """``t s⁻¹`` for ``s ≤_R t``."""
        raise NotImplementedError

    def atom_norm_simple(self, s) -> int:
        raise NotImplementedError

    def format_proper(self, s) -> str:
        raise NotImplementedError

    # -- derived ---------------------------------------------------------

    def format_simple(self, s) -> str:
        if s == self.one:
            return ""
        if s == self.delta:
            return "D"
        return self.format_proper(s)

    def sort_key(self, s):
        return self.format_simple(s)

    def leq_l(self, s, t) -> bool:
        return self.meet_l(s, t) == s

    def leq_r(self, s, t) -> bool:
        return self.meet_r(s, t) == s

    def tau_power(self, s, m: int):
        m %= self.central_power
        for _ in range(m):
            s = self.tau_simple(s)
        return s

    @property
    def central_power(self) -> int:
        """Smallest ``e ≥ 1`` with ``Δ^e`` central (τ^e fixes every atom)."""
        if self._central_power is None:
            current = list(self.atoms)
            e = 1
            while True:
                current = [self.tau_simple(a) for a in current]
                if current == list(self.atoms):
                    break
                e += 1
            self._central_power = e
        return self._central_power

    def simple_product(self, s, t):
        """Left-weighted pair ``(s', t')`` with ``s't' = st`` and ``s' = st ∧_L Δ``."""
        key = (s, t)
        hit = self._lw_cache.get(key)
        if hit is None:
            u = self.meet_l(self.right_complement(s), t)
            if u == self.one:
                hit = (s, t)
            else:
                hit = (self.mul(s, u), self.left_quotient(u, t))
            self._lw_cache[key] = hit
        return hit

    def right_weighted_product(self, s, t):
        """Right-weighted pair ``(s', t')`` with ``s't' = st`` and ``t' = st ∧_R Δ``."""
        key = (s, t)
        hit = self._rw_cache.get(key)
        if hit is None:
            u = self.meet_r(s, self.left_complement(t))
            if u == self.one:
                hit = (s, t)
            else:
                hit = (self.right_quotient(s, u), self.mul(u, t))
            self._rw_cache[key] = hit
        return hit

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"


@dataclass(frozen=True)
class Element:
    """A group element ``Δ^inf · factors`` in left normal form."""

    structure: GarsideStructure = field(repr=False)
    inf: int
    factors: tuple

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def __mul__(self, other: Element) -> Element:
        return multiply(self, other)

    def __pow__(self, n: int) -> Element:
        return power(self, n)

    def inverse(self) -> Element:
        return invert(self)

    def conjugate(self, u: Element) -> Element:
        """``u⁻¹ · self · u``."""
        return multiply(multiply(invert(u), self), u)

    def __str__(self) -> str:
        return element_text(self)


def element_text(a: Element) -> str:
    """Canonical text ``D^r . s1 . s2 ...``; the identity prints as ``D^0 .``."""
    st = a.structure
    parts = [f"D^{a.inf} ."]
    parts.extend(st.format_simple(s) for s in a.factors[:1])
    for s in a.factors[1:]:
        parts.append(".")
        parts.append(st.format_simple(s))
    return " ".join(parts)


def _same(a: Element, b: Element) -> GarsideStructure:
    if a.structure is not b.structure:
        raise StructureMismatch(f"{a.structure!r} vs {b.structure!r}")
    return a.structure


def identity(structure: GarsideStructure) -> Element:
    return Element(structure, 0, ())


def delta_power(structure: GarsideStructure, k: int) -> Element:
    return Element(structure, k, ())


def simple_element(structure: GarsideStructure, s) -> Element:
    if s == structure.one:
        return Element(structure, 0, ())
    if s == structure.delta:
        return Element(structure, 1, ())
    return Element(structure, 0, (s,))


def _left_weight(structure: GarsideStructure, factors: list, start: int = 0) -> tuple[int, tuple]:
    """
    Left-weight ``factors`` in place, assuming ``factors[:start+1]`` already is.

    Returns the number of leading Δ's and the remaining proper factors.
    """
    f = factors
    one = structure.one
    sp = structure.simple_product
    for i in range(max(start, 0), len(f) - 1):
        j = i
        while j >= 0:
            x, y = sp(f[j], f[j + 1])
            if x == f[j]:
                break
            f[j] = x
            f[j + 1] = y
            j -= 1
    lo, hi = 0, len(f)
    delta = structure.delta
    while lo < hi and f[lo] == delta:
        lo += 1
    while hi > lo and f[hi - 1] == one:
        hi -= 1
    return lo, tuple(f[lo:hi])


def from_factors(structure: GarsideStructure, r: int, factors: Sequence) -> Element:
    """Normal form of ``Δ^r · f_1 ⋯ f_m`` for arbitrary simples ``f_i``."""
    f = [s for s in factors if s != structure.one]
    shift, rest = _left_weight(structure, f)
    return Element(structure, r + shift, rest)


def normalize(structure: GarsideStructure, word: Iterable[tuple]) -> Element:
    """
    Normal form of a word given as ``(simple, ±1)`` letters.

    A negative letter ``s⁻¹`` is rewritten as ``Δ⁻¹ · (Δ/s)``; all the Δ⁻¹'s are
    then pushed to the front, twisting the factors they cross by τ⁻¹.
    """
    letters = []
    negs = 0
    for s, sign in word:
        if not structure.is_simple(s):
            raise InputError(f"not a simple of {structure.name}: {s!r}")
        if sign == 1:
            letters.append((s, negs))
        elif sign == -1:
            negs += 1
            letters.append((structure.left_complement(s), negs))
        else:
            raise InputError(f"letter sign must be ±1, got {sign!r}")
    factors = [structure.tau_power(s, -(negs - c)) for s, c in letters]
    return from_factors(structure, -negs, factors)


def multiply(a: Element, b: Element) -> Element:
    st = _same(a, b)
    if not a.factors:
        return Element(st, a.inf + b.inf, b.factors)
    left = [st.tau_power(s, b.inf) for s in a.factors] if b.inf % st.central_power else list(a.factors)
    shift, rest = _left_weight(st, left + list(b.factors), len(left) - 1)
    return Element(st, a.inf + b.inf + shift, rest)


def invert(a: Element) -> Element:
    st = a.structure
    word = [(s, -1) for s in reversed(a.factors)]
    return multiply(normalize(st, word), delta_power(st, -a.inf))


def power(a: Element, n: int) -> Element:
    """``a^n`` by repeated squaring; negative ``n`` inverts first."""
    if n < 0:
        a, n = invert(a), -n
    result = identity(a.structure)
    base = a
    while n:
        if n & 1:
            result = multiply(result, base)
        n >>= 1
        if n:
            base = multiply(base, base)
    return result


def _shift(a: Element, m: int) -> Element:
    return Element(a.structure, a.inf + m, a.factors)


def left_divides(a: Element, b: Element) -> bool:
    """``a ≤_L b``: ``a⁻¹b`` is positive."""
    return multiply(invert(a), b).inf >= 0


def right_divides(a: Element, b: Element) -> bool:
    """``a ≤_R b``: ``b a⁻¹`` is positive."""
    return multiply(b, invert(a)).inf >= 0


def _left_head(x: Element):
    st = x.structure
    if x.inf > 0:
        return st.delta
    return x.factors[0] if x.factors else st.one


def _right_head(x: Element):
    """``x ∧_R Δ`` for positive ``x``, via a right-weighted factorisation."""
    st = x.structure
    if x.inf > 0 and not x.factors:
        return st.delta
    f = [st.delta] * x.inf + list(x.factors)
    # sweep right to left so that the last factor becomes the right head
    for i in range(len(f) - 1, 0, -1):
        j = i
        while j < len(f):
            p, q = st.right_weighted_product(f[j - 1], f[j])
            if q == f[j]:
                break
            f[j - 1], f[j] = p, q
            j += 1
    return f[-1] if f else st.one


def _positive_meet_l(x: Element, y: Element) -> Element:
    st = x.structure
    out = []
    while True:
        s = st.meet_l(_left_head(x), _left_head(y))
        if s == st.one:
            break
        out.append(s)
        inv = invert(simple_element(st, s))
        x, y = multiply(inv, x), multiply(inv, y)
    return from_factors(st, 0, out)


def _positive_meet_r(x: Element, y: Element) -> Element:
    st = x.structure
    out = []
    while True:
        s = st.meet_r(_right_head(x), _right_head(y))
        if s == st.one:
            break
        out.append(s)
        inv = invert(simple_element(st, s))
        x, y = multiply(x, inv), multiply(y, inv)
    return from_factors(st, 0, out[::-1])


def meet_l(a: Element, b: Element) -> Element:
    """Greatest common left divisor in the group lattice ``(G, ≤_L)``."""
    st = _same(a, b)
    m = min(a.inf, b.inf)
    return _shift(_positive_meet_l(_shift(a, -m), _shift(b, -m)), m)


def meet_r(a: Element, b: Element) -> Element:
    st = _same(a, b)
    m = min(a.inf, b.inf)
    back = delta_power(st, m)
    fwd = delta_power(st, -m)
    g = _positive_meet_r(multiply(a, fwd), multiply(b, fwd))
    return multiply(g, back)


def join_l(a: Element, b: Element) -> Element:
    # z ≥_L a, b with z ≤_L Δ^M corresponds to z⁻¹Δ^M being a common right divisor
    st = _same(a, b)
    top = delta_power(st, max(a.sup, b.sup))
    z = meet_r(multiply(invert(a), top), multiply(invert(b), top))
    return multiply(top, invert(z))


def join_r(a: Element, b: Element) -> Element:
    st = _same(a, b)
    top = delta_power(st, max(a.sup, b.sup))
    z = meet_l(multiply(top, invert(a)), multiply(top, invert(b)))
    return multiply(invert(z), top)


def tau_iter(a: Element, m: int) -> Element:
    """``Δ^{-m} a Δ^m``."""
    st = a.structure
    if m % st.central_power == 0:
        return a
    return Element(st, a.inf, tuple(st.tau_power(s, m) for s in a.factors))


def cycling(a: Element) -> tuple[Element, Element]:
    """``(c(a), u)`` with ``c(a) = u⁻¹ a u``."""
    st = a.structure
    if not a.factors:
        return a, identity(st)
    u = st.tau_power(a.factors[0], -a.inf)
    return from_factors(st, a.inf, a.factors[1:] + (u,)), simple_element(st, u)


def decycling(a: Element) -> tuple[Element, Element]:
    """``(d(a), u)`` with ``d(a) = u⁻¹ a u`` and ``u = s_k⁻¹``."""
    st = a.structure
    if not a.factors:
        return a, identity(st)
    last = a.factors[-1]
    moved = st.tau_power(last, a.inf)
    return (from_factors(st, a.inf, (moved,) + a.factors[:-1]),
            invert(simple_element(st, last)))


def geodesic_length(a: Element) -> int:
    """Word length over simples and their inverses, from inf and sup."""
    if a.inf >= 0:
        return a.sup
    if a.sup <= 0:
        return -a.inf
    return a.canonical_length


def atom_norm(a: Element) -> int:
    if a.inf < 0:
        raise DomainError("atom_norm is defined on positive elements only")
    st = a.structure
    return a.inf * st.atom_norm_simple(st.delta) + sum(st.atom_norm_simple(s) for s in a.factors)


def _positive_divisors(a: Element, side: str) -> set[Element]:
    st = a.structure
    atoms = [simple_element(st, x) for x in st.atoms]
    test = left_divides if side == "l" else right_divides
    seen = {identity(st)}
    frontier = [identity(st)]
    while frontier:
        nxt = []
        for d in frontier:
            for x in atoms:
                e = multiply(d, x) if side == "l" else multiply(x, d)
                if e not in seen and test(e, a):
                    seen.add(e)
                    nxt.append(e)
        frontier = nxt
    return seen


def lc_closure(structure: GarsideStructure, seed: Iterable[Element], cap: int = 100_000) -> set[Element]:
    """
    Smallest set containing ``seed`` that is closed under the four lattice
    operations, both complements and taking left/right divisors.
    """
    closed: list[Element] = []
    members: set[Element] = set()
    work = []

    def add(x: Element) -> None:
        if x not in members:
            if x.inf < 0:
                raise DomainError("lc_closure works on positive elements")
            members.add(x)
            work.append(x)
            if len(members) > cap:
                raise ResourceError(f"lc_closure exceeded {cap} elements")

    for x in seed:
        if x.structure is not structure:
            raise StructureMismatch("seed element over a different structure")
        if x.inf < 0:
            raise DomainError("lc_closure seeds must be positive")
        add(x)
    while work:
        x = work.pop()
        for d in _positive_divisors(x, "l") | _positive_divisors(x, "r"):
            add(d)
        closed.append(x)
        for y in list(closed):
            jl = join_l(x, y)
            jr = join_r(x, y)
            for z in (meet_l(x, y), meet_r(x, y), jl, jr,
                      multiply(invert(x), jl), multiply(invert(y), jl),
                      multiply(jr, invert(x)), multiply(jr, invert(y))):
                add(z)
    return members


def minimal_garside(structure: GarsideStructure, cap: int = 100_000) -> Element:
    """Right lcm of the LC-closure of the atoms."""
    closure = lc_closure(structure, [simple_element(structure, x) for x in structure.atoms], cap)
    result = identity(structure)
    for x in sorted(closure, key=element_text):
        result = join_r(result, x)
    return result
