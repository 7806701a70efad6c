"""
Deliberately naive validators.

Everything here goes through ``normalize``, ``multiply`` and ``invert`` only,
never through the lattice operations or summit machinery it is used to check.
``None`` means "exceeded" / "unknown".
"""

from __future__ import annotations

from .core import Element, GarsideStructure, identity, invert, multiply, normalize
from .errors import DomainError, InputError

__all__ = ["bfs_ball", "bfs_word_length", "brute_left_divisors", "brute_conjugacy"]

MAX_DIVISOR_NORM = 8
MAX_CONJUGATOR_LENGTH = 6


def _letters(structure: GarsideStructure) -> list[Element]:
    out = []
    for s in structure.simples:
        if s == structure.one:
            continue
        for sign in (1, -1):
            out.append(normalize(structure, [(s, sign)]))
    return out


def bfs_ball(structure: GarsideStructure, radius: int) -> dict[Element, int]:
    """Distance from 1 of every element within ``radius`` in the simples-and-inverses metric."""
    if radius < 0:
        raise InputError("radius must be ≥ 0")
    letters = _letters(structure)
    frontier = [identity(structure)]
    dist = {frontier[0]: 0}
    for d in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for s in letters:
                y = multiply(x, s)
                if y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


def bfs_word_length(structure: GarsideStructure, a: Element, radius: int) -> int | None:
    """Shortest word in simples and their inverses spelling ``a``, or None past ``radius``."""
    return bfs_ball(structure, radius).get(a)


def _positive_words(structure: GarsideStructure, length: int) -> set[Element]:
    """Every product of at most ``length`` atoms."""
    atoms = [normalize(structure, [(x, 1)]) for x in structure.atoms]
    layer = {identity(structure)}
    out = set(layer)
    for _ in range(length):
        layer = {multiply(x, t) for x in layer for t in atoms}
        out |= layer
    return out


def _norm(a: Element) -> int:
    st = a.structure
    return a.inf * st.atom_norm_simple(st.delta) + sum(map(st.atom_norm_simple, a.factors))


def brute_left_divisors(a: Element) -> set[Element]:
    if a.inf < 0:
        raise DomainError("brute_left_divisors needs a positive element")
    norm = _norm(a)
    if norm > MAX_DIVISOR_NORM:
        raise DomainError(f"atom norm {norm} exceeds {MAX_DIVISOR_NORM}")
    return {p for p in _positive_words(a.structure, norm)
            if multiply(invert(p), a).inf >= 0}


def brute_conjugacy(a: Element, b: Element, L: int) -> bool | None:
    """True if ``u⁻¹ a u = b`` for an atom word ``u`` of length ≤ L, else None."""
    if not 0 <= L <= MAX_CONJUGATOR_LENGTH:
        raise InputError(f"L must be in [0, {MAX_CONJUGATOR_LENGTH}]")
    st = a.structure
    letters = [normalize(st, [(x, e)]) for x in st.atoms for e in (1, -1)]
    frontier = [identity(st)]
    seen = set(frontier)
    for d in range(L + 1):
        for u in frontier:
            if multiply(multiply(invert(u), a), u) == b:
                return True
        if d == L:
            break
        nxt = []
        for u in frontier:
            for s in letters:
                v = multiply(u, s)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return None
