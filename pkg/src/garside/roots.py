"""
n-th roots through conjugacy in ``G(n)``.

``g`` has an n-th root iff ``δ(g, 1, …, 1)`` is conjugate in ``G(n)`` to some
``δ(h, …, h)``, and the ultra summit set of the former then contains such a
diagonal element.  From the conjugator ``γ = δ^k(x_1, …, x_n)`` with
``δ(g, 1, …) = γ⁻¹ δ(h, …, h) γ`` the root is ``x_n⁻¹ h x_n``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conjugacy import MEMBER_CAP, summit_representative, summit_set
from .core import Element, delta_power, identity, invert, multiply, power
from .errors import InputError, VerificationError
from .product import GN_SIMPLE_CAP, gn_make, gn_parts, gn_structure

__all__ = ["Root", "NoRoot", "nth_root", "root_degrees", "diagonal_part"]


@dataclass(frozen=True)
class Root:
    x: Element
    diagonal: Element
    conjugator: Element


@dataclass(frozen=True)
class NoRoot:
    uss_size: int


def diagonal_part(beta: Element) -> Element | None:
    """``h`` if ``beta = δ(h, …, h)``, else None."""
    k, comps = gn_parts(beta)
    if k != 1 or any(c != comps[0] for c in comps[1:]):
        return None
    return comps[0]


def nth_root(g: Element, n: int, cap: int = MEMBER_CAP,
             gn_cap: int = GN_SIMPLE_CAP) -> Root | NoRoot:
    if n < 2:
        raise InputError(f"root degree must be ≥ 2, got {n}")
    G = g.structure
    Gn = gn_structure(G, n, gn_cap)
    alpha = gn_make(Gn, 1, (g,) + (identity(G),) * (n - 1))
    uss = summit_set(alpha, "ultra", cap)
    for beta in uss.sorted_members():
        h = diagonal_part(beta)
        if h is None:
            continue
        gamma = invert(uss.conjugators[beta])
        xn = gn_parts(gamma)[1][-1]
        x = multiply(multiply(invert(xn), h), xn)
        if power(x, n) != g:
            raise VerificationError(f"recovered root fails x^{n} = g")
        return Root(x, beta, gamma)
    return NoRoot(len(uss))


def root_degrees(g: Element, n_max: int = 10, cap: int = MEMBER_CAP,
                 gn_cap: int = GN_SIMPLE_CAP) -> set[int]:
    """Degrees ``2 ≤ n ≤ n_max`` for which ``g`` has an n-th root."""
    if n_max < 2:
        raise InputError(f"n_max must be ≥ 2, got {n_max}")
    h, _ = summit_representative(g, "super")
    out = set()
    for n in range(2, n_max + 1):
        # conjugates of Δ^m have the obvious root when n divides m
        if not h.factors and h.inf % n == 0:
            assert power(delta_power(g.structure, h.inf // n), n) == h
            out.add(n)
        elif isinstance(nth_root(g, n, cap, gn_cap), Root):
            out.add(n)
    return out
