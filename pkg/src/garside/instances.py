"""
Concrete Garside structures: braid groups, torus-type groups and Z.

Braid simples are permutations in one-line notation.  A word in the Artin
generators acts on the list ``[0, ..., n-1]`` by swapping positions ``i, i+1``
for each ``σ_{i+1}``, so the product of simples ``st`` is the list
``[s[t[j]] for j]``.  Left divisibility of simples is the weak order generated
by right multiplication; down-sets and up-sets are stored as integer bitmasks
over the simples sorted by length, which turns every meet into a highest-bit
lookup and every join into a lowest-bit lookup.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .core import GarsideStructure
from .errors import InputError

__all__ = ["BraidStructure", "TorusStructure", "CyclicStructure",
           "braid_structure", "torus_structure", "cyclic_structure", "MAX_STRANDS"]

MAX_STRANDS = 6


def _compose(s: tuple, t: tuple) -> tuple:
    return tuple(s[j] for j in t)


def _inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def _length(p: tuple) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])


class BraidStructure(GarsideStructure):
    """Positive braid monoid on ``n`` strands with Δ the half twist."""

    def __init__(self, n: int) -> None:
        super().__init__()
        self.n = n
        self.name = f"braid:{n}"
        perms = sorted(itertools.permutations(range(n)), key=lambda p: (_length(p), p))
        self._perms = perms
        self._index = {p: i for i, p in enumerate(perms)}
        self._len = [_length(p) for p in perms]
        self.one = tuple(range(n))
        self.delta = tuple(reversed(range(n)))
        self.atoms = tuple(self._swap_positions(self.one, i) for i in range(n - 1))
        self._down_l, self._up_l = self._order_masks(self._swap_positions)
        self._down_r, self._up_r = self._order_masks(self._swap_values)

    @staticmethod
    def _swap_positions(p: tuple, i: int) -> tuple:
        q = list(p)
        q[i], q[i + 1] = q[i + 1], q[i]
        return tuple(q)

    @staticmethod
    def _swap_values(p: tuple, i: int) -> tuple:
        return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)

    def _order_masks(self, step):
        # step(p, i) is p·σ_{i+1} (positions) or σ_{i+1}·p (values)
        count = len(self._perms)
        down = [0] * count
        up = [0] * count
        for k, p in enumerate(self._perms):
            mask = 1 << k
            for i in range(self.n - 1):
                q = self._index[step(p, i)]
                if self._len[q] < self._len[k]:
                    mask |= down[q]
            down[k] = mask
        for k in range(count - 1, -1, -1):
            p = self._perms[k]
            mask = 1 << k
            for i in range(self.n - 1):
                q = self._index[step(p, i)]
                if self._len[q] > self._len[k]:
                    mask |= up[q]
            up[k] = mask
        return down, up

    @property
    def simples(self):
        return iter(self._perms)

    def simple_count(self) -> int:
        return len(self._perms)

    def is_simple(self, s) -> bool:
        return s in self._index

    def _meet(self, masks, s, t):
        m = masks[self._index[s]] & masks[self._index[t]]
        return self._perms[m.bit_length() - 1]

    def _join(self, masks, s, t):
        m = masks[self._index[s]] & masks[self._index[t]]
        return self._perms[(m & -m).bit_length() - 1]

    def meet_l(self, s, t):
        return self._meet(self._down_l, s, t)

    def join_l(self, s, t):
        return self._join(self._up_l, s, t)

    def meet_r(self, s, t):
        return self._meet(self._down_r, s, t)

    def join_r(self, s, t):
        return self._join(self._up_r, s, t)

    def leq_l(self, s, t) -> bool:
        return bool(self._down_l[self._index[t]] >> self._index[s] & 1)

    def leq_r(self, s, t) -> bool:
        return bool(self._down_r[self._index[t]] >> self._index[s] & 1)

    def right_complement(self, s):
        return _compose(_inverse(s), self.delta)

    def left_complement(self, s):
        return _compose(self.delta, _inverse(s))

    def tau_simple(self, s):
        return _compose(self.delta, _compose(s, self.delta))

    tau_inverse_simple = tau_simple

    def mul(self, s, t):
        p = _compose(s, t)
        if self._len[self._index[p]] == self._len[self._index[s]] + self._len[self._index[t]]:
            return p
        return None

    def left_quotient(self, s, t):
        return _compose(_inverse(s), t)

    def right_quotient(self, t, s):
        return _compose(t, _inverse(s))

    def atom_norm_simple(self, s) -> int:
        return self._len[self._index[s]]

    def format_proper(self, s) -> str:
        return "<" + ",".join(str(v + 1) for v in s) + ">"

    def sort_key(self, s):
        return (self._len[self._index[s]], s)

    def parse_simple(self, text: str):
        body = text.strip()
        if not (body.startswith("<") and body.endswith(">")):
            raise InputError(f"braid simple must look like <2,1,3>: {text!r}")
        try:
            p = tuple(int(v) - 1 for v in body[1:-1].split(","))
        except ValueError:
            raise InputError(f"bad permutation literal {text!r}") from None
        if sorted(p) != list(range(self.n)):
            raise InputError(f"{text!r} is not a permutation of 1..{self.n}")
        return p

    def generator(self, i: int):
        """σ_i for 1 ≤ i < n."""
        if not 1 <= i < self.n:
            raise InputError(f"braid:{self.n} has generators a1..a{self.n - 1}, not a{i}")
        return self.atoms[i - 1]


class TorusStructure(GarsideStructure):
    """``⟨x_1,…,x_m : x_1^{p_1} = ⋯ = x_m^{p_m}⟩`` with Δ = x_1^{p_1}."""

    def __init__(self, exponents: tuple[int, ...]) -> None:
        super().__init__()
        self.exponents = exponents
        self.name = "torus:" + ",".join(map(str, exponents))
        self.one = (0, 0)
        self.delta = (0, 1)
        self.atoms = tuple((i, 1) for i in range(1, len(exponents) + 1))
        self._simples = [self.one] + [(i, j) for i, p in enumerate(exponents, 1)
                                      for j in range(1, p)] + [self.delta]

    @property
    def simples(self):
        return iter(self._simples)

    def simple_count(self) -> int:
        return len(self._simples)

    def is_simple(self, s) -> bool:
        return s == self.one or s == self.delta or (
            isinstance(s, tuple) and len(s) == 2 and 1 <= s[0] <= len(self.exponents)
            and 0 < s[1] < self.exponents[s[0] - 1])

    def meet_l(self, s, t):
        if s == self.delta:
            return t
        if t == self.delta:
            return s
        if s == self.one or t == self.one or s[0] != t[0]:
            return self.one
        return (s[0], min(s[1], t[1]))

    meet_r = meet_l

    def join_l(self, s, t):
        if s == self.one:
            return t
        if t == self.one:
            return s
        if s == self.delta or t == self.delta or s[0] != t[0]:
            return self.delta
        return (s[0], max(s[1], t[1]))

    join_r = join_l

    def right_complement(self, s):
        if s == self.one:
            return self.delta
        if s == self.delta:
            return self.one
        return (s[0], self.exponents[s[0] - 1] - s[1])

    left_complement = right_complement

    def tau_simple(self, s):
        return s

    tau_inverse_simple = tau_simple

    def mul(self, s, t):
        if s == self.one:
            return t
        if t == self.one:
            return s
        if s == self.delta or t == self.delta or s[0] != t[0]:
            return None
        j = s[1] + t[1]
        p = self.exponents[s[0] - 1]
        if j < p:
            return (s[0], j)
        return self.delta if j == p else None

    def left_quotient(self, s, t):
        if s == self.one:
            return t
        if s == t:
            return self.one
        if t == self.delta:
            return self.right_complement(s)
        return (t[0], t[1] - s[1])

    def right_quotient(self, t, s):
        return self.left_quotient(s, t)

    def atom_norm_simple(self, s) -> int:
        if s == self.one:
            return 0
        if s == self.delta:
            return max(self.exponents)
        return s[1]

    def format_proper(self, s) -> str:
        return f"x{s[0]}^{s[1]}"

    def sort_key(self, s):
        return s

    def generator(self, i: int):
        if not 1 <= i <= len(self.exponents):
            raise InputError(f"{self.name} has generators x1..x{len(self.exponents)}, not x{i}")
        return (i, 1)


class CyclicStructure(GarsideStructure):
    """The infinite cyclic group ``⟨δ⟩`` with Δ = δ; simples are 0 and 1."""

    name = "z"

    def __init__(self) -> None:
        super().__init__()
        self.one = 0
        self.delta = 1
        self.atoms = (1,)

    @property
    def simples(self):
        return iter((0, 1))

    def simple_count(self) -> int:
        return 2

    def is_simple(self, s) -> bool:
        return s in (0, 1) and not isinstance(s, bool)

    def meet_l(self, s, t):
        return min(s, t)

    meet_r = meet_l

    def join_l(self, s, t):
        return max(s, t)

    join_r = join_l

    def right_complement(self, s):
        return 1 - s

    left_complement = right_complement

    def tau_simple(self, s):
        return s

    tau_inverse_simple = tau_simple

    def mul(self, s, t):
        return s + t if s + t <= 1 else None

    def left_quotient(self, s, t):
        return t - s

    def right_quotient(self, t, s):
        return t - s

    def atom_norm_simple(self, s) -> int:
        return s

    def format_proper(self, s) -> str:  # only 1 and Δ exist
        raise AssertionError("cyclic structure has no proper simples")

    def sort_key(self, s):
        return s


@lru_cache(maxsize=None)
def braid_structure(n: int, max_strands: int = MAX_STRANDS) -> BraidStructure:
    if not 2 <= n <= max_strands:
        raise InputError(f"strand count must be in [2, {max_strands}], got {n}")
    return BraidStructure(n)


def torus_structure(exponents) -> TorusStructure:
    exponents = tuple(int(p) for p in exponents)
    if not exponents or any(p < 2 for p in exponents):
        raise InputError(f"torus exponents must all be ≥ 2, got {exponents}")
    return _torus(exponents)


@lru_cache(maxsize=None)
def _torus(exponents: tuple[int, ...]) -> TorusStructure:
    return TorusStructure(exponents)


@lru_cache(maxsize=None)
def cyclic_structure() -> CyclicStructure:
    return CyclicStructure()
