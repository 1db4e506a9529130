"""Permutations of {1..n}, Bruhat order, and positroids from Bruhat intervals.

The Bruhat order is computed straight from the sorted-prefix criterion:
u <= v iff {u(1..j)} <= {v(1..j)} componentwise for every j.  Interval
enumeration filters the whole group, which is the right trade at desk
scale (n <= 7); per-n tables of sorted prefixes and comparability
bitmasks are cached so sweeps stay fast.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import BudgetError, ParameterError
from .subsets import KSubset, SubsetFamily

_ENUMERATION_MAX_N = 7
_BRUTEFORCE_MAX_N = 6


class Permutation:
    """A permutation of {1..n} stored in one-line notation: w(i) = images[i-1]."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(x) for x in images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ParameterError(f"{imgs} is not a permutation of 1..{n}")
        object.__setattr__(self, "images", imgs)
        object.__setattr__(self, "_hash", hash(imgs))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise ParameterError(f"position {i} out of range 1..{self.n}")
        return self.images[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(inv)


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def long_element(n: int) -> Permutation:
    """w0: i maps to n+1-i."""
    return Permutation(range(n, 0, -1))


def long_cycle(n: int) -> Permutation:
    """The n-cycle sending i to i+1 and n to 1."""
    return Permutation(tuple(range(2, n + 1)) + (1,))


def simple_transposition(t: int, n: int) -> Permutation:
    """s_t: swaps t and t+1, fixes everything else."""
    if not 1 <= t <= n - 1:
        raise ParameterError(f"t={t} out of range 1..{n - 1}")
    imgs = list(range(1, n + 1))
    imgs[t - 1], imgs[t] = imgs[t], imgs[t - 1]
    return Permutation(imgs)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u . v)(i) = u(v(i)); right-multiplying by s_t swaps positions t, t+1."""
    if u.n != v.n:
        raise ParameterError(f"size mismatch: {u.n} vs {v.n}")
    return Permutation(u.images[x - 1] for x in v.images)


def pi_k(w: Permutation, k: int) -> KSubset:
    """The set of the first k values of w, sorted."""
    if not 0 < k <= w.n:
        raise ParameterError(f"k={k} out of range 1..{w.n}")
    return KSubset(sorted(w.images[:k]), w.n)


@lru_cache(maxsize=None)
def _prefix_flat(images: tuple[int, ...]) -> tuple[int, ...]:
    # Concatenated sorted prefixes for j = 1..n-1 (j = n is constant).
    n = len(images)
    out: list[int] = []
    for j in range(1, n):
        out.extend(sorted(images[:j]))
    return tuple(out)


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Sorted-prefix criterion for the Bruhat order."""
    if u.n != v.n:
        raise ParameterError(f"size mismatch: {u.n} vs {v.n}")
    fu = _prefix_flat(u.images)
    fv = _prefix_flat(v.images)
    return all(a <= b for a, b in zip(fu, fv))


class _SymGroup:
    """Per-n tables: the full group, prefix flats, and lazy order bitmasks."""

    __slots__ = ("n", "perms", "index", "flats", "_up", "_down")

    def __init__(self, n: int):
        self.n = n
        self.perms = tuple(itertools.permutations(range(1, n + 1)))
        self.index = {p: i for i, p in enumerate(self.perms)}
        self.flats = tuple(_prefix_flat(p) for p in self.perms)
        self._up: dict[int, int] = {}
        self._down: dict[int, int] = {}

    def up_mask(self, idx: int) -> int:
        """Bitmask of {w : perms[idx] <= w}."""
        mask = self._up.get(idx)
        if mask is None:
            fu = self.flats[idx]
            mask = 0
            for j, fw in enumerate(self.flats):
                if all(a <= b for a, b in zip(fu, fw)):
                    mask |= 1 << j
            self._up[idx] = mask
        return mask

    def down_mask(self, idx: int) -> int:
        """Bitmask of {w : w <= perms[idx]}."""
        mask = self._down.get(idx)
        if mask is None:
            fv = self.flats[idx]
            mask = 0
            for j, fw in enumerate(self.flats):
                if all(a <= b for a, b in zip(fw, fv)):
                    mask |= 1 << j
            self._down[idx] = mask
        return mask


@lru_cache(maxsize=None)
def _group(n: int) -> _SymGroup:
    if n > _ENUMERATION_MAX_N:
        raise BudgetError(f"full-group enumeration is guarded at n <= {_ENUMERATION_MAX_N}")
    return _SymGroup(n)


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _interval_mask(u: Permutation, v: Permutation) -> tuple[_SymGroup, int]:
    if u.n != v.n:
        raise ParameterError(f"size mismatch: {u.n} vs {v.n}")
    g = _group(u.n)
    return g, g.up_mask(g.index[u.images]) & g.down_mask(g.index[v.images])


def bruhat_interval(u: Permutation, v: Permutation) -> frozenset[Permutation]:
    """All w with u <= w <= v; empty when u is not below v."""
    g, mask = _interval_mask(u, v)
    return frozenset(Permutation(g.perms[i]) for i in _iter_bits(mask))


def grassmannian_perm(alpha: KSubset) -> Permutation:
    """The unique permutation increasing on 1..k and on k+1..n whose first k values are alpha."""
    rest = tuple(x for x in range(1, alpha.n + 1) if x not in alpha.elements)
    return Permutation(alpha.elements + rest)


def positroid_from_interval(u: Permutation, v: Permutation, k: int) -> SubsetFamily:
    """The projected family {first-k-values(w) : u <= w <= v}."""
    if not 0 < k <= u.n:
        raise ParameterError(f"k={k} out of range 1..{u.n}")
    g, mask = _interval_mask(u, v)
    members = {KSubset(sorted(g.perms[i][:k]), u.n) for i in _iter_bits(mask)}
    return SubsetFamily(members, k, u.n)


def verify_positroidset(beta: KSubset, gamma: KSubset, t: int) -> bool:
    """Check that the window family of (beta, gamma, t) equals the Bruhat projection.

    The projection interval runs from w_beta * s_t up to w_gamma; an empty
    window family must coincide with an empty interval.
    """
    from .subsets import p_set

    fam = p_set(beta, gamma, t)
    u = compose(grassmannian_perm(beta), simple_transposition(t, beta.n))
    v = grassmannian_perm(gamma)
    projected = positroid_from_interval(u, v, beta.k)
    if len(fam) == 0:
        return len(projected) == 0 and not bruhat_leq(u, v)
    return fam == projected


def is_positroid_bruteforce(family: SubsetFamily, k: int, n: int) -> bool:
    """Exhaustively search for a Bruhat interval projecting onto ``family``.

    Test-oracle quality only: iterates over candidate pairs (u, v) with
    u <= v, pruned by the order-preservation of the projection.  Guarded
    to small n.
    """
    if n > _BRUTEFORCE_MAX_N:
        raise BudgetError(f"exhaustive positroid search is guarded at n <= {_BRUTEFORCE_MAX_N}")
    if (family.k, family.n) != (k, n):
        raise ParameterError("family parameters disagree with (k, n)")
    if len(family) == 0:
        return False
    g = _group(n)
    members = {m.elements for m in family.members}
    lo = tuple(min(m[i] for m in members) for i in range(k))
    hi = tuple(max(m[i] for m in members) for i in range(k))
    pik = [tuple(sorted(p[:k])) for p in g.perms]
    # u projects into the family and below every member; dually for v.
    u_candidates = [
        i for i, s in enumerate(pik) if s in members and all(a <= b for a, b in zip(s, lo))
    ]
    v_candidates = [
        i for i, s in enumerate(pik) if s in members and all(a >= b for a, b in zip(s, hi))
    ]
    for iu in u_candidates:
        up = g.up_mask(iu)
        for iv in v_candidates:
            if not (up >> iv) & 1:
                continue
            seen = set()
            ok = True
            for w in _iter_bits(up & g.down_mask(iv)):
                s = pik[w]
                if s not in members:
                    ok = False
                    break
                seen.add(s)
            if ok and len(seen) == len(members):
                return True
    return False
