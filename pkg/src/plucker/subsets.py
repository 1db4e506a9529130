"""k-element subsets of {1..n} under the componentwise partial order.

A sorted k-subset ``alpha`` is compared by ``alpha(i) <= alpha'(i)`` for
every position i.  On top of that poset this module builds intervals, the
covering relation, the mixed subsets ``delta(beta, gamma, t)``, the
families cut out by an integer window ``[beta(t+1), gamma(t)]``, cyclic
column shifts, and the boundary/divisor families used by the variety
checks.  Everything is 1-indexed to match the usual column numbering of a
k x n matrix.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import EmptyIntervalError, ParameterError, ParseError


class KSubset:
    """An immutable, strictly increasing k-subset of {1..n}.

    ``subset(i)`` (call syntax) returns the i-th smallest element,
    1-indexed.  Comparison operators give the *lexicographic* total order,
    used only for deterministic sorting; the componentwise poset order is
    :func:`subset_leq`.
    """

    __slots__ = ("elements", "n", "_hash")

    def __init__(self, elements: Iterable[int], n: int):
        elems = tuple(int(e) for e in elements)
        if not elems:
            raise ParameterError("a k-subset must be nonempty")
        if any(b <= a for a, b in zip(elems, elems[1:])):
            raise ParameterError(f"elements must be strictly increasing, got {elems}")
        if elems[0] < 1 or elems[-1] > n:
            raise ParameterError(f"elements {elems} out of range 1..{n}")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "_hash", hash((elems, n)))

    @property
    def k(self) -> int:
        return len(self.elements)

    def __call__(self, i: int) -> int:
        """The i-th smallest element, for i in 1..k."""
        if not 1 <= i <= self.k:
            raise ParameterError(f"position {i} out of range 1..{self.k}")
        return self.elements[i - 1]

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, KSubset)
            and self.elements == other.elements
            and self.n == other.n
        )

    def __hash__(self) -> int:
        return self._hash

    # Lexicographic, *not* the poset order.
    def __lt__(self, other: "KSubset") -> bool:
        return self.elements < other.elements

    def __le__(self, other: "KSubset") -> bool:
        return self.elements <= other.elements

    def __setattr__(self, name, value):
        raise AttributeError("KSubset is immutable")

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements) + "}"

    def __repr__(self) -> str:
        return f"KSubset({list(self.elements)}, n={self.n})"

    def replace(self, out_el: int, in_el: int) -> "KSubset":
        """The subset with ``out_el`` removed and ``in_el`` inserted."""
        if out_el not in self.elements:
            raise ParameterError(f"{out_el} not in {self}")
        if in_el in self.elements and in_el != out_el:
            raise ParameterError(f"{in_el} already in {self}")
        new = sorted(e for e in self.elements if e != out_el)
        new.append(in_el)
        new.sort()
        return KSubset(new, self.n)

    def complement(self) -> "KSubset":
        others = [x for x in range(1, self.n + 1) if x not in self.elements]
        return KSubset(others, self.n)


def parse_subset(text: str, n: int) -> KSubset:
    """Parse ``{1,3,4}`` (braces optional) into a KSubset of {1..n}."""
    raw = text.strip()
    if raw.startswith("{") and raw.endswith("}"):
        raw = raw[1:-1]
    parts = [p.strip() for p in raw.split(",") if p.strip()]
    if not parts:
        raise ParseError(f"empty subset literal {text!r}")
    try:
        elems = sorted(int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(f"bad subset literal {text!r}: {exc}") from None
    if len(set(elems)) != len(elems):
        raise ParseError(f"repeated element in subset literal {text!r}")
    return KSubset(elems, n)


class SubsetFamily:
    """A finite set of KSubsets sharing the same (k, n)."""

    __slots__ = ("members", "k", "n", "_hash")

    def __init__(self, members: Iterable[KSubset], k: int | None = None, n: int | None = None):
        mem = frozenset(members)
        if mem:
            first = next(iter(mem))
            k = first.k if k is None else k
            n = first.n if n is None else n
            for m in mem:
                if m.k != k or m.n != n:
                    raise ParameterError("family members must share (k, n)")
        elif k is None or n is None:
            raise ParameterError("an empty family needs explicit (k, n)")
        object.__setattr__(self, "members", mem)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_hash", hash((mem, k, n)))

    def __contains__(self, alpha: KSubset) -> bool:
        return alpha in self.members

    def __iter__(self) -> Iterator[KSubset]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubsetFamily)
            and self.members == other.members
            and (self.k, self.n) == (other.k, other.n)
        )

    def __hash__(self) -> int:
        return self._hash

    def __setattr__(self, name, value):
        raise AttributeError("SubsetFamily is immutable")

    def __repr__(self) -> str:
        return "SubsetFamily({" + ", ".join(str(m) for m in self) + "}" + f", k={self.k}, n={self.n})"

    def _check_same_shape(self, other: "SubsetFamily"):
        if (self.k, self.n) != (other.k, other.n):
            raise ParameterError("families must share (k, n)")

    def __and__(self, other: "SubsetFamily") -> "SubsetFamily":
        self._check_same_shape(other)
        return SubsetFamily(self.members & other.members, self.k, self.n)

    def __or__(self, other: "SubsetFamily") -> "SubsetFamily":
        self._check_same_shape(other)
        return SubsetFamily(self.members | other.members, self.k, self.n)

    def __sub__(self, other: "SubsetFamily") -> "SubsetFamily":
        self._check_same_shape(other)
        return SubsetFamily(self.members - other.members, self.k, self.n)


class SubsetInterval:
    """The interval [lo, hi] in the componentwise order."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: KSubset, hi: KSubset):
        if not subset_leq(lo, hi):
            raise EmptyIntervalError(f"{lo} is not componentwise <= {hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __contains__(self, alpha: KSubset) -> bool:
        return subset_leq(self.lo, alpha) and subset_leq(alpha, self.hi)

    def __eq__(self, other) -> bool:
        return isinstance(other, SubsetInterval) and (self.lo, self.hi) == (other.lo, other.hi)

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __setattr__(self, name, value):
        raise AttributeError("SubsetInterval is immutable")

    def __repr__(self) -> str:
        return f"SubsetInterval({self.lo}, {self.hi})"

    def family(self) -> SubsetFamily:
        return interval(self.lo, self.hi)


@lru_cache(maxsize=None)
def enumerate_subsets(k: int, n: int) -> tuple[KSubset, ...]:
    """All k-subsets of {1..n} in lexicographic order."""
    if k <= 0 or k > n:
        raise ParameterError(f"need 0 < k <= n, got k={k}, n={n}")
    return tuple(KSubset(c, n) for c in itertools.combinations(range(1, n + 1), k))


def _check_pair(a: KSubset, b: KSubset):
    if (a.k, a.n) != (b.k, b.n):
        raise ParameterError(f"mismatched parameters: {a!r} vs {b!r}")


def subset_leq(a: KSubset, b: KSubset) -> bool:
    """Componentwise order: a(i) <= b(i) for every i."""
    _check_pair(a, b)
    return all(x <= y for x, y in zip(a.elements, b.elements))


def interval(beta: KSubset, gamma: KSubset) -> SubsetFamily:
    """All alpha with beta <= alpha <= gamma; an error if beta is not <= gamma."""
    if not subset_leq(beta, gamma):
        raise EmptyIntervalError(f"{beta} is not componentwise <= {gamma}")
    members = [
        a
        for a in enumerate_subsets(beta.k, beta.n)
        if subset_leq(beta, a) and subset_leq(a, gamma)
    ]
    return SubsetFamily(members, beta.k, beta.n)


def covers(a: KSubset, b: KSubset) -> bool:
    """True iff b covers a: b equals a with a single element bumped by one."""
    _check_pair(a, b)
    bumped = 0
    for x, y in zip(a.elements, b.elements):
        if x == y:
            continue
        if y == x + 1:
            bumped += 1
        else:
            return False
    return bumped == 1


def upper_covers(a: KSubset) -> tuple[KSubset, ...]:
    """All b with a covered by b, in lexicographic order."""
    out = []
    elems = a.elements
    for i, x in enumerate(elems):
        nxt = x + 1
        if nxt > a.n:
            continue
        if i + 1 < len(elems) and elems[i + 1] == nxt:
            continue
        out.append(KSubset(elems[:i] + (nxt,) + elems[i + 1 :], a.n))
    return tuple(sorted(out))


def lower_covers(a: KSubset) -> tuple[KSubset, ...]:
    """All b covered by a."""
    out = []
    elems = a.elements
    for i, x in enumerate(elems):
        prv = x - 1
        if prv < 1:
            continue
        if i > 0 and elems[i - 1] == prv:
            continue
        out.append(KSubset(elems[:i] + (prv,) + elems[i + 1 :], a.n))
    return tuple(sorted(out))


def delta(beta: KSubset, gamma: KSubset, t: int) -> KSubset:
    """The mixed subset {beta(1..t)} union {gamma(t+1..k)}.

    t = 0 gives gamma, t = k gives beta; strict increase is automatic from
    beta <= gamma.
    """
    if not subset_leq(beta, gamma):
        raise EmptyIntervalError(f"{beta} is not componentwise <= {gamma}")
    k = beta.k
    if not 0 <= t <= k:
        raise ParameterError(f"t={t} out of range 0..{k}")
    return KSubset(beta.elements[:t] + gamma.elements[t:], beta.n)


def _window(beta: KSubset, gamma: KSubset, t: int) -> tuple[int, int]:
    k = beta.k
    if not 1 <= t <= k - 1:
        raise ParameterError(f"t={t} out of range 1..{k - 1}")
    return beta(t + 1), gamma(t)


def p_set(beta: KSubset, gamma: KSubset, t: int) -> SubsetFamily:
    """Members of [beta, gamma] meeting the window [beta(t+1), gamma(t)].

    Empty exactly when the window is an empty integer interval.
    """
    lo, hi = _window(beta, gamma, t)
    fam = interval(beta, gamma)
    members = [a for a in fam if any(lo <= x <= hi for x in a)]
    return SubsetFamily(members, beta.k, beta.n)


def p_set_complement(beta: KSubset, gamma: KSubset, t: int) -> SubsetFamily:
    """Members of [beta, gamma] avoiding the window [beta(t+1), gamma(t)]."""
    return interval(beta, gamma) - p_set(beta, gamma, t)


def i_set(beta: KSubset, gamma: KSubset, t: int) -> SubsetFamily:
    """All of S(k, n) meeting the window [beta(t+1), gamma(t)]."""
    if not subset_leq(beta, gamma):
        raise EmptyIntervalError(f"{beta} is not componentwise <= {gamma}")
    lo, hi = _window(beta, gamma, t)
    members = [a for a in enumerate_subsets(beta.k, beta.n) if any(lo <= x <= hi for x in a)]
    return SubsetFamily(members, beta.k, beta.n)


def cyclic_shift(alpha: KSubset, j: int) -> KSubset:
    """Apply the long cycle j times: every element moves up by j mod n."""
    n = alpha.n
    return KSubset(sorted((x - 1 + j) % n + 1 for x in alpha.elements), n)


def epsilon(beta: KSubset, gamma: KSubset, t: int) -> KSubset:
    """The one-row subset {1, ..., k-1, n - gamma(t) + beta(t+1)}.

    Defined when the window [beta(t+1), gamma(t)] is nonempty; the last
    element then satisfies k < n - gamma(t) + beta(t+1) <= n.
    """
    lo, hi = _window(beta, gamma, t)
    if lo > hi:
        raise ParameterError(
            f"window [{lo},{hi}] is empty; the shifted one-row subset is undefined"
        )
    k, n = beta.k, beta.n
    last = n - hi + lo
    if last < k:
        # Unreachable: last >= k+1 follows from gamma(t) <= n-(k-t) and
        # beta(t+1) >= t+1.  Kept as a loud guard.
        raise ParameterError(f"degenerate last element {last} < k={k}")
    return KSubset(tuple(range(1, k)) + (last,), n)


def sigma_sets(
    beta: KSubset, gamma: KSubset
) -> tuple[frozenset[SubsetFamily], frozenset[SubsetFamily], frozenset[SubsetFamily]]:
    """The three families of boundary positroids attached to (beta, gamma).

    Returns (window families, intervals above covers of beta, intervals
    below covers under gamma); the union is the locus removed from the
    closed interval variety to cut out the banded-parameterization piece.
    """
    if not subset_leq(beta, gamma):
        raise EmptyIntervalError(f"{beta} is not componentwise <= {gamma}")
    k = beta.k
    sigma0 = set()
    for t in range(1, k):
        fam = p_set(beta, gamma, t)
        if len(fam):
            sigma0.add(fam)
    # Far ends are non-strict: when gamma covers beta the degenerate
    # intervals [gamma, gamma] and [beta, beta] are the whole boundary.
    sigma1 = set()
    for bprime in upper_covers(beta):
        if subset_leq(bprime, gamma):
            sigma1.add(interval(bprime, gamma))
    sigma2 = set()
    for gprime in lower_covers(gamma):
        if subset_leq(beta, gprime):
            sigma2.add(interval(beta, gprime))
    return frozenset(sigma0), frozenset(sigma1), frozenset(sigma2)


def subset_rank(alpha: KSubset) -> int:
    """Sum of alpha(i) - i; 0 at {1..k}, k(n-k) at {n-k+1..n}."""
    return sum(x - i for i, x in enumerate(alpha.elements, start=1))


def iter_comparable_pairs(k: int, n: int) -> Iterator[tuple[KSubset, KSubset]]:
    """All pairs (beta, gamma) with beta componentwise <= gamma."""
    subs = enumerate_subsets(k, n)
    for beta in subs:
        for gamma in subs:
            if subset_leq(beta, gamma):
                yield beta, gamma
