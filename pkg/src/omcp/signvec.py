"""Sign vectors over the complementary ground set ``E_2n`` (optionally ``+ q``).

Elements are labelled ``1..2n`` with complement ``i <-> i+n``; ``S = {1..n}``,
``T = {n+1..2n}``.  When an extension element ``q`` is present it is label
``2n+1``.  A :class:`SignVector` stores its positive and negative parts as
bitmasks (bit ``e-1`` for element ``e``), which keeps the brute-force
enumerations elsewhere in the package cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _cartesian
from typing import Iterable, Iterator, Sequence

_CHARS = {1: "+", 0: "0", -1: "-"}
_VALUES = {"+": 1, "0": 0, "-": -1, "−": -1}


class GroundSetMismatch(ValueError):
    """Two sign vectors (or a vector and a matroid) live on different ground sets."""


def bit(e: int) -> int:
    return 1 << (e - 1)


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= bit(e)
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class GroundSet:
    """The complementary ground set ``E_2n``, optionally extended by ``q``."""

    n: int
    has_q: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")

    @classmethod
    def from_size(cls, size: int) -> "GroundSet":
        return cls(size // 2, bool(size % 2))

    @property
    def size(self) -> int:
        return 2 * self.n + int(self.has_q)

    @property
    def q(self) -> int | None:
        return 2 * self.n + 1 if self.has_q else None

    @property
    def S(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    @property
    def T(self) -> frozenset[int]:
        return frozenset(range(self.n + 1, 2 * self.n + 1))

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(range(1, self.size + 1))

    @property
    def s_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def t_mask(self) -> int:
        return self.s_mask << self.n

    def complement(self, e: int) -> int:
        if 1 <= e <= self.n:
            return e + self.n
        if self.n < e <= 2 * self.n:
            return e - self.n
        raise ValueError(f"element {e} has no complement in E_{2 * self.n}")

    def complement_set(self, F: Iterable[int]) -> frozenset[int]:
        return frozenset(self.complement(e) for e in F)

    def is_complementary(self, F: Iterable[int]) -> bool:
        F = frozenset(F)
        if not F <= set(range(1, 2 * self.n + 1)):
            return False
        return not (F & self.complement_set(F))

    def complementary_bases(self) -> Iterator[frozenset[int]]:
        """All ``2**n`` complementary ``n``-sets, starting with ``S``."""
        for choice in _cartesian((0, 1), repeat=self.n):
            yield frozenset(i + 1 + self.n * c for i, c in enumerate(choice))


@dataclass(frozen=True, slots=True)
class SignVector:
    """An element of ``{-,0,+}^E`` with ``|E| = size``."""

    size: int
    plus: int = 0
    minus: int = 0

    def __post_init__(self):
        if self.plus & self.minus:
            raise ValueError("an element cannot be both positive and negative")
        if (self.plus | self.minus) >> self.size:
            raise ValueError("entries outside the ground set")

    @classmethod
    def from_signs(cls, signs: Sequence[int]) -> "SignVector":
        plus = minus = 0
        for i, s in enumerate(signs):
            if s > 0:
                plus |= 1 << i
            elif s < 0:
                minus |= 1 << i
        return cls(len(signs), plus, minus)

    @classmethod
    def from_string(cls, text: str) -> "SignVector":
        try:
            return cls.from_signs([_VALUES[c] for c in text])
        except KeyError as exc:
            raise ValueError(f"bad sign character {exc.args[0]!r} in {text!r}") from None

    @classmethod
    def zero(cls, size: int) -> "SignVector":
        return cls(size)

    @classmethod
    def from_sets(cls, size: int, positive: Iterable[int] = (), negative: Iterable[int] = ()):
        return cls(size, mask_of(positive), mask_of(negative))

    @property
    def support_mask(self) -> int:
        return self.plus | self.minus

    @property
    def support(self) -> frozenset[int]:
        return frozenset(elements_of(self.support_mask))

    @property
    def positive(self) -> frozenset[int]:
        return frozenset(elements_of(self.plus))

    @property
    def negative(self) -> frozenset[int]:
        return frozenset(elements_of(self.minus))

    @property
    def zeros(self) -> frozenset[int]:
        full = (1 << self.size) - 1
        return frozenset(elements_of(full & ~self.support_mask))

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(self[e] for e in range(1, self.size + 1))

    def is_zero(self) -> bool:
        return not self.support_mask

    def is_canonical(self) -> bool:
        """True when the lowest-index nonzero entry is ``+`` (or the vector is zero)."""
        s = self.support_mask
        return not s or bool(self.plus & (s & -s))

    def canonical(self) -> "SignVector":
        return self if self.is_canonical() else -self

    def restrict(self, keep: Sequence[int]) -> "SignVector":
        """Subvector on the labels in ``keep`` (in that order), relabelled ``1..len(keep)``."""
        plus = minus = 0
        for i, e in enumerate(keep):
            b = bit(e)
            if self.plus & b:
                plus |= 1 << i
            elif self.minus & b:
                minus |= 1 << i
        return SignVector(len(keep), plus, minus)

    def __getitem__(self, e: int) -> int:
        if not 1 <= e <= self.size:
            raise IndexError(e)
        b = bit(e)
        return 1 if self.plus & b else -1 if self.minus & b else 0

    def __neg__(self) -> "SignVector":
        return SignVector(self.size, self.minus, self.plus)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(self.signs)

    def __str__(self) -> str:
        return "".join(_CHARS[s] for s in self.signs)

    def __repr__(self) -> str:
        return f"SignVector({str(self)!r})"

    def sort_key(self) -> tuple[int, ...]:
        return self.signs


def _check(X: SignVector, Y: SignVector) -> None:
    if X.size != Y.size:
        raise GroundSetMismatch(f"sizes {X.size} and {Y.size} differ")


def compose(X: SignVector, Y: SignVector) -> SignVector:
    _check(X, Y)
    free = ~X.support_mask
    return SignVector(X.size, X.plus | (Y.plus & free), X.minus | (Y.minus & free))


def product(X: SignVector, Y: SignVector) -> SignVector:
    _check(X, Y)
    same = (X.plus & Y.plus) | (X.minus & Y.minus)
    opposite = (X.plus & Y.minus) | (X.minus & Y.plus)
    return SignVector(X.size, same, opposite)


def is_orthogonal(X: SignVector, Y: SignVector) -> bool:
    _check(X, Y)
    same = (X.plus & Y.plus) | (X.minus & Y.minus)
    opposite = (X.plus & Y.minus) | (X.minus & Y.plus)
    return bool(same) == bool(opposite)


def conforms_to(C: SignVector, X: SignVector) -> bool:
    """No entry of ``C`` opposes ``X`` and ``supp C`` lies inside ``supp X``."""
    return not (C.plus & ~X.plus) and not (C.minus & ~X.minus)


def _pairs(X: SignVector) -> tuple[int, int, int, int, GroundSet]:
    g = GroundSet.from_size(X.size)
    if g.has_q and X[g.q] != 0:
        raise ValueError("sign-reversal is only defined when the q entry is 0")
    sm = g.s_mask
    return X.plus & sm, X.minus & sm, (X.plus >> g.n) & sm, (X.minus >> g.n) & sm, g


def is_sign_reversing(X: SignVector) -> bool:
    sp, sn, tp, tn, _ = _pairs(X)
    return not ((sp & tp) | (sn & tn))


def is_sign_preserving(X: SignVector) -> bool:
    sp, sn, tp, tn, _ = _pairs(X)
    return not ((sp & tn) | (sn & tp))


def _full_support(X: SignVector) -> bool:
    g = GroundSet.from_size(X.size)
    return X.support_mask & (g.s_mask | g.t_mask) == g.s_mask | g.t_mask


def is_totally_sign_reversing(X: SignVector) -> bool:
    return is_sign_reversing(X) and _full_support(X)


def is_totally_sign_preserving(X: SignVector) -> bool:
    return is_sign_preserving(X) and _full_support(X)


def reflect(X: SignVector) -> SignVector:
    """``X_e -> X_ebar`` on ``S`` and ``-X_ebar`` on ``T``.

    Applied twice this gives ``-X``; on vector sets closed under negation the
    operation is an involution.
    """
    if X.size % 2:
        raise ValueError("reflection needs a pure E_2n ground set")
    n = X.size // 2
    sm = (1 << n) - 1
    plus = ((X.plus >> n) & sm) | ((X.minus & sm) << n)
    minus = ((X.minus >> n) & sm) | ((X.plus & sm) << n)
    return SignVector(X.size, plus, minus)


def pair_mask(F: Iterable[int], n: int) -> int:
    """Mask over ``S`` of the complementary pairs touched by ``F``; validates ``F``."""
    F = frozenset(F)
    g = GroundSet(n)
    if not g.is_complementary(F):
        raise ValueError(f"{sorted(F)} is not a complementary subset of E_{2 * n}")
    return mask_of(e if e <= n else e - n for e in F)


def swap_pairs(mask: int, pm: int, n: int) -> int:
    both = pm | (pm << n)
    return (mask & ~both) | ((mask & pm) << n) | ((mask >> n) & pm)


def ppt_sign_vector(X: SignVector, F: Iterable[int]) -> SignVector:
    """Principal pivot transform: swap the entries of ``e`` and ``ebar`` for ``e in F``.

    ``q`` (if present) is left alone.
    """
    n = X.size // 2
    pm = pair_mask(F, n)
    return SignVector(X.size, swap_pairs(X.plus, pm, n), swap_pairs(X.minus, pm, n))


def all_sign_vectors(size: int) -> Iterator[SignVector]:
    for signs in _cartesian((0, 1, -1), repeat=size):
        yield SignVector.from_signs(signs)
