"""The signed form multiset k_lam and the character epsilon on W_lam."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .group_rep import PairVG, Weight
from .lattice import pair
from .poset import PartitionClass
from .weyl import GroupElement


class SignError(RuntimeError):
    pass


@dataclass(frozen=True)
class SignedFormMultiset:
    numerator: tuple[Weight, ...]
    denominator: tuple[Weight, ...]


def k_multiset(c: PartitionClass, pair_vg: PairVG, lam: Sequence[int] | None = None) -> SignedFormMultiset:
    """Weights of V positive on lam over roots positive on lam.

    `lam` defaults to the stored representative of the class.
    """
    lam = c.rep_cochar if lam is None else tuple(lam)
    num = tuple(sorted(b for b in pair_vg.rep.weights if pair(lam, b) > 0))
    den = tuple(sorted(a for a in pair_vg.group.roots if pair(lam, a) > 0))
    return SignedFormMultiset(num, den)


def _flips(forms: Sequence[Weight], w: GroupElement) -> int:
    pool = Counter(forms)
    flips = 0
    for f in forms:
        img = w.act_on_weight(f)
        neg = tuple(-x for x in img)
        if pool[img] > 0:
            pool[img] -= 1
        elif pool[neg] > 0:
            pool[neg] -= 1
            flips += 1
        else:
            raise SignError(f"k not quasi-invariant: {f} maps to {img}")
    return flips


def epsilon(c: PartitionClass, w: GroupElement, pair_vg: PairVG, lam: Sequence[int] | None = None) -> int:
    """The sign with w . k_lam = epsilon(w) k_lam."""
    k = k_multiset(c, pair_vg, lam)
    flips = _flips(k.numerator, w) + _flips(k.denominator, w)
    return -1 if flips % 2 else 1
