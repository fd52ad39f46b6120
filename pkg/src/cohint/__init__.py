"""Cohomological integrality checks for symmetric representations of reductive groups."""
from __future__ import annotations

from .bps import (
    BpsRecord,
    IntegralityReport,
    Memo,
    Options,
    Rank1Report,
    bps_character,
    rank1_closed_form,
    rank1_conjecture_check,
    target_series,
    verify_integrality,
)
from .group_rep import GroupDescriptor, PairVG, SymmetricRep, adjoint, gl, product, raw, sl, torus
from .poset import PartitionClass, enumerate_classes, poset_data, to_dot

__all__ = [
    "BpsRecord", "IntegralityReport", "Memo", "Options", "Rank1Report", "bps_character",
    "rank1_closed_form", "rank1_conjecture_check", "target_series", "verify_integrality",
    "GroupDescriptor", "PairVG", "SymmetricRep", "adjoint", "gl", "product", "raw", "sl", "torus",
    "PartitionClass", "enumerate_classes", "poset_data", "to_dot",
]
