from .dyadic import Dyadic
from .base import IntGroup, IntTupleGroup, CyclicGroup, FreeGroup, SymmetricGroup
from .wreath import WreathProduct, WreathElement, translation_action
from .thompson import (ThompsonElement, ThompsonGroup, translation, default_bump,
                       doubling_generator, IDENTITY as THOMPSON_IDENTITY)
from .bs import BSGroup, BSElement
from .enumeration import GroupEnumerator, bfs_ball

__all__ = [
    "Dyadic",
    "IntGroup", "IntTupleGroup", "CyclicGroup", "FreeGroup", "SymmetricGroup",
    "WreathProduct", "WreathElement", "translation_action",
    "ThompsonElement", "ThompsonGroup", "translation", "default_bump",
    "doubling_generator", "THOMPSON_IDENTITY",
    "BSGroup", "BSElement",
    "GroupEnumerator", "bfs_ball",
]
