"""Garside normal forms and spherical-twist braid actions for ADE types."""

from .dynkin import DynkinDiagram, build
from .garside import BraidWord, GarsideNormalForm, equals, normalize, parse_word
from .kernels import BACKEND
from .recover import distinguish, recover
from .twist import probe, twist, twist_word, untwist
from .zigzag import TwistedComplex, ZigzagAlgebra

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BraidWord",
    "DynkinDiagram",
    "GarsideNormalForm",
    "TwistedComplex",
    "ZigzagAlgebra",
    "build",
    "distinguish",
    "equals",
    "normalize",
    "parse_word",
    "probe",
    "recover",
    "twist",
    "twist_word",
    "untwist",
]
