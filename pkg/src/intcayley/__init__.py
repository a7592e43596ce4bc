"""Spectra and integrality of Cayley graphs on the groups T_{8n} = <a, b | a^{2n}, b^4 = a^n, b^-1 a b = a^-1>."""

from .characters import CharacterId, CharacterTable, character_ids, get_table
from .cyclotomic import Cyclotomic, make_context
from .errors import CayleyError, ContextMismatchError, ContractError, NotApplicableError, ParameterMismatchError
from .group import ConnectionSet, Element, Group, get_group
from .oracle import char_poly, jacobi_eigh, oracle_spectrum
from .setlang import from_json, parse_set, to_json
from .spectrum import (
    IntegralityVerdict,
    Spectrum,
    check_integral_theorem3,
    check_integral_theorem4,
    check_integral_theorem5,
    compute_spectrum,
    enumerate_integral_normal,
)

__all__ = [
    "CayleyError",
    "CharacterId",
    "CharacterTable",
    "ConnectionSet",
    "ContextMismatchError",
    "ContractError",
    "Cyclotomic",
    "Element",
    "Group",
    "IntegralityVerdict",
    "NotApplicableError",
    "ParameterMismatchError",
    "Spectrum",
    "char_poly",
    "character_ids",
    "check_integral_theorem3",
    "check_integral_theorem4",
    "check_integral_theorem5",
    "compute_spectrum",
    "enumerate_integral_normal",
    "from_json",
    "get_group",
    "get_table",
    "jacobi_eigh",
    "make_context",
    "oracle_spectrum",
    "parse_set",
    "to_json",
]
