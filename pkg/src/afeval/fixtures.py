"""Pinned fixture instances, addressable by name from instance documents."""

from __future__ import annotations

from typing import Callable, Optional

from .errors import SchemaError
from .model import LFunctionInstance, make_instance, twist
from .oracles import (
    DirichletCharacter,
    gauss_sum_root_number,
    kronecker_character,
    legendre_character,
    power_character,
    ramanujan_coefficients,
)

DIRICHLET_LENGTH = 2000
DELTA_LENGTH = 2000

CHARACTERS: dict[int, Callable[[], DirichletCharacter]] = {
    3: lambda: legendre_character(3),
    4: lambda: kronecker_character(4),
    5: lambda: legendre_character(5),
    7: lambda: power_character(7, 2),  # cubic, even, complex
    8: lambda: kronecker_character(8),
    11: lambda: power_character(11, 1),  # order 10, odd, complex
}

DIRICHLET_MODULI = tuple(CHARACTERS)


def dirichlet_instance(q: int, length: int = DIRICHLET_LENGTH) -> LFunctionInstance:
    chi = CHARACTERS[q]()
    return make_instance(
        f"dirichlet-{q}", 1, 1, q, gauss_sum_root_number(chi), [chi.delta],
        chi.coefficients(length), period=q,
    )


def delta_instance(length: int = DELTA_LENGTH) -> LFunctionInstance:
    """Ramanujan's Delta: level 1, weight 12, root number 1."""
    return make_instance("delta", 2, 1, 1, 1.0, [5.5, 6.5], ramanujan_coefficients(length))


def trivial_instance(length: int = 100) -> LFunctionInstance:
    """Gamma data of zeta (N = 1, mu = 0) with a_n = 1; for cutoff tests only."""
    return make_instance("trivial", 1, 1, 1, 1.0, [0.0], [1.0] * length, period=1)


def builtin(name: str, length: Optional[int] = None, t: float = 0.0) -> LFunctionInstance:
    if name.startswith("dirichlet-"):
        try:
            q = int(name.split("-", 1)[1])
        except ValueError:
            q = -1
        if q not in CHARACTERS:
            raise SchemaError(f"unknown builtin fixture {name!r}; moduli available: {DIRICHLET_MODULI}")
        inst = dirichlet_instance(q, length or DIRICHLET_LENGTH)
    elif name == "delta":
        inst = delta_instance(length or DELTA_LENGTH)
    elif name == "trivial":
        inst = trivial_instance(length or 100)
    else:
        raise SchemaError(f"unknown builtin fixture {name!r}")
    return twist(inst, t) if t else inst


def builtin_names() -> list[str]:
    return [f"dirichlet-{q}" for q in DIRICHLET_MODULI] + ["delta", "trivial"]


def pinned_fixtures() -> list[LFunctionInstance]:
    """Six primitive Dirichlet characters and Delta."""
    return [dirichlet_instance(q) for q in DIRICHLET_MODULI] + [delta_instance()]
