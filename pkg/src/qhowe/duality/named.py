"""Registry of named operators usable in operator expressions."""

from __future__ import annotations

from typing import Callable

from qhowe.duality import reps
from qhowe.qweyl import AlgebraElement

_BUILDERS: dict[str, Callable[[], AlgebraElement]] = {
    "Ew": lambda: reps.build_sigma_w().E,
    "Fw": lambda: reps.build_sigma_w().F,
    "Kw": lambda: reps.build_sigma_w().K,
    "Es": lambda: reps.build_sigma_s().E,
    "Fs": lambda: reps.build_sigma_s().F,
    "Ks": lambda: reps.build_sigma_s().K,
    "Ed": lambda: reps.build_sigma_delta().E,
    "Fd": lambda: reps.build_sigma_delta().F,
    "Kd": lambda: reps.build_sigma_delta().K,
    "E": lambda: reps.build_sigma_dual().E,
    "F": lambda: reps.build_sigma_dual().F,
    "K": lambda: reps.build_sigma_dual().K,
    "Z1": reps.build_Z1,
    "Z2": reps.build_Z2,
    "dq2_1": lambda: reps.dq2(1),
    "dq2_2": lambda: reps.dq2(2),
}

NAMED_OPERATORS: tuple[str, ...] = tuple(_BUILDERS)


def named_operator(name: str) -> AlgebraElement:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown operator {name!r}") from None
