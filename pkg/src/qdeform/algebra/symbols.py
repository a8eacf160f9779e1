"""Symbol interning and packed exponent vectors.

Every symbol name gets a process-wide index on first use. An exponent vector
``{i: e_i}`` is packed into one Python int ``sum(e_i * 2**(BITS*i))`` with
signed digits, so multiplying monomials is integer addition. The base symbol
``q`` always has index 0; what is stored for it is the exponent of the
internal variable ``p`` with ``q = p**scale`` (see :class:`Context`).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping

BITS = 24
_BASE = 1 << BITS
_HALF = 1 << (BITS - 1)
_MASK = _BASE - 1

BASE_NAME = "q"


class ScaleUnavailable(ValueError):
    """A fractional power of q was requested in a context that cannot hold it."""


class _Registry:
    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._names: List[str] = []
        self._index: Dict[str, int] = {}
        self._bias: List[int] = []
        self.index(BASE_NAME)

    def index(self, name: str) -> int:
        idx = self._index.get(name)
        if idx is not None:
            return idx
        if not name or not (name[0].isalpha() or name[0] == "_"):
            raise ValueError(f"invalid symbol name {name!r}")
        with self._lock:
            idx = self._index.get(name)
            if idx is None:
                idx = len(self._names)
                self._names.append(name)
                prev = self._bias[-1] if self._bias else 0
                self._bias.append(prev + (_HALF << (BITS * idx)))
                self._index[name] = idx
        return idx

    def name(self, idx: int) -> str:
        return self._names[idx]

    def bias(self, idx: int) -> int:
        return self._bias[idx]

    def __len__(self) -> int:
        return len(self._names)


REGISTRY = _Registry()


def sym_index(name: str) -> int:
    return REGISTRY.index(name)


def sym_name(idx: int) -> str:
    return REGISTRY.name(idx)


def unit_key(name: str) -> int:
    """Packed key of the monomial ``name**1``."""
    return 1 << (BITS * REGISTRY.index(name))


def exponent(key: int, idx: int) -> int:
    """Exponent of symbol ``idx`` inside packed key ``key``."""
    if key == 0:
        return 0
    return (((key + REGISTRY.bias(idx)) >> (BITS * idx)) & _MASK) - _HALF


def decode(key: int) -> Dict[int, int]:
    """Unpack a key into ``{index: exponent}`` with zero exponents omitted."""
    out: Dict[int, int] = {}
    if key == 0:
        return out
    i = 0
    rest = key
    while rest != 0:
        digit = rest & _MASK
        if digit >= _HALF:
            digit -= _BASE
        if digit:
            out[i] = digit
        rest = (rest - digit) >> BITS
        i += 1
    return out


def encode(exps: Mapping[int, int]) -> int:
    key = 0
    for idx, e in exps.items():
        if not -_HALF < e < _HALF:
            raise OverflowError(f"exponent {e} out of range")
        key += e << (BITS * idx)
    return key


def encode_names(exps: Mapping[str, int]) -> int:
    return encode({REGISTRY.index(n): e for n, e in exps.items()})


def display_order(indices: Iterable[int]) -> List[int]:
    """Deterministic display order: alphabetical by name, base symbol last."""
    return sorted(indices, key=lambda i: (i == 0, REGISTRY.name(i)))


@dataclass(frozen=True)
class Context:
    """Holds the base scale: the stored base variable p satisfies q = p**scale."""

    scale: int = 1

    def __post_init__(self) -> None:
        if self.scale < 1:
            raise ValueError("scale must be a positive integer")

    def q_exponent(self, e) -> int:
        """Stored exponent of p for q**e; e may be a Fraction such as 1/2."""
        raw = Fraction(e) * self.scale
        if raw.denominator != 1:
            raise ScaleUnavailable(
                f"q^({e}) needs a base scale divisible by {Fraction(e).denominator},"
                f" context has scale {self.scale}"
            )
        return int(raw)

    def require(self, divisor: int) -> None:
        if self.scale % divisor:
            raise ScaleUnavailable(
                f"base scale {self.scale} is not divisible by {divisor}"
            )


DEFAULT = Context(1)
