"""Irreducible characters of symmetric groups via the Murnaghan-Nakayama rule."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .partitions import Partition, as_partition, border_strips, syt_count


@lru_cache(maxsize=None)
def _mn(shape: Partition, class_type: Partition) -> int:
    if not class_type:
        return 1
    if class_type[0] == 1:
        # identity class: the character is the dimension
        return syt_count(shape)
    rest = Partition(class_type[1:])
    return sum(
        (-1) ** strip.height * _mn(strip.remainder, rest)
        for strip in border_strips(shape, class_type[0])
    )


def character(shape: Iterable[int], class_type: Iterable[int]) -> int:
    """Value of the irreducible character ``chi^shape`` on the class ``class_type``.

    The class is sorted into partition order first, and the largest cycle is
    stripped at each step of the recursion.

    >>> character((4, 3, 2, 1), (3,) + (1,) * 7)
    -48
    """
    shape = as_partition(shape)
    class_type = as_partition(sorted(class_type, reverse=True))
    if shape.size != class_type.size:
        raise ValueError(f"size mismatch: |{shape}| != |{class_type}|")
    return _mn(shape, class_type)


def cycle_character(k: int, shape: Iterable[int]) -> int:
    """``chi^shape((k))``: ``(-1)^j`` on the hook ``(k - j, 1^j)``, zero otherwise."""
    shape = as_partition(shape)
    if shape.size != k:
        raise ValueError(f"size mismatch: |{shape}| != {k}")
    if k >= 1 and all(p == 1 for p in shape[1:]):
        return (-1) ** (len(shape) - 1)
    return 0
