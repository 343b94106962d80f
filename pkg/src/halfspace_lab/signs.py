"""Sign vectors over {+, 0, -}, stored as tuples of ints in {1, 0, -1}."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InconsistentInput

_CHAR = {1: "+", 0: "0", -1: "-"}
_VALUE = {"+": 1, "0": 0, "-": -1, "−": -1}
_RANK = {0: 0, -1: 1, 1: 2}


def parse_sign(text: str) -> tuple:
    """Accept ``"+,0,-"`` or the compact ``"+0-"``; the empty string is the empty vector."""
    s = text.strip()
    if not s:
        return ()
    parts = [p.strip() for p in s.split(",")] if "," in s else list(s)
    try:
        return tuple(_VALUE[p] for p in parts)
    except KeyError as exc:
        raise InconsistentInput(f"bad sign character {exc.args[0]!r} in {text!r}") from None


def format_sign(s: Sequence[int], compact: bool = False) -> str:
    return ("" if compact else ",").join(_CHAR[v] for v in s)


def sign_key(s: Sequence[int]) -> tuple:
    """Lexicographic key with 0 < - < +."""
    return tuple(_RANK[v] for v in s)


def sort_signs(signs: Iterable[Sequence[int]]) -> list:
    return sorted((tuple(s) for s in signs), key=sign_key)


def sign_leq(s: Sequence[int], t: Sequence[int]) -> bool:
    """Entrywise sign order: 0 lies below both + and -."""
    return all(x == 0 or x == y for x, y in zip(s, t))


def compose(x: Sequence[int], y: Sequence[int]) -> tuple:
    return tuple(a if a != 0 else b for a, b in zip(x, y))


def negate(x: Sequence[int]) -> tuple:
    return tuple(-v for v in x)


def separation(x: Sequence[int], y: Sequence[int]) -> list:
    return [e for e, (a, b) in enumerate(zip(x, y)) if a != 0 and a == -b]


def support(x: Sequence[int]) -> frozenset:
    return frozenset(i for i, v in enumerate(x) if v != 0)
