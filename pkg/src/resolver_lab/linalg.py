"""Exact rank computation for sparse integer matrices.

Characteristic 0 uses division-free integer elimination with content
normalization, so every intermediate value stays an exact integer.
Prime characteristic reduces modulo p with modular inverses.
"""

from __future__ import annotations

from math import gcd

from .errors import UnsupportedCharacteristicError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def validate_characteristic(char: int) -> None:
    if char != 0 and not is_prime(char):
        raise UnsupportedCharacteristicError(f"field characteristic must be 0 or prime, got {char}")


def _normalize_content(row: dict[int, int]) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for k in row:
            row[k] //= g


def sparse_rank(rows: list[dict[int, int]], char: int = 0) -> int:
    """Rank of the matrix whose rows are {column: coefficient} dicts."""
    validate_characteristic(char)
    if char == 0:
        return _rank_integer(rows)
    return _rank_mod_p(rows, char)


def _rank_integer(rows: list[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        r = {k: v for k, v in row.items() if v != 0}
        while r:
            c = min(r)
            if c not in pivots:
                _normalize_content(r)
                pivots[c] = r
                rank += 1
                break
            p = pivots[c]
            a, b = p[c], r[c]
            new = {k: a * v for k, v in r.items()}
            for k, v in p.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            _normalize_content(new)
            r = new
    return rank


def _rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        r = {}
        for k, v in row.items():
            w = v % p
            if w:
                r[k] = w
        while r:
            c = min(r)
            if c not in pivots:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: (v * inv) % p for k, v in r.items()}
                rank += 1
                break
            piv = pivots[c]
            b = r[c]
            for k, v in piv.items():
                w = (r.get(k, 0) - b * v) % p
                if w:
                    r[k] = w
                else:
                    r.pop(k, None)
    return rank
