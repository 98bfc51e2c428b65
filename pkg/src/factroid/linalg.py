"""Row reduction over a prime field.

Vectors are plain sequences of ints in ``[0, p)``.  Over GF(2) the work is
done on Python ints used as bitsets (column ``j`` is bit ``j``), which is an
order of magnitude faster than list arithmetic at the sizes used here.
"""

from __future__ import annotations

from typing import Sequence

Vector = tuple[int, ...]


def _to_bits(v: Sequence[int]) -> int:
    out = 0
    for j, c in enumerate(v):
        if c & 1:
            out |= 1 << j
    return out


def _from_bits(b: int, n: int) -> Vector:
    return tuple((b >> j) & 1 for j in range(n))


def _rref_bits(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    mask = (1 << ncols) - 1
    out: list[int] = []
    piv: list[int] = []
    for r in rows:
        for pc, pr in zip(piv, out):
            if (r >> pc) & 1:
                r ^= pr
        low = r & mask
        if not low:
            continue
        c = (low & -low).bit_length() - 1
        for i, o in enumerate(out):
            if (o >> c) & 1:
                out[i] = o ^ r
        out.append(r)
        piv.append(c)
    order = sorted(range(len(piv)), key=piv.__getitem__)
    return [out[i] for i in order], [piv[i] for i in order]


def _rref_lists(rows: list[list[int]], p: int, ncols: int) -> tuple[list[list[int]], list[int]]:
    out: list[list[int]] = []
    piv: list[int] = []
    for r in rows:
        r = [a % p for a in r]
        for pc, pr in zip(piv, out):
            c = r[pc]
            if c:
                r = [(a - c * b) % p for a, b in zip(r, pr)]
        lead = next((j for j in range(ncols) if r[j]), None)
        if lead is None:
            continue
        inv = pow(r[lead], -1, p)
        if inv != 1:
            r = [a * inv % p for a in r]
        for i, o in enumerate(out):
            c = o[lead]
            if c:
                out[i] = [(a - c * b) % p for a, b in zip(o, r)]
        out.append(r)
        piv.append(lead)
    order = sorted(range(len(piv)), key=piv.__getitem__)
    return [out[i] for i in order], [piv[i] for i in order]


def rref(rows: Sequence[Sequence[int]], p: int, ncols: int | None = None) -> tuple[list[Vector], list[int]]:
    """Nonzero rows of the reduced echelon form, and their pivot columns.

    Pivots are searched in the first ``ncols`` columns only; rows that vanish
    there are dropped even if an augmented block beyond ``ncols`` is nonzero.
    """
    rows = list(rows)
    if not rows:
        return [], []
    width = len(rows[0])
    ncols = width if ncols is None else ncols
    if p == 2:
        out, piv = _rref_bits([_to_bits(r) for r in rows], ncols)
        return [_from_bits(b, width) for b in out], piv
    out, piv = _rref_lists([list(r) for r in rows], p, ncols)
    return [tuple(r) for r in out], piv


def rank(rows: Sequence[Sequence[int]], p: int) -> int:
    rows = list(rows)
    if not rows:
        return 0
    if p == 2:
        return len(_rref_bits([_to_bits(r) for r in rows], len(rows[0]))[1])
    return len(_rref_lists([list(r) for r in rows], p, len(rows[0]))[1])


def reduce(v: Sequence[int], basis: Sequence[Sequence[int]], pivots: Sequence[int], p: int) -> Vector:
    """Remainder of ``v`` against a reduced echelon basis."""
    v = [a % p for a in v]
    for pc, row in zip(pivots, basis):
        c = v[pc]
        if c:
            v = [(a - c * b) % p for a, b in zip(v, row)]
    return tuple(v)


def left_nullspace(rows: Sequence[Sequence[int]], p: int) -> list[Vector]:
    """Basis of ``{y : sum_i y_i * rows[i] == 0}``."""
    rows = list(rows)
    if not rows:
        return []
    m, n = len(rows), len(rows[0])
    if p == 2:
        bits = [_to_bits(r) | (1 << (n + i)) for i, r in enumerate(rows)]
        mask = (1 << n) - 1
        out: list[int] = []
        piv: list[int] = []
        null: list[int] = []
        for r in bits:
            for pc, pr in zip(piv, out):
                if (r >> pc) & 1:
                    r ^= pr
            low = r & mask
            if not low:
                null.append(r >> n)
                continue
            c = (low & -low).bit_length() - 1
            out.append(r)
            piv.append(c)
        return [_from_bits(b, m) for b in null]
    aug = [list(r) + [1 if j == i else 0 for j in range(m)] for i, r in enumerate(rows)]
    out_l: list[list[int]] = []
    piv_l: list[int] = []
    null_l: list[Vector] = []
    for r in aug:
        r = [a % p for a in r]
        for pc, pr in zip(piv_l, out_l):
            c = r[pc]
            if c:
                r = [(a - c * b) % p for a, b in zip(r, pr)]
        lead = next((j for j in range(n) if r[j]), None)
        if lead is None:
            null_l.append(tuple(r[n:]))
            continue
        inv = pow(r[lead], -1, p)
        out_l.append([a * inv % p for a in r])
        piv_l.append(lead)
    return null_l
