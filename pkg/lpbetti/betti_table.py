"""
betti_table.py - Graded Betti tables in the ideal and quotient conventions.

The ideal convention indexes F_0 by the generators of the ideal; the quotient
convention prepends the rank one free module in degree 0, so the ideal entry
(i, j) is the quotient entry (i + 1, j) and the quotient table also has (0, 0) = 1.
"""

from __future__ import annotations

import json
from typing import Dict, Iterable, List, Mapping, Tuple

import pandas as pd

from .errors import ConventionError

IDEAL = 'ideal'
QUOTIENT = 'quotient'
CONVENTIONS = (IDEAL, QUOTIENT)


class BettiTable:
    """
    Map (homological degree i, internal degree j) -> beta_{i,j}.

    Args:
        entries (mapping): (i, j) -> nonnegative int; zeros are dropped
        convention (str): 'ideal' or 'quotient'
    """

    def __init__(self, entries: Mapping[Tuple[int, int], int] = None, convention: str = IDEAL):
        if convention not in CONVENTIONS:
            raise ConventionError(f"unknown convention '{convention}'")
        cleaned: Dict[Tuple[int, int], int] = {}
        for (i, j), value in (entries or {}).items():
            if i < 0 or j < 0 or value < 0:
                raise ValueError(f"invalid Betti entry ({i}, {j}) -> {value}")
            if value:
                cleaned[(int(i), int(j))] = int(value)
        if convention == QUOTIENT:
            column0 = {key: value for key, value in cleaned.items() if key[0] == 0}
            if column0 != {(0, 0): 1}:
                raise ConventionError("a quotient table has exactly (0,0)=1 in homological degree 0")
        self.convention = convention
        self._entries = cleaned

    @classmethod
    def from_rows(cls, rows: Mapping[int, Iterable[int]], convention: str = IDEAL) -> 'BettiTable':
        """Builds a table from displayed rows: rows[j - i][i] = beta_{i,j}."""
        entries = {}
        for strand, values in rows.items():
            for i, value in enumerate(values):
                if value:
                    entries[(i, i + strand)] = value
        return cls(entries, convention)

    @classmethod
    def trivial(cls) -> 'BettiTable':
        """The quotient table of the zero ideal, {(0,0): 1}."""
        return cls({(0, 0): 1}, QUOTIENT)

    # --- Access ---

    @property
    def entries(self) -> Dict[Tuple[int, int], int]:
        return dict(self._entries)

    def get(self, i: int, j: int) -> int:
        return self._entries.get((i, j), 0)

    def items(self) -> List[Tuple[Tuple[int, int], int]]:
        return sorted(self._entries.items())

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.convention == other.convention and self._entries == other._entries

    def __repr__(self):
        return f"BettiTable({self.items()}, convention={self.convention!r})"

    def total(self) -> int:
        return sum(self._entries.values())

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self._entries), default=-1)

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self._entries), default=0)

    def internal_degrees(self, i: int) -> List[int]:
        return sorted(j for (h, j) in self._entries if h == i)

    # --- Conventions and arithmetic ---

    def to_quotient(self) -> 'BettiTable':
        if self.convention == QUOTIENT:
            return self
        entries = {(i + 1, j): value for (i, j), value in self._entries.items()}
        entries[(0, 0)] = 1
        return BettiTable(entries, QUOTIENT)

    def to_ideal(self) -> 'BettiTable':
        if self.convention == IDEAL:
            return self
        entries = {(i - 1, j): value for (i, j), value in self._entries.items() if i > 0}
        return BettiTable(entries, IDEAL)

    def in_convention(self, convention: str) -> 'BettiTable':
        return self.to_quotient() if convention == QUOTIENT else self.to_ideal()

    def __add__(self, other: 'BettiTable') -> 'BettiTable':
        if self.convention != other.convention:
            raise ConventionError("cannot add tables in different conventions")
        total = dict(self._entries)
        for key, value in other._entries.items():
            total[key] = total.get(key, 0) + value
        return BettiTable(total, self.convention)

    def shift(self, di: int, dj: int) -> 'BettiTable':
        """Moves every entry (i, j) to (i + di, j + dj); ideal convention only."""
        if self.convention != IDEAL:
            raise ConventionError("only ideal-convention tables can be shifted")
        return BettiTable({(i + di, j + dj): value for (i, j), value in self._entries.items()})

    # --- Serialization ---

    def to_records(self) -> List[dict]:
        return [{'i': i, 'j': j, 'beta': value} for (i, j), value in self.items()]

    def to_frame(self) -> pd.DataFrame:
        """Diagram layout: rows are strands j - i, columns homological degrees i, zeros filled."""
        frame = pd.DataFrame(self.to_records(), columns=['i', 'j', 'beta'])
        if frame.empty:
            return pd.DataFrame(dtype=int)
        frame['strand'] = frame['j'] - frame['i']
        grid = frame.pivot_table(index='strand', columns='i', values='beta', aggfunc='sum', fill_value=0)
        columns = range(0, int(frame['i'].max()) + 1)
        return grid.reindex(columns=columns, fill_value=0).astype(int)

    def to_json(self) -> str:
        return json.dumps({
            'convention': self.convention,
            'entries': [[i, j, value] for (i, j), value in self.items()],
        })

    @classmethod
    def from_json(cls, text: str) -> 'BettiTable':
        data = json.loads(text)
        return cls({(i, j): value for i, j, value in data['entries']}, data['convention'])
