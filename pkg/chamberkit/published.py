"""
Values as printed in the published tables, kept verbatim so that every
derived table can be compared against them.  Nothing here is used to
compute anything.
"""

__package__ = 'chamberkit'

from dataclasses import dataclass
from typing import Dict, Optional


@dataclass(frozen=True)
class PublishedRow:
    label: str
    gamma_L: str
    N: int
    pi1_rank: Optional[int] = None

    def _asdict(self):
        return {'label': self.label, 'gammaL': self.gamma_L, 'N': self.N, 'pi1Rank': self.pi1_rank}


def _rows(*rows) -> Dict[str, PublishedRow]:
    return {row[0]: PublishedRow(*row) for row in rows}


PUBLISHED_TABLES: Dict[int, Dict[str, PublishedRow]] = {
    2: _rows(
        ('OB', 'A1', 0, 2),
        ('BOA', 'trivial', 1, 3),
    ),
    3: _rows(
        ('M', 'A1×A2', 0, 2),
        ('MO', 'A2', 1, 3),
        ('MA', 'A1×A1', 2, 4),
        ('MB', 'A1×A1', 2, 4),
        ('MOA', 'A1', 3, 5),
        ('MOB', 'A1', 3, 5),
        ('MAB', 'A1', 3, 5),
        ('MOAB', 'trivial', 4, 6),
    ),
    4: _rows(
        ('M', 'A4', 0, 0),
        ('MO', 'A3', 4, 4),
        ('MA', 'A3', 4, 4),
        ('MB', 'A1×A2', 6, 6),
        ('MC', 'A1×A2', 6, 6),
        ('MOA', 'A2', 7, 7),
        ('MOB', 'A1×A1', 8, 8),
        ('MOC', 'A2', 7, 7),
        ('MAB', 'A2', 7, 7),
        ('MAC', 'A1×A1', 8, 7),
        ('MBC', 'A1×A1', 8, 7),
        ('MOAB', 'A1', 9, 8),
        ('MOAC', 'A1', 9, 9),
        ('MOBC', 'A1', 9, 9),
        ('MABC', 'A1', 9, 9),
        ('MOABC', 'trivial', 10, 10),
    ),
    # no fundamental group column for five points
    5: _rows(
        ('M', 'D5', 0),
        ('MO', 'A4', 10),
        ('MA', 'D4', 8),
        ('MB', 'A1×A3', 13),
        ('MC', 'A2×A2', 15),
        ('MD', 'A4', 10),
        ('MOA', 'A3', 14),
        ('MOB', 'A1×A2', 16),
        ('MOC', 'A1×A2', 16),
        ('MOD', 'A3', 14),
        ('MAB', 'A3', 14),
        ('MAC', 'A1×A1×A1', 17),
        ('MAD', 'A3', 14),
        ('MBC', 'A1×A1×A1', 17),
        ('MBD', 'A1×A2', 16),
        ('MCD', 'A1×A2', 16),
        ('MOAB', 'A2', 17),
        ('MOAC', 'A1×A1', 18),
        ('MOAD', 'A2', 17),
        ('MOBC', 'A1×A1', 18),
        ('MOBD', 'A1×A1', 18),
        ('MOCD', 'A2', 17),
        ('MABC', 'A1×A1', 18),
        ('MABD', 'A2', 17),
        ('MACD', 'A1×A1', 18),
        ('MBCD', 'A1×A1', 18),
        ('MOABC', 'A1', 19),
        ('MOABD', 'A1', 19),
        ('MOACD', 'A1', 19),
        ('MOBCD', 'A1', 19),
        ('MABCD', 'A1', 19),
        ('MOABCD', 'trivial', 20),
    ),
}

# Q per manifold, the five point value is printed with a question mark
PUBLISHED_Q = {1: '1', 2: '3', 3: '6', 4: '10', 5: '15 ?'}

# ranks quoted for the five point faces, MA has none
PUBLISHED_K5_RANKS = {
    'MOABCD': 15,
    'MOABC': 14, 'MOABD': 14, 'MOACD': 14, 'MOBCD': 14, 'MABCD': 14,
    'MOAC': 13, 'MOBC': 13, 'MOBD': 13, 'MABC': 13, 'MACD': 13, 'MBCD': 13,
    'MOAB': 12, 'MOAD': 12, 'MOCD': 12, 'MABD': 12, 'MAC': 12, 'MBC': 12,
    'MOB': 11, 'MOC': 11, 'MBD': 11, 'MCD': 11,
    'MC': 10,
    'MOA': 9, 'MOD': 9, 'MAD': 9, 'MAB': 9,
    'MB': 8,
    'MO': 5, 'MD': 5,
    'M': 0,
}


def published_row(k: int, label: Optional[str]) -> Optional[PublishedRow]:
    if label is None:
        return None
    return PUBLISHED_TABLES.get(k, {}).get(label)
