"""Shared fixtures: coefficient fields and frozen reference tables.

Reference values were computed once with an independent degreewise
linear-algebra method (see pfaffcalc.linoracle) and cross-checked
between characteristic 0 and 32003 before being frozen here.
"""

import pytest

from pfaffcalc.fields import GF, QQ


@pytest.fixture(scope="session")
def gf2():
    return GF(2)


@pytest.fixture(scope="session")
def gf32003():
    return GF(32003)


@pytest.fixture(scope="session")
def qq():
    return QQ


# ---------------------------------------------------------------------------
# frozen reference tables

# Bigraded Betti numbers of R/J at f = 4: {(index, (x-deg, t-deg)): rank}
RJ4_BIGRADED = {
    (0, (0, 0)): 1,
    (1, (1, 1)): 4,
    (1, (2, 0)): 1,
    (2, (1, 2)): 1,
    (2, (2, 1)): 4,
    (3, (3, 2)): 1,
}

RJ4_TOTALS = (1, 5, 5, 1)
RJ5_TOTALS = (1, 10, 16, 16, 10, 1)

# Total Betti numbers of N over the x-variable ring.
N4_TOTALS = (4, 4)
N5_TOTALS = (5, 10, 10, 5)
N5_TOTALS_CHAR2 = (5, 11, 11, 5)

# Bigraded Betti numbers of A = R/I at f = 4 over the x-variable ring.
A4_BIGRADED = {(0, (0, 0)): 1, (1, (2, 0)): 1}

# Hilbert-series numerator of R/J at f = 4 (coefficients of T^0, T^1, ...).
J4_HILBERT_NUMERATOR = [1, 0, -5, 5, 0, -1]


def codim_J(f):
    """Frozen codimension of J = Pf4(X) + I1(tX) for f = 2..6."""
    return {2: 1, 3: 2, 4: 3, 5: 5, 6: 8}[f]


def codim_I(f):
    """Frozen codimension of the 4x4-Pfaffian ideal for f = 4..6."""
    return {4: 1, 5: 3, 6: 6}[f]
