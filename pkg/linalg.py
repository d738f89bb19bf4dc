"""
Täta matriser över F_q

Radreducerad trappstegsform (RREF) och rang för täta heltalsmatriser modulo
ett primtal q < 2^31. Allt räknas i numpy int64: produkter är högst
(q-1)^2 < 2^62 och ryms därför utan överspill.

1. rref_mod
   - Klassisk Gauss-Jordan, pivotsökning uppifrån och ned, vänster till höger
   - Pivotelementen normeras till 1 och kolumnen nollställs i alla andra rader

2. rref_blocked
   - För höga matriser (fler än 4 gånger så många rader som kolumner)
   - Tar in ℓ nya rader i taget ovanpå den aktuella basen (högst 2ℓ rader),
     reducerar och behåller de nollskilda raderna

Tekniska detaljer:
- Resultatet är deterministiskt och oberoende av blockstorlek (RREF är unik)
- Indata kopieras, anroparens matris ändras aldrig
"""

import numpy as np


def rref_mod(matrix, q):
    """
    Beräknar RREF av en matris över F_q.

    Args:
        matrix: 2D-array eller lista av rader
        q (int): Primtalsmodul

    Returns:
        tuple: (reducerade nollskilda rader som int64-array, lista med pivotkolumner)
    """
    a = np.array(matrix, dtype=np.int64) % q
    if a.ndim != 2:
        raise ValueError("matrisen måste vara tvådimensionell")
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.nonzero(a[r:, c])[0]
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        inverse = pow(int(a[r, c]), -1, q)
        a[r] = (a[r] * inverse) % q
        column = a[:, c].copy()
        column[r] = 0
        targets = np.nonzero(column)[0]
        if targets.size:
            a[targets] = (a[targets] - np.outer(column[targets], a[r])) % q
        pivots.append(c)
        r += 1
    return a[:r].copy(), pivots


def rref_blocked(matrix, q):
    """
    RREF för höga matriser med svepet "ta ℓ rader, reducera, behåll basen".

    Faller tillbaka på rref_mod när matrisen inte är hög.
    """
    a = np.array(matrix, dtype=np.int64) % q
    rows, cols = a.shape
    if cols == 0 or rows <= 4 * cols:
        return rref_mod(a, q)

    basis = np.zeros((0, cols), dtype=np.int64)
    pivots = []
    for start in range(0, rows, cols):
        block = np.vstack([basis, a[start:start + cols]])
        basis, pivots = rref_mod(block, q)
    return basis, pivots


def rank_mod(matrix, q):
    """Rangen av en matris över F_q."""
    a = np.array(matrix, dtype=np.int64)
    if a.size == 0:
        return 0
    _, pivots = rref_blocked(a, q)
    return len(pivots)
