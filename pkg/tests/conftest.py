import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

E_12_2 = [
    [0, 0, 0, 1],
    [-6, 0, 1, 6],
    [-15, -14, 15, 15],
    [-27, -42, 42, 28],
]

E_15_3 = [
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [-6, -6, 1, 6, 6, 0, 0, 0, 0, 0],
    [0, 0, -6, 0, -6, 1, 6, 6, 0, 0],
    [0, 0, 0, -6, 0, 0, 0, -5, 6, 6],
    [-15, -14, 0, 15, 0, 0, 0, 15, 0, 0],
    [0, 0, 0, -15, -14, 0, 0, 0, 15, 15],
    [-27, -42, 42, 0, 0, 0, -42, 0, 42, 28],
]

KER_12_2 = [14, 75, 84, 0]
KER_15_3 = [-14, 15, 6, 0, 0, 36, 0, 0, 0, 0]
REL_18_4 = {(3, 3, 3, 9): 70, (3, 3, 5, 7): -75, (3, 3, 7, 5): -30, (3, 5, 5, 5): 36}
