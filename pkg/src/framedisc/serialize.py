"""JSON wire formats.

Complex scalars travel as [re, im] pairs. Matrices are row-major flat entry
lists with an explicit dimension. Partitions and supports are 1-based on
the wire (parts 1..r, indices 1..n) and 0-based in memory.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import InvalidParameterError
from .frames import Partition, VectorSystem, partition, vector_system
from .linalg import as_hermitian
from .reductions import DiagonalProjection, diagonal_projection
from .engines import SignVector, sign_vector


def _pairs(arr: np.ndarray) -> list:
    return [[float(z.real), float(z.imag)] for z in arr]


def matrix_to_dict(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=np.complex128)
    return {"dim": int(m.shape[0]), "entries": _pairs(m.ravel())}


def matrix_from_dict(d: dict, hermitian: bool = True) -> np.ndarray:
    n = int(d["dim"])
    entries = d["entries"]
    if len(entries) != n * n:
        raise InvalidParameterError(f"matrix dim {n} needs {n * n} entries, got {len(entries)}")
    flat = np.array([complex(re, im) for re, im in entries])
    m = flat.reshape(n, n)
    return as_hermitian(m) if hermitian else m


def vector_to_dict(v: np.ndarray) -> dict:
    return {"entries": _pairs(np.asarray(v, dtype=np.complex128))}


def vector_from_dict(d: dict) -> np.ndarray:
    return np.array([complex(re, im) for re, im in d["entries"]])


def system_to_dict(vs: VectorSystem) -> dict:
    return {"k": vs.k, "vectors": [_pairs(row) for row in vs.vectors]}


def system_from_dict(d: dict) -> VectorSystem:
    k = int(d["k"])
    rows = [[complex(re, im) for re, im in row] for row in d["vectors"]]
    vs = vector_system(np.array(rows, dtype=np.complex128).reshape(len(rows), k))
    if vs.k != k:
        raise InvalidParameterError(f"declared k = {k} but vectors have length {vs.k}")
    return vs


def partition_to_dict(p: Partition) -> dict:
    return {"r": p.r, "assignment": [int(a) + 1 for a in p.assignment]}


def partition_from_dict(d: dict) -> Partition:
    return partition(int(d["r"]), [int(a) - 1 for a in d["assignment"]])


def support_to_dict(q: DiagonalProjection) -> dict:
    return {"n": q.n, "support": [int(i) + 1 for i in sorted(q.support)]}


def support_from_dict(d: dict) -> DiagonalProjection:
    return diagonal_projection(int(d["n"]), [int(i) - 1 for i in d["support"]])


def signs_to_dict(s: SignVector) -> dict:
    return {"signs": [int(x) for x in s.signs]}


def signs_from_dict(d: dict) -> SignVector:
    return sign_vector(d["signs"])


def load_json(path) -> dict:
    with open(path) as fh:
        return json.load(fh)
