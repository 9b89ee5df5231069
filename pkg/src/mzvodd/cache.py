"""On-disk cache for matrices and kernel bases.

Payloads use the MZVODD-MATRIX / MZVODD-KERNEL v1 text formats.  Each file
has a ``.sha256`` sidecar; a digest mismatch is treated as a miss.  Writes go
to a temporary file in the same directory and are renamed into place.
"""
from __future__ import annotations

import hashlib
import os
import tempfile
from pathlib import Path
from typing import Callable, Optional

from .exact_linalg import KernelBasis, left_kernel, right_kernel
from .matrices import IntMatrix, build_C, build_E, build_Eq, build_F

ENV_VAR = "MZVODD_CACHE"
FORMAT_VERSION = "v1"

_BUILDERS = {
    "E": lambda N, r, q: build_E(N, r),
    "Eq": lambda N, r, q: build_Eq(N, r, q),
    "C": lambda N, r, q: build_C(N, r),
    "F": lambda N, r, q: build_F(N, r),
}


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class Cache:
    """Directory of cached payloads keyed by (kind, N, r, q, format version)."""

    def __init__(self, directory):
        self.dir = Path(directory)
        self.dir.mkdir(parents=True, exist_ok=True)

    @classmethod
    def from_env(cls, directory: Optional[str] = None) -> Optional["Cache"]:
        directory = directory or os.environ.get(ENV_VAR)
        return cls(directory) if directory else None

    def path(self, prefix: str, kind: str, N: int, r: int, q: Optional[int] = None) -> Path:
        qs = "-" if q is None else str(q)
        return self.dir / f"{prefix}_{kind}_N{N}_r{r}_q{qs}.{FORMAT_VERSION}.txt"

    def load_text(self, path: Path) -> Optional[str]:
        side = path.with_name(path.name + ".sha256")
        if not path.exists() or not side.exists():
            return None
        text = path.read_text(encoding="utf-8")
        if _digest(text) != side.read_text(encoding="utf-8").strip():
            return None
        return text

    def save_text(self, path: Path, text: str) -> None:
        _atomic_write(path, text)
        _atomic_write(path.with_name(path.name + ".sha256"), _digest(text) + "\n")

    def get_text(self, path: Path, compute: Callable[[], str]) -> str:
        text = self.load_text(path)
        if text is None:
            text = compute()
            self.save_text(path, text)
        return text

    def matrix(self, kind: str, N: int, r: int, q: Optional[int] = None) -> IntMatrix:
        if kind not in _BUILDERS:
            raise ValueError(f"unknown matrix kind {kind!r}")
        path = self.path("matrix", kind, N, r, q)
        text = self.get_text(path, lambda: _BUILDERS[kind](N, r, q).to_text())
        return IntMatrix.from_text(text)

    def kernel(self, side: str, kind: str, N: int, r: int, q: Optional[int] = None) -> KernelBasis:
        if side not in ("left", "right"):
            raise ValueError(f"side must be left or right, got {side!r}")
        path = self.path(f"kernel-{side}", kind, N, r, q)
        solve = left_kernel if side == "left" else right_kernel
        text = self.get_text(path, lambda: solve(self.matrix(kind, N, r, q)).to_text())
        return KernelBasis.from_text(text)


def get_matrix(kind: str, N: int, r: int, q: Optional[int] = None, cache: Optional[Cache] = None) -> IntMatrix:
    if kind not in _BUILDERS:
        raise ValueError(f"unknown matrix kind {kind!r}")
    if cache is None:
        return _BUILDERS[kind](N, r, q)
    return cache.matrix(kind, N, r, q)
