"""Dense float32/int8 tensors and the raw serialization primitives.

Tensors are plain numpy arrays; the helpers here pin down the contract the
compression stages rely on: float32 carriers, C-contiguous row-major layout,
finite values only, and little-endian bytes on disk.
"""

from __future__ import annotations

import math

import numpy as np

from .exceptions import FormatError, ShapeError

F32 = np.dtype("<f4")
INT8_MIN = -127
INT8_MAX = 127


def as_tensor(values, shape=None) -> np.ndarray:
    """Coerce to a C-contiguous float32 array, rejecting NaN/Inf."""
    arr = np.ascontiguousarray(values, dtype=np.float32)
    if shape is not None:
        arr = arr.reshape(shape)
    if not np.all(np.isfinite(arr)):
        raise ValueError("tensor contains non-finite values")
    return arr


def as_int_tensor(values, shape=None) -> np.ndarray:
    """Coerce to a C-contiguous int8 array with every element in [-127, 127]."""
    arr = np.asarray(values)
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"int8 tensor requires integer input, got {arr.dtype}")
    if arr.size and (arr.min() < INT8_MIN or arr.max() > INT8_MAX):
        raise ValueError("int8 tensor element outside [-127, 127]")
    arr = np.ascontiguousarray(arr, dtype=np.int8)
    if shape is not None:
        arr = arr.reshape(shape)
    return arr


def matmul(a, b) -> np.ndarray:
    """Matrix product of two rank-2 float32 tensors. No broadcasting."""
    a = as_tensor(a)
    b = as_tensor(b)
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeError(f"matmul requires rank-2 tensors, got {a.ndim} and {b.ndim}")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"inner dimensions disagree: {a.shape} x {b.shape}")
    return np.matmul(a, b)


def mse(x, y) -> float:
    """Mean squared elementwise difference; shapes must match exactly."""
    x = as_tensor(x)
    y = as_tensor(y)
    if x.shape != y.shape:
        raise ShapeError(f"shape mismatch: {x.shape} vs {y.shape}")
    d = x.astype(np.float64) - y.astype(np.float64)
    return float(np.mean(d * d)) if d.size else 0.0


def serialize_raw(t) -> bytes:
    """Flat little-endian float32 bytes, row-major order."""
    return as_tensor(t).astype(F32, copy=False).tobytes(order="C")


def deserialize_raw(data: bytes, shape) -> np.ndarray:
    """Inverse of serialize_raw; byte length must be 4 x element count."""
    shape = tuple(int(s) for s in shape)
    count = math.prod(shape)
    if len(data) != 4 * count:
        raise FormatError(f"expected {4 * count} bytes for shape {shape}, got {len(data)}")
    arr = np.frombuffer(data, dtype=F32).reshape(shape).copy()
    return as_tensor(arr)
