from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from tqdm import tqdm

from ..config import get_setting
from ..errors import EnumerationBudgetExceeded

logger = logging.getLogger(__name__)

_BYTE_POPCOUNT = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


def _popcount(words):
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(words).astype(np.int64)
    return _BYTE_POPCOUNT[words.view(np.uint8).reshape(-1, 8)].sum(axis=1)


class PackedBackend:
    """Characteristic-2 codewords packed into one uint64 each, one N-bit plane per symbol bit."""

    def __init__(self, field, N):
        self.m = field.m
        self.N = N
        self.plane_mask = np.uint64((1 << N) - 1)

    def encode(self, words):
        ints = words.view(np.ndarray).astype(np.uint64)
        packed = np.zeros(ints.shape[0], dtype=np.uint64)
        positions = np.arange(self.N, dtype=np.uint64)
        for bit in range(self.m):
            bits = (ints >> np.uint64(bit)) & np.uint64(1)
            packed |= np.bitwise_or.reduce(bits << (positions + np.uint64(bit * self.N)), axis=1)
        return packed

    def zero(self):
        return np.zeros(1, dtype=np.uint64)

    def outer_add(self, scaled, table):
        return (scaled[:, None] ^ table[None, :]).ravel()

    def add_one(self, table, word):
        return table ^ word

    def weights(self, words):
        support = np.zeros_like(words)
        for bit in range(self.m):
            support |= (words >> np.uint64(bit * self.N)) & self.plane_mask
        return _popcount(support)


class PrimeBackend:
    """GF(p) codewords as int64 rows reduced mod p."""

    def __init__(self, field, N):
        self.p = field.p
        self.N = N

    def encode(self, words):
        return words.view(np.ndarray).astype(np.int64)

    def zero(self):
        return np.zeros((1, self.N), dtype=np.int64)

    def outer_add(self, scaled, table):
        return ((scaled[:, None, :] + table[None, :, :]) % self.p).reshape(-1, self.N)

    def add_one(self, table, word):
        return (table + word) % self.p

    def weights(self, words):
        return np.count_nonzero(words, axis=1)


class FieldBackend:
    """Codewords as galois arrays; used for extension fields of odd characteristic."""

    def __init__(self, field, N):
        self.GF = field.GF
        self.N = N

    def encode(self, words):
        return words

    def zero(self):
        return self.GF.Zeros((1, self.N))

    def outer_add(self, scaled, table):
        return (scaled[:, None, :] + table[None, :, :]).reshape(-1, self.N)

    def add_one(self, table, word):
        return table + word

    def weights(self, words):
        return np.count_nonzero(words.view(np.ndarray), axis=1)


def select_backend(field, N):
    if field.p == 2 and field.m * N <= 64:
        return PackedBackend(field, N)
    if field.m == 1:
        return PrimeBackend(field, N)
    return FieldBackend(field, N)


class WeightEnumerator:
    """Exact weight distribution of a code by meet-in-the-middle message enumeration.

    The generator rows are split in two halves. Every low-half codeword is tabulated once;
    each high-half codeword is then added to the whole table in a single array operation.
    High-half codewords are split into contiguous ranges, one per worker, and the
    per-range histograms are summed.
    """

    def __init__(self, code, budget=None, workers=None):
        self.code = code
        self.budget = get_setting("enumeration_budget", budget)
        self.workers = max(1, int(get_setting("workers", workers)))
        self.tqdm_bar = None

    @property
    def required(self):
        return self.code.field.order**self.code.K

    def check_budget(self):
        if self.required > self.budget:
            raise EnumerationBudgetExceeded(self.required, self.budget)

    def start_progress(self, total_steps, desc="Enumerating"):
        if self.required >= get_setting("progress_threshold"):
            self.tqdm_bar = tqdm(total=total_steps, desc=desc, leave=False)

    def update_progress(self, step=1):
        if self.tqdm_bar:
            self.tqdm_bar.update(step)

    def end_progress(self):
        if self.tqdm_bar:
            self.tqdm_bar.close()
            self.tqdm_bar = None

    def _table(self, rows, backend):
        elements = self.code.field.GF.elements
        table = backend.zero()
        for i in range(rows.shape[0]):
            table = backend.outer_add(backend.encode(elements[:, None] * rows[i]), table)
        return table

    def distribution(self):
        self.check_budget()
        code = self.code
        N, K = code.N, code.K
        if K == 0:
            return [1] + [0] * N

        backend = select_backend(code.field, N)
        low_rows = (K + 1) // 2
        low = self._table(code.G[:low_rows], backend)
        high = self._table(code.G[low_rows:], backend)
        logger.debug("Enumerating %d codewords of [%d,%d] as %d x %d", self.required, N, K, len(high), len(low))

        bounds = np.linspace(0, len(high), min(self.workers, len(high)) + 1).astype(int)

        def count_range(start, stop):
            histogram = np.zeros(N + 1, dtype=np.int64)
            for index in range(start, stop):
                words = backend.add_one(low, high[index])
                histogram += np.bincount(backend.weights(words), minlength=N + 1)
                self.update_progress()
            return histogram

        self.start_progress(len(high), desc=f"[{N},{K}] weights")
        try:
            if len(bounds) == 2:
                histogram = count_range(0, len(high))
            else:
                with ThreadPoolExecutor(max_workers=len(bounds) - 1) as pool:
                    parts = pool.map(count_range, bounds[:-1], bounds[1:])
                    histogram = np.sum(list(parts), axis=0)
        finally:
            self.end_progress()
        return [int(count) for count in histogram]


def weight_distribution(code, budget=None, workers=None):
    return WeightEnumerator(code, budget=budget, workers=workers).distribution()


def min_distance(code, budget=None, workers=None):
    if code.K == 0:
        raise ValueError("The zero code has no nonzero codewords")
    distribution = weight_distribution(code, budget=budget, workers=workers)
    return distance_from_distribution(distribution)


def distance_from_distribution(distribution):
    return next(i for i, count in enumerate(distribution) if i > 0 and count > 0)


def krawtchouk(j, i, N, q):
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * math.comb(i, s) * math.comb(N - i, j - s)
        for s in range(j + 1)
    )


def macwilliams_dual_distribution(distribution, N, K, q):
    """Weight distribution of the dual code, B_j = q^-K sum_i A_i K_j(i), in exact integers."""
    if len(distribution) != N + 1 or any(a < 0 for a in distribution) or sum(distribution) != q**K:
        raise ValueError(f"Malformed weight distribution for an [{N},{K}] code over GF({q})")
    dual = []
    for j in range(N + 1):
        total = sum(a * krawtchouk(j, i, N, q) for i, a in enumerate(distribution) if a)
        if total % q**K:
            raise ValueError("Weight distribution is not the distribution of a linear code")
        dual.append(total // q**K)
    return dual


def is_formally_self_dual(code, budget=None, workers=None, distribution=None):
    if distribution is None:
        distribution = weight_distribution(code, budget=budget, workers=workers)
    dual = macwilliams_dual_distribution(distribution, code.N, code.K, code.field.order)
    return dual == distribution
