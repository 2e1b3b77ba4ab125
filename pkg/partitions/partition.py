# partitions/partition.py
from dataclasses import dataclass

from utils.errors import BadShapeError, LengthExceededError


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers; trailing zeros are stripped."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"Partition parts must be nonnegative: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"Partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts):
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text):
        """Parses '3,1,1' (or '' for the empty partition)."""
        text = text.strip()
        return cls(tuple(int(p) for p in text.split(",") if p.strip())) if text else cls(())

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def padded(self, n):
        """The parts padded with zeros to length n."""
        if self.length > n:
            raise LengthExceededError(f"Partition {self.parts} has length {self.length} > {n}")
        return self.parts + (0,) * (n - self.length)

    def __len__(self):
        return self.length

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")" if self.parts else "()"

    def to_json(self):
        return list(self.parts)


@dataclass(frozen=True)
class Composition:
    """A finite sequence of nonnegative integers, e.g. the per-page widths r_k or s_k."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise BadShapeError(f"Composition entries must be nonnegative: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text):
        """Parses '1,0,2'."""
        return cls(tuple(int(p) for p in str(text).split(",") if p.strip()))

    @property
    def total(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def to_json(self):
        return list(self.parts)


def _partitions_of(size, max_length, max_part):
    # reverse-lexicographic: largest first part first
    if size == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in _partitions_of(size - first, max_length - 1, first):
            yield (first,) + rest


def enum_partitions(max_size, max_length):
    """
    Streams every partition with |λ| <= max_size and length <= max_length.
    Args:
        max_size (int): Largest size.
        max_length (int): Largest number of parts.
    Yields:
        Partition: Graded by size, reverse-lexicographic within a size.
    """
    if max_size < 0 or max_length < 0:
        raise ValueError(f"Bounds must be nonnegative, got ({max_size}, {max_length})")
    for size in range(max_size + 1):
        for parts in _partitions_of(size, max_length, size):
            yield Partition(parts)


def frame_exponents(lam, n):
    """
    Staircase frame (λ_1+n-1, λ_2+n-2, ..., λ_n) of a partition.
    Args:
        lam (Partition): Partition of length <= n.
        n (int): Number of coordinates.
    Returns:
        tuple: Strictly decreasing nonnegative integers.
    """
    padded = lam.padded(n)
    return tuple(part + n - 1 - i for i, part in enumerate(padded))


def partition_from_frame(frame):
    """Inverse of frame_exponents for a strictly decreasing nonnegative tuple."""
    n = len(frame)
    return Partition(tuple(k - (n - 1 - i) for i, k in enumerate(frame)))


def as_partition(value):
    """Accepts a Partition, a '3,1' string, or a sequence of parts."""
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        return Partition.parse(value)
    return Partition(tuple(value))


def as_composition(value):
    """Accepts a Composition, a single int, a '1,0' string, or a sequence."""
    if isinstance(value, Composition):
        return value
    if isinstance(value, int):
        return Composition((value,))
    if isinstance(value, str):
        return Composition.parse(value)
    return Composition(tuple(value))
