# youngbooks/ppartitions.py
from dataclasses import dataclass

from partitions.partition import Partition
from qexact.laurent_series import LaurentSeries
from utils.errors import LengthExceededError


@dataclass(frozen=True, eq=False)
class PPartition:
    """An order-reversing map from the poset cells to the nonnegative integers."""

    poset: object
    values: tuple  # values[i] belongs to poset.cells[i]

    def __post_init__(self):
        if any(v < 0 for v in self.values):
            raise ValueError("P-partition values must be nonnegative")
        if any(self.values[lo] < self.values[hi] for lo, hi in self.poset.covers):
            raise ValueError("P-partition values must weakly decrease along covers")

    @property
    def size(self):
        return sum(self.values)

    @property
    def profile(self):
        """The partition read off the diagonal cells."""
        return Partition(tuple(self.values[i] for i in self.poset.diagonal_indices))


def iter_ppartitions(poset, K, profile=None):
    """
    Streams the P-partitions with |σ| <= K (optionally with a fixed diagonal profile).
    Cells are assigned in reverse omega order, so every upper cover is already set.
    """
    diagonal_target = {}
    if profile is not None:
        if profile.length > poset.n:
            raise LengthExceededError(f"Profile {profile} is longer than the {poset.n} diagonal cells")
        diagonal_target = dict(zip(poset.diagonal_indices, profile.padded(poset.n)))
        if profile.size > K:
            return
    values = [0] * poset.size

    def assign(index, budget):
        if index < 0:
            yield PPartition(poset, tuple(values))
            return
        low = max((values[j] for j in poset.upper_covers[index]), default=0)
        if index in diagonal_target:
            choices = [diagonal_target[index]] if low <= diagonal_target[index] <= budget else []
        else:
            choices = range(low, budget + 1)
        for value in choices:
            values[index] = value
            yield from assign(index - 1, budget - value)

    yield from assign(poset.size - 1, K)


def ppartition_gf(poset, K, profile=None):
    """
    Sum of q^{|σ|} over P-partitions σ with |σ| <= K, modulo q^{K+1}.
    Args:
        poset (StaircasePoset): The shape.
        K (int): Size budget.
        profile (Partition, optional): Required diagonal reading.
    Returns:
        LaurentSeries: Truncated at q^{K+1}.
    """
    if K < 0:
        raise ValueError(f"K must be nonnegative, got {K}")
    counts = {}
    for sigma in iter_ppartitions(poset, K, profile):
        counts[sigma.size] = counts.get(sigma.size, 0) + 1
    return LaurentSeries({2 * size: c for size, c in counts.items()}, trunc=2 * K + 2)
