"""Set partitions of a finite ground set."""

from typing import Iterator, List, Sequence, Tuple

SetPartition = Tuple[Tuple[int, ...], ...]


def set_partitions(elements: Sequence[int]) -> Iterator[SetPartition]:
    """All partitions of `elements` into nonempty blocks (Bell-number many)."""
    elements = list(elements)
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    for partial in set_partitions(rest):
        blocks: List[Tuple[int, ...]] = list(partial)
        # first element joins an existing block, or opens its own
        for idx in range(len(blocks)):
            yield tuple(blocks[:idx] + [(first,) + blocks[idx]] + blocks[idx + 1:])
        yield ((first,),) + tuple(blocks)
