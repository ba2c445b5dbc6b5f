from itertools import product

from nilift.models.subsystems import Subsystem


def label_heights(subsystem: Subsystem, labels) -> list[int]:
    """Values beta(h1) on the positive roots of the subsystem."""
    return [
        sum(c * label for c, label in zip(coordinates, labels) if c)
        for coordinates in subsystem.positive_coordinates
    ]


def is_distinguished(subsystem: Subsystem, labels) -> bool:
    # rank + #{beta: beta(h1) = 0} = #{beta: beta(h1) = 2}, counted over all roots
    zero = two = 0
    for height in label_heights(subsystem, labels):
        if height == 0:
            zero += 2
        elif height == 2:
            two += 1
    return subsystem.rank + zero == two


def distinguished_labels(subsystem: Subsystem) -> list[tuple[int, ...]]:
    candidates = product((2, 0), repeat=subsystem.rank)
    return [labels for labels in candidates if is_distinguished(subsystem, labels)]
