from nilift.models.base import Family


def connected_components(matrix) -> list[list[int]]:
    size = len(matrix)
    seen: set[int] = set()
    components = []
    for start in range(size):
        if start in seen:
            continue
        component = []
        stack = [start]
        seen.add(start)
        while stack:
            node = stack.pop()
            component.append(node)
            for other in range(size):
                if other not in seen and matrix[node][other]:
                    seen.add(other)
                    stack.append(other)
        components.append(sorted(component))
    return components


def _walk(start: int, neighbours: dict[int, list[int]], previous: int | None) -> list[int]:
    path = [start]
    while True:
        following = [node for node in neighbours[path[-1]] if node != previous]
        if not following:
            return path
        previous = path[-1]
        path.append(following[0])


def identify_component(matrix, indices: list[int]) -> tuple[Family, int, list[int]]:
    """Type of a connected Cartan matrix block, with its nodes in Bourbaki numbering."""
    rank = len(indices)
    neighbours = {a: [b for b in indices if b != a and matrix[a][b]] for a in indices}
    if rank == 1:
        return Family.A, 1, list(indices)
    # matrix[a][b] < -1 means a is long and b is short
    multiple = [(a, b) for a in indices for b in neighbours[a] if matrix[a][b] < -1]
    branches = [a for a in indices if len(neighbours[a]) == 3]
    if multiple:
        long_node, short_node = multiple[0]
        if matrix[long_node][short_node] == -3:
            return Family.G, 2, [short_node, long_node]
        if rank == 2:
            return Family.B, 2, [long_node, short_node]
        if len(neighbours[long_node]) == 2 and len(neighbours[short_node]) == 2:
            long_side = _walk(long_node, neighbours, short_node)
            short_side = _walk(short_node, neighbours, long_node)
            return Family.F, 4, list(reversed(long_side)) + short_side
        if len(neighbours[short_node]) == 1:
            return Family.B, rank, list(reversed(_walk(short_node, neighbours, None)))
        return Family.C, rank, list(reversed(_walk(long_node, neighbours, None)))
    if branches:
        branch = branches[0]
        arms = sorted(
            (_walk(start, neighbours, branch) for start in neighbours[branch]),
            key=lambda arm: (len(arm), arm),
        )
        lengths = [len(arm) for arm in arms]
        if lengths[:2] == [1, 1]:
            return Family.D, rank, list(reversed(arms[2])) + [branch] + arms[0] + arms[1]
        if lengths[:2] != [1, 2] or rank not in (6, 7, 8):
            raise RuntimeError(f"unexpected branched diagram with arms {lengths}")
        short_arm, middle_arm, long_arm = arms
        return Family.E, rank, [middle_arm[1], short_arm[0], middle_arm[0], branch] + long_arm
    leaves = sorted(a for a in indices if len(neighbours[a]) == 1)
    return Family.A, rank, _walk(leaves[0], neighbours, None)
