from nilift import config
from nilift.balacarter.orbits import bala_carter_pair, class_parameters
from nilift.lifting.descent import character, descends
from nilift.lifting.weights import make_levi_weight
from nilift.logger import log
from nilift.models.lifting import NodeReport, SimplyConnectedReport
from nilift.models.orbits import OrbitRecord
from nilift.models.roots import RootSystem


def simply_connected_report(rs: RootSystem, orbit: OrbitRecord) -> SimplyConnectedReport:
    """Descent of the fundamental weights at the nonzero nodes of the orbit's diagram.

    The central multiple is only checked for weights that descend; a weight outside
    the rational span leaves A^simp(e) equal to A^adj(e) and the check does not apply.
    """
    multiple = config.CENTER_ORDERS.get(str(rs.cartan_type), 1)
    trivial_pair = bala_carter_pair(orbit)
    nodes = []
    for node in orbit.nonzero_nodes:
        weight = rs.fundamental_weight(node)
        node_descends = descends(make_levi_weight(orbit, weight), trivial_pair)
        in_lattice = rs.in_root_lattice(weight)
        multiple_trivial = None
        if node_descends and not in_lattice:
            scaled = make_levi_weight(orbit, weight.scaled(multiple))
            multiple_trivial = all(
                character(scaled, pair).value == 1 for pair in class_parameters(orbit)
            )
        elif not node_descends:
            log.debug(f"w{node} does not descend on {orbit.name} of {rs.cartan_type}")
        nodes.append(
            NodeReport(
                node=node,
                descends=node_descends,
                in_root_lattice=in_lattice,
                multiple=multiple,
                multiple_trivial=multiple_trivial,
            )
        )
    report = SimplyConnectedReport(orbit=orbit, nodes=tuple(nodes))
    if not report.split_extension:
        log.warning(f"Orbit {orbit.name} of {rs.cartan_type} has a non-trivial central multiple")
    return report
