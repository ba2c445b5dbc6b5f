from nilift.balacarter.distinguished import enumerate_distinguished
from nilift.balacarter.orbits import find_orbit
from nilift.balacarter.subsystems import cached_subsystem, make_subset
from nilift.balacarter.torsion import torsion_data
from nilift.exceptions import NiliftException
from nilift.lifting.descent import character, pulled_back, residue
from nilift.lifting.weights import make_levi_weight, weight_orbit
from nilift.logger import log
from nilift.models.base import Basis, Family
from nilift.models.goldens import ExampleResult, WorkedExample
from nilift.models.orbits import PseudoLeviPair
from nilift.models.roots import CartanType, Weight, WeylWord
from nilift.rootdata.root_system import build_root_system
from nilift.rootdata.weyl import apply_word, diagram_of, dominate

E6 = CartanType(family=Family.E, rank=6)

WORKED_EXAMPLES = [
    # D4 pair inside the simple roots: h1 = 4a3v + 6a4v + 4a5v + 4a2v
    WorkedExample(
        name="E6 D4(a1) descent of w2",
        group=E6,
        orbit_name="D4(a1)",
        nodes=(2, 3, 4, 5),
        h1_values=(-4, 2, 2, 0, 2, -4),
        word=WeylWord(letters=(4, 3, 5, 2, 4, 3, 5, 1, 6)),
        diagram=(0, 0, 0, 2, 0, 0),
        weight=(0, 1, 0, 0, 0, 0),
        images=((0, 1, 1, 2, 1, 0), (0, 1, 1, 1, 1, 0)),
        residues=(0, 0),
        trace=2,
    ),
    # 3A2 pair through the lowest root, tau = a4
    WorkedExample(
        name="E6 D4(a1) trace of w2 on 3A2",
        group=E6,
        orbit_name="D4(a1)",
        nodes=(0, 1, 2, 3, 5, 6),
        h1_values=(2, 2, 2, -6, 2, 2),
        word=WeylWord(letters=(4, 3, 5, 2, 1, 4, 6, 3, 5, 2, 1, 4, 6, 3, 5, 2, 4)),
        diagram=(0, 0, 0, 2, 0, 0),
        weight=(0, 1, 0, 0, 0, 0),
        images=((0, 0, 0, -1, 0, 0), (0, -1, -1, -2, -1, 0)),
        residues=(2, 1),
        trace=-1,
    ),
]


def _example_pair(example: WorkedExample) -> PseudoLeviPair:
    rs = build_root_system(example.group)
    subset = make_subset(rs, example.nodes)
    h1 = rs.coweight_from_values(example.h1_values)
    for labeling in enumerate_distinguished(cached_subsystem(rs, subset)):
        if labeling.h1 == h1:
            return PseudoLeviPair(
                labeling=labeling,
                word=example.word,
                torsion=torsion_data(rs, subset),
                diagram=example.diagram,
            )
    raise RuntimeError(
        f"no distinguished labeling of {subset} has alpha values {example.h1_values}"
    )


def check_example(example: WorkedExample) -> ExampleResult:
    """Replays a hand-written pair: w(h1) = h, the w^-1 images of the weights and their residues."""
    rs = build_root_system(example.group)
    messages = []
    h1 = rs.coweight_from_values(example.h1_values)
    image = diagram_of(rs, apply_word(rs, example.word, h1))
    if image != example.diagram:
        messages.append(f"{example.word} sends h1 to {image}, not {example.diagram}")
    dominant, _ = dominate(rs, h1)
    if diagram_of(rs, dominant) != example.diagram:
        messages.append(f"h1 dominates to {diagram_of(rs, dominant)}, not {example.diagram}")
    try:
        orbit = find_orbit(rs, example.orbit_name)
        if orbit.diagram != example.diagram:
            messages.append(f"{example.orbit_name} has diagram {orbit.diagram}")
        pair = _example_pair(example)
        lw = make_levi_weight(orbit, Weight(coords=example.weight, basis=Basis.Fundamental))
        weights = weight_orbit(lw).weights
        images = tuple(tuple(int(c) for c in pulled_back(rs, pair, weight)) for weight in weights)
        if images != example.images:
            messages.append(f"w^-1 images {images} differ from {example.images}")
        residues = tuple(residue(rs, pair, weight) for weight in weights)
        if residues != example.residues:
            messages.append(f"residues {residues} differ from {example.residues}")
        trace = character(lw, pair).value
        if trace != example.trace:
            messages.append(f"trace {trace} differs from {example.trace}")
    except NiliftException as e:
        messages.append(str(e))
    for message in messages:
        log.debug(f"{example.name}: {message}")
    return ExampleResult(example=example, passed=not messages, messages=tuple(messages))


def check_examples() -> list[ExampleResult]:
    return [check_example(example) for example in WORKED_EXAMPLES]
