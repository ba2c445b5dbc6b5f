import re
from fractions import Fraction

from nilift.exceptions import InvalidPartitionException, WeightSyntaxException
from nilift.models.base import Family
from nilift.models.roots import CartanType

WEIGHT_TERM_REGEX = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*w(\d+)")
SUBSCRIPT_REGEX = re.compile(r"_\{?([0-9a-z]+)\}?")


def row_layout(cartan_type: CartanType) -> list[int]:
    """Node order used in printed tables: E types list alpha_2 last."""
    n = cartan_type.rank
    if cartan_type.family == Family.E:
        return [1] + list(range(3, n + 1)) + [2]
    return list(range(1, n + 1))


def to_row_layout(cartan_type: CartanType, labels) -> list:
    return [labels[node - 1] for node in row_layout(cartan_type)]


def from_row_layout(cartan_type: CartanType, labels) -> list:
    result = [None] * cartan_type.rank
    for node, label in zip(row_layout(cartan_type), labels):
        result[node - 1] = label
    return result


def format_diagram(cartan_type: CartanType, labels, compact: bool = False) -> str:
    row = [str(label) for label in to_row_layout(cartan_type, labels)]
    if compact:
        return "".join(row)
    if cartan_type.family == Family.E:
        return " ".join(row[:-1]) + " / " + row[-1]
    return " ".join(row)


def parse_diagram(cartan_type: CartanType, text: str) -> tuple[int, ...]:
    cleaned = re.sub(r"[\s/,()]", "", text)
    if len(cleaned) != cartan_type.rank or not cleaned.isdigit():
        raise WeightSyntaxException(f"'{text}' is not a weighted diagram of {cartan_type}")
    return tuple(from_row_layout(cartan_type, [int(ch) for ch in cleaned]))


def parse_weight(text: str, rank: int) -> tuple[Fraction, ...]:
    """Reads 'w4', 'w2-w7', '3w1', '0' or an explicit vector '0,1,0,0'."""
    stripped = text.strip().strip("()[]")
    if "," in stripped:
        try:
            values = [Fraction(value) for value in stripped.split(",")]
        except ValueError:
            raise WeightSyntaxException(f"cannot read a weight vector from '{text}'")
        if len(values) != rank:
            raise WeightSyntaxException(f"weight '{text}' does not have {rank} coordinates")
        return tuple(values)
    coords = [Fraction(0)] * rank
    if stripped == "0":
        return tuple(coords)
    position = 0
    compact = re.sub(r"\s+", "", stripped)
    for match in WEIGHT_TERM_REGEX.finditer(compact):
        if match.start() != position:
            break
        sign, coefficient, node = match.groups()
        node = int(node)
        if not 1 <= node <= rank:
            raise WeightSyntaxException(f"fundamental weight w{node} does not exist in rank {rank}")
        value = Fraction(coefficient) if coefficient else Fraction(1)
        coords[node - 1] += -value if sign == "-" else value
        position = match.end()
    if position != len(compact) or not compact:
        raise WeightSyntaxException(f"cannot read a weight from '{text}'")
    return tuple(coords)


def format_weight(coords) -> str:
    terms = []
    for node, value in enumerate(coords, start=1):
        if not value:
            continue
        magnitude = abs(value)
        coefficient = "" if magnitude == 1 else str(magnitude)
        sign = "-" if value < 0 else ("+" if terms else "")
        terms.append(f"{sign}{coefficient}w{node}")
    return "".join(terms) if terms else "0"


def parse_partition(text: str) -> tuple[int, ...]:
    try:
        parts = [int(part) for part in re.split(r"[\s,]+", text.strip().strip("()[]")) if part]
    except ValueError:
        raise InvalidPartitionException(f"cannot read a partition from '{text}'")
    if not parts or any(part <= 0 for part in parts):
        raise InvalidPartitionException(f"'{text}' is not a partition into positive parts")
    return tuple(sorted(parts, reverse=True))


def normalize_orbit_name(name: str) -> str:
    """Turns printed labels such as 'E_{8}(a_{7})' or '\\Tilde A_1' into 'E8(a7)' and '~A1'."""
    name = name.replace("$", "").replace("\\Tilde", "~").replace("\\tilde", "~")
    name = re.sub(r"~\s*\{?\s*([A-G])\s*\}?", r"~\1", name)
    name = SUBSCRIPT_REGEX.sub(r"\1", name)
    return re.sub(r"\s+", "", name)
