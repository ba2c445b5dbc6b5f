import os

PACKAGE_DIRECTORY = os.path.dirname(os.path.abspath(__file__))
DATA_DIRECTORY = os.environ.get(
    "NILIFT_DATA_DIRECTORY", os.path.join(PACKAGE_DIRECTORY, "data")
)
TEMPLATES_DIRECTORY = os.path.join(PACKAGE_DIRECTORY, "templates")

NAME_TABLE_FILE = "orbit_names.tsv"
GOLDEN_FILE = "goldens.tsv"

# Squared-length bound for the minimal lift search when no known lift is given
LIFT_NORM_BOUND = int(os.environ.get("NILIFT_LIFT_NORM_BOUND", "12"))
MAX_CATALOG_RANK = 8

OUTPUT_FORMATS = ["text", "csv", "json"]
LATTICES = ["adjoint", "simply-connected"]
EXCEPTIONAL_FAMILIES = ["E", "F", "G"]

# Multiple of a non-root-lattice fundamental weight that lands in the root lattice
CENTER_ORDERS = {"E6": 3, "E7": 2}


def set_data_directory(directory):
    global DATA_DIRECTORY
    os.environ["NILIFT_DATA_DIRECTORY"] = directory
    DATA_DIRECTORY = directory
    return DATA_DIRECTORY
