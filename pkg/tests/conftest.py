"""Shared constants for the test suite."""

from linial import catalog

# every family the catalog knows, at ranks up to 8
ALL_TYPES = (
    [f"A{r}" for r in range(1, 9)]
    + [f"B{r}" for r in range(2, 9)]
    + [f"C{r}" for r in range(2, 9)]
    + [f"D{r}" for r in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)

# a cheap representative subset used by the slower per-type loops
SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"]


def all_infos():
    return [catalog(label) for label in ALL_TYPES]
