"""The finite rings used for brute-force comparisons."""

LOCAL_RINGS = (
    "Z/2", "Z/3", "Z/4", "Z/8", "Z/9", "Z/16", "Z/25", "Z/27",
    "GF(4)", "GF(8)", "GF(9)",
    "Z/2[x]/(x^2)", "Z/2[x]/(x^3)", "Z/3[x]/(x^2)",
)

NONLOCAL_RINGS = (
    "Z/6", "Z/10", "Z/12", "Z/15", "Z/2 x Z/2", "Z/2 x Z/3 x Z/3",
)

ALL_RINGS = LOCAL_RINGS + NONLOCAL_RINGS

# E_2(O_d)^ab for d < 0, written out independently of the library table
NEGATIVE_D_TABLE = {
    -1: "Z/2 x Z/2",
    -2: "Z x Z/6",
    -3: "Z/3",
    -5: "Z x Z/12",
    -6: "Z x Z/12",
    -7: "Z x Z/4",
    -10: "Z x Z/12",
    -11: "Z x Z/3",
    -13: "Z x Z/12",
    -15: "Z x Z/12",
}


def negative_m_table(d: int) -> str:
    """``O_d/M`` for ``d < 0``: ``M = 2O`` at ``-1``, ``O`` modulo ``3`` at ``-3``, else ``12Z``."""
    return {-1: "Z/2 x Z/2", -3: "Z/3"}.get(d, "Z x Z/12")
