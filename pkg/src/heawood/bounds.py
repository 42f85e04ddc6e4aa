"""Heawood's colour bounds, known chromatic empire numbers and slack.

Every floor of a square-root expression is evaluated with ``math.isqrt``:
``floor((a + sqrt(D)) / 2) == (a + isqrt(D)) // 2`` for integers ``a`` and
``D >= 0``, so no floating point is involved.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from heawood.errors import HeawoodError

# stable provenance identifiers
FOUR_COLOUR = "four-colour"
MAP_COLOUR = "map-colour-theorem"
WESSEL_PLANE = "wessel-plane"
WESSEL_TORUS = "wessel-torus"
MONOTONE_LIFT = "monotone-lift"
TRIPLE_TORUS_2PIRE = "triple-torus-2pire"
HEAWOOD_BOUND = "heawood-empire-bound"


def _floor_half_root(a: int, disc: int) -> int:
    if disc < 0:
        raise HeawoodError("negative discriminant")
    return (a + math.isqrt(disc)) // 2


def heawood_upper(chi: int) -> int:
    """Colours sufficient for maps on a surface of Euler characteristic ``chi <= 0``."""
    if chi > 0:
        raise HeawoodError("theorem requires χ ≤ 0")
    return _floor_half_root(7, 49 - 24 * chi)


def empire_upper(g: int, m: int) -> int:
    """Heawood's bound on the chromatic empire number of the genus-``g`` surface."""
    if g < 0:
        raise HeawoodError("genus must be non-negative")
    if m < 1:
        raise HeawoodError("m must be positive")
    a = 6 * m + 1
    return _floor_half_root(a, a * a + 24 * (2 * g - 2))


def simplified_upper(g: int, m: int) -> int | None:
    """``6m`` on the sphere, ``6m + 1`` while ``1 <= g <= (m + 2)/2``, else None."""
    if g < 0 or m < 1:
        raise HeawoodError("need g >= 0 and m >= 1")
    if g == 0:
        return 6 * m
    if 2 * g <= m + 2:
        return 6 * m + 1
    return None


@dataclass(frozen=True)
class BoundResult:
    """Known bounds on the chromatic empire number ``h(g, m)``.

    ``conjectured_exact`` marks open cases where Heawood's conjecture says
    the upper bound is attained; it never affects ``status``.
    """

    genus: int
    m: int
    lower: int | None
    upper: int
    provenance: tuple[str, ...] = field(default=())
    conjectured_exact: bool = False

    def __post_init__(self) -> None:
        if self.lower is not None and self.lower > self.upper:
            raise HeawoodError("lower bound exceeds upper bound")

    @property
    def status(self) -> str:
        return "exact" if self.lower == self.upper else "open-interval"

    def to_dict(self) -> dict:
        data = asdict(self)
        data["provenance"] = list(self.provenance)
        data["status"] = self.status
        return data


def _exact_rules(g: int, m: int) -> tuple[int, tuple[str, ...]] | None:
    """The proven value of ``h(g, m)`` and the results it rests on, if known."""
    if g == 0:
        if m == 1:
            return 4, (FOUR_COLOUR,)
        return 6 * m, (WESSEL_PLANE,)
    if m == 1:
        return empire_upper(g, 1), (MAP_COLOUR,)
    if m >= 2 * g - 2:
        rules = (WESSEL_TORUS,) if g == 1 else (WESSEL_TORUS, MONOTONE_LIFT)
        return 6 * m + 1, rules
    if (g, m) == (3, 2):
        return 14, (TRIPLE_TORUS_2PIRE,)
    return None


def known_value(g: int, m: int) -> BoundResult:
    if g < 0 or m < 1:
        raise HeawoodError("need g >= 0 and m >= 1")
    upper = empire_upper(g, m)
    exact = _exact_rules(g, m)
    if exact is not None:
        value, rules = exact
        return BoundResult(g, m, value, value, rules)
    # a map on a lower-genus surface also lives on this one
    lower = max(
        (known[0] for gg in range(g) if (known := _exact_rules(gg, m)) is not None),
        default=None,
    )
    return BoundResult(g, m, lower, upper, (MONOTONE_LIFT, HEAWOOD_BOUND), conjectured_exact=True)


def bound_table(gmax: int, mmax: int) -> list[BoundResult]:
    return [known_value(g, m) for g in range(gmax + 1) for m in range(1, mmax + 1)]


def bound_table_markdown(gmax: int, mmax: int) -> str:
    header = "| g \\ m | " + " | ".join(str(m) for m in range(1, mmax + 1)) + " |"
    rule = "|---" * (mmax + 1) + "|"
    lines = [header, rule]
    for g in range(gmax + 1):
        cells = []
        for m in range(1, mmax + 1):
            r = known_value(g, m)
            cells.append(str(r.upper) if r.status == "exact" else f"{r.lower}–{r.upper}")
        lines.append(f"| {g} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def slack(e: int, c: int) -> int:
    """How far an embedding with ``e`` edges and ``c`` faces is from a triangulation."""
    return 2 * e - 3 * c


def uniform_slack(g: int, m: int) -> int:
    """Slack of a uniform complete m-pire graph on ``empire_upper(g, m)`` empires
    embedded on the genus-``g`` surface."""
    if g < 1 or m < 1:
        raise HeawoodError("need g >= 1 and m >= 1")
    h = empire_upper(g, m)
    v = h * m
    e = h * (h - 1) // 2
    c = e - v + (2 - 2 * g)
    return slack(e, c)


def vertex_removal_budget(g: int, m: int) -> int:
    """Vertices that can be dropped before the slack would go negative.

    Dropping a vertex keeps the edges and adds a face, costing 3 slack.
    """
    return uniform_slack(g, m) // 3
