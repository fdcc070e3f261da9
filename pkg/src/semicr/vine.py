"""D-vine bookkeeping for the counterfactual joint distributions.

The estimation pipeline never evaluates the full pair-copula density; the
vine is the identification ledger. Each edge of the decomposition is tagged
as identified from observed same-arm data, as carrying a sensitivity
correlation, or as not needed by the estimand, and the tagged sensitivity
edges are cross-checked against the correlation parameters the estimators
actually consume.
"""

from dataclasses import dataclass
from enum import Enum

from .data_model import Mode


class EdgeTag(Enum):
    IDENTIFIED = "identified"
    SENSITIVITY = "sensitivity"
    UNNEEDED = "unneeded"


@dataclass(frozen=True)
class Edge:
    """Conditioned pair plus conditioning set, in vine order."""

    pair: tuple
    given: tuple

    def key(self):
        return (frozenset(self.pair), frozenset(self.given))

    def __str__(self):
        base = f"({self.pair[0]}, {self.pair[1]}"
        if self.given:
            return base + " | " + ", ".join(self.given) + ")"
        return base + ")"


@dataclass(frozen=True)
class VineTree:
    order: tuple
    levels: tuple  # levels[l-1] holds the d-l edges of tree l

    @property
    def edges(self):
        return [e for level in self.levels for e in level]


def build_dvine(order):
    """D-vine over ``order``: tree l pairs variables i and i+l conditioned on
    everything strictly between them."""
    order = tuple(order)
    if len(order) < 2:
        raise ValueError("a vine needs at least two variables")
    if len(set(order)) != len(order):
        raise ValueError(f"duplicate labels in {order}")
    d = len(order)
    levels = []
    for l in range(1, d):
        level = tuple(
            Edge(pair=(order[i], order[i + l]), given=tuple(order[i + 1 : i + l]))
            for i in range(d - l)
        )
        levels.append(level)
    return VineTree(order=order, levels=tuple(levels))


def classify_edges(vine, same_arm_identified, needed):
    """Tag every edge; unneeded beats identified beats sensitivity."""
    tags = {}
    for edge in vine.edges:
        if not needed(edge):
            tags[edge.key()] = EdgeTag.UNNEEDED
        elif same_arm_identified(edge):
            tags[edge.key()] = EdgeTag.IDENTIFIED
        else:
            tags[edge.key()] = EdgeTag.SENSITIVITY
    return tags


# Variable labels, ordered so adjacent pairs in tree 1 are the observable
# same-arm joints. Suffix encodes the arm.
ONE_TERMINAL_ORDER = ("prog@1", "death@1", "death@0", "prog@0")
TWO_TERMINAL_ORDER = (
    "prog@1",
    "death_cvd@1",
    "death_other@1",
    "death_other@0",
    "death_cvd@0",
    "prog@0",
)


def _arm(label):
    return label.rsplit("@", 1)[1]


def _is_progression(label):
    return label.startswith("prog@")


def same_arm_predicate(edge):
    arms = {_arm(v) for v in edge.pair} | {_arm(v) for v in edge.given}
    return len(arms) == 1


def needed_predicate(edge):
    return not all(_is_progression(v) for v in edge.pair)


def _key(a, b, given):
    return (frozenset((a, b)), frozenset(given))


def sensitivity_parameter_map(mode):
    """Map each sensitivity edge to the correlation that parameterizes it.

    Edges forced to conditional independence carry the fixed value 0, so the
    ledger stays one-parameter-per-edge.
    """
    if mode is Mode.ONE_TERMINAL:
        p1, d1, d0, p0 = ONE_TERMINAL_ORDER
        return {
            _key(d1, d0, ()): "rho",
            _key(p1, d0, (d1,)): "rho_star_1",
            _key(p0, d1, (d0,)): "rho_star_0",
        }
    p1, c1, o1, o0, c0, p0 = TWO_TERMINAL_ORDER
    return {
        _key(o1, o0, ()): "rho",
        _key(c1, o0, (o1,)): "rho_star_1",
        _key(c0, o1, (o0,)): "rho_star_0",
        _key(c1, c0, (o1, o0)): "rho_star_star",
        # conditional cross-independence of progression: fixed zero
        _key(p1, o0, (c1, o1)): "zero",
        _key(p0, o1, (o0, c0)): "zero",
        _key(p1, c0, (c1, o1, o0)): "zero",
        _key(p0, c1, (o0, c0, o1)): "zero",
    }


def decomposition(mode):
    """Vine, tags, and parameter map for one estimand mode; consistency
    between the tagging and the parameter map is asserted."""
    order = ONE_TERMINAL_ORDER if mode is Mode.ONE_TERMINAL else TWO_TERMINAL_ORDER
    vine = build_dvine(order)
    tags = classify_edges(vine, same_arm_predicate, needed_predicate)
    params = sensitivity_parameter_map(mode)
    sensitivity_keys = {k for k, t in tags.items() if t is EdgeTag.SENSITIVITY}
    if sensitivity_keys != set(params):
        raise AssertionError("sensitivity tagging and parameter map disagree")
    return vine, tags, params


def format_decomposition(mode):
    """Indented text rendering of the tree levels and tags."""
    vine, tags, params = decomposition(mode)
    lines = [f"{mode.value} decomposition over ({', '.join(vine.order)})"]
    for l, level in enumerate(vine.levels, start=1):
        lines.append(f"tree {l}:")
        for edge in level:
            tag = tags[edge.key()]
            note = tag.value
            if tag is EdgeTag.SENSITIVITY:
                param = params[edge.key()]
                note += "  [independence, fixed 0]" if param == "zero" else f"  [{param}]"
            lines.append(f"  {str(edge):<58s} {note}")
    return "\n".join(lines)
