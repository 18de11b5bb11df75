"""Nash equilibria of bimatrix games and the contestant's best-response analysis.

`mixed_nash` enumerates the vertices of each player's best-response
polyhedron exactly and pairs them by complementarity, which yields every
extreme equilibrium; equilibria sharing a vertex are convexly connected,
so connected groups are reported as components and flagged when they
carry a continuum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .game import CONTESTANT_LABELS, HOST_LABELS
from .matrices import (
    Bimatrix,
    PayoffMatrix,
    expected_payoff,
    payoffs_vs_columns,
    payoffs_vs_rows,
)
from .polytope import enumerate_vertices
from .strategies import MixedStrategy, car_marginal


@dataclass(frozen=True)
class NashEquilibrium:
    contestant: MixedStrategy
    host: MixedStrategy
    payoffs: tuple[Fraction, Fraction]
    kind: str  # "pure" or "mixed"
    component: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "contestant": self.contestant.to_json_dict(),
            "host": self.host.to_json_dict(),
            "payoffs": [str(self.payoffs[0]), str(self.payoffs[1])],
            "kind": self.kind,
            "component": self.component,
        }


@dataclass(frozen=True)
class NashComponent:
    """A connected group of extreme equilibria; degenerate means a continuum."""

    index: int
    equilibrium_indices: tuple[int, ...]
    degenerate: bool


@dataclass(frozen=True)
class MixedNashResult:
    equilibria: tuple[NashEquilibrium, ...]
    components: tuple[NashComponent, ...]

    def __iter__(self):
        return iter(self.equilibria)

    def __len__(self) -> int:
        return len(self.equilibria)

    def to_json_dict(self) -> dict:
        return {
            "equilibria": [e.to_json_dict() for e in self.equilibria],
            "components": [
                {
                    "index": c.index,
                    "equilibria": list(c.equilibrium_indices),
                    "degenerate": c.degenerate,
                }
                for c in self.components
            ],
        }


def is_equilibrium(bimatrix: Bimatrix, p: MixedStrategy, q: MixedStrategy) -> bool:
    """Exact deviation test: no pure deviation improves either player."""
    cp = expected_payoff(p, bimatrix.contestant, q)
    hp = expected_payoff(p, bimatrix.host, q)
    if any(v > cp for v in payoffs_vs_rows(bimatrix.contestant, q)):
        return False
    return not any(v > hp for v in payoffs_vs_columns(p, bimatrix.host))


def equilibrium_payoffs(
    bimatrix: Bimatrix, p: MixedStrategy, q: MixedStrategy
) -> tuple[Fraction, Fraction]:
    return (
        expected_payoff(p, bimatrix.contestant, q),
        expected_payoff(p, bimatrix.host, q),
    )


def pure_nash(bimatrix: Bimatrix) -> list[NashEquilibrium]:
    """All pure-profile cells from which neither player wants to deviate."""
    c, h = bimatrix.contestant, bimatrix.host
    out = []
    col_maxes = {
        col: max(c.column(col)) for col in c.col_labels
    }
    row_maxes = {row: max(h.row(row)) for row in h.row_labels}
    for r in c.row_labels:
        for col in c.col_labels:
            if c.entry(r, col) == col_maxes[col] and h.entry(r, col) == row_maxes[r]:
                out.append(
                    NashEquilibrium(
                        MixedStrategy.point_mass(c.row_labels, r),
                        MixedStrategy.point_mass(c.col_labels, col),
                        (c.entry(r, col), h.entry(r, col)),
                        "pure",
                    )
                )
    return out


def _response_vertices(matrix: PayoffMatrix, against: str):
    """Vertices of one player's best-response polyhedron.

    against="rows": points (q, u) with q in the column simplex and u an
    upper bound on every row payoff; the tight rows of a vertex are the
    pure best responses to q.  against="cols": points (p, w) bounding the
    column payoffs, used for the host side with the host payoff matrix.
    """
    m, n = matrix.shape
    if against == "rows":
        size = n
        equalities = [([Fraction(1)] * n + [Fraction(0)], Fraction(1))]
        inequalities = [
            (list(row) + [Fraction(-1)], Fraction(0)) for row in matrix.entries
        ]
    else:
        size = m
        equalities = [([Fraction(1)] * m + [Fraction(0)], Fraction(1))]
        inequalities = [
            ([matrix.entries[i][j] for i in range(m)] + [Fraction(-1)], Fraction(0))
            for j in range(n)
        ]
    points = enumerate_vertices(size, 1, equalities, inequalities)
    records = []
    for point in sorted(points):
        probs = point[:size]
        bound = point[size]
        support = frozenset(i for i, v in enumerate(probs) if v > 0)
        if against == "rows":
            payoffs = [
                sum(row[j] * probs[j] for j in range(n) if probs[j]) for row in matrix.entries
            ]
        else:
            payoffs = [
                sum(matrix.entries[i][j] * probs[i] for i in range(m) if probs[i])
                for j in range(n)
            ]
        tight = frozenset(k for k, v in enumerate(payoffs) if v == bound)
        records.append((probs, bound, support, tight))
    return records


def mixed_nash(bimatrix: Bimatrix) -> MixedNashResult:
    """Every extreme Nash equilibrium, grouped into connected components.

    Complementary vertex pairs of the two best-response polyhedra are
    exactly the extreme equilibria; two extreme equilibria sharing a
    vertex span a segment of equilibria, so shared vertices merge their
    components and any component with more than one extreme point is
    flagged as a (degenerate) continuum.
    """
    c, h = bimatrix.contestant, bimatrix.host
    q_vertices = _response_vertices(c, "rows")
    p_vertices = _response_vertices(h, "cols")

    pairs: list[tuple[int, int]] = []
    for pi, (p_probs, _, p_support, p_tight) in enumerate(p_vertices):
        for qi, (q_probs, _, q_support, q_tight) in enumerate(q_vertices):
            if p_support <= q_tight and q_support <= p_tight:
                pairs.append((pi, qi))

    parent = list(range(len(pairs)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        parent[find(i)] = find(j)

    by_p: dict[int, int] = {}
    by_q: dict[int, int] = {}
    for idx, (pi, qi) in enumerate(pairs):
        if pi in by_p:
            union(idx, by_p[pi])
        else:
            by_p[pi] = idx
        if qi in by_q:
            union(idx, by_q[qi])
        else:
            by_q[qi] = idx

    roots: dict[int, int] = {}
    component_of: list[int] = []
    for idx in range(len(pairs)):
        root = find(idx)
        if root not in roots:
            roots[root] = len(roots)
        component_of.append(roots[root])

    equilibria = []
    for idx, (pi, qi) in enumerate(pairs):
        p_probs = p_vertices[pi][0]
        q_probs = q_vertices[qi][0]
        p = MixedStrategy(c.row_labels, tuple(p_probs))
        q = MixedStrategy(c.col_labels, tuple(q_probs))
        kind = "pure" if len(p.support()) == 1 and len(q.support()) == 1 else "mixed"
        equilibria.append(
            NashEquilibrium(
                p, q, equilibrium_payoffs(bimatrix, p, q), kind, component_of[idx]
            )
        )

    members: dict[int, list[int]] = {}
    for idx, comp in enumerate(component_of):
        members.setdefault(comp, []).append(idx)
    components = tuple(
        NashComponent(comp, tuple(idxs), len(idxs) > 1)
        for comp, idxs in sorted(members.items())
    )
    return MixedNashResult(tuple(equilibria), components)


# --- best responses against a known host mixture ---------------------------


@dataclass(frozen=True)
class Exclusion:
    strategy: str
    rule: str  # "I", "II" or "NN"
    payoff: Fraction


@dataclass(frozen=True)
class BestResponseReport:
    value: Fraction
    best_pure_set: tuple[str, ...]
    excluded: tuple[Exclusion, ...]
    pi: tuple[Fraction, Fraction, Fraction] | None

    def to_json_dict(self) -> dict:
        return {
            "value": str(self.value),
            "best_pure_set": list(self.best_pure_set),
            "excluded": [
                {"strategy": e.strategy, "rule": e.rule, "payoff": str(e.payoff)}
                for e in self.excluded
            ],
            "pi": None if self.pi is None else [str(x) for x in self.pi],
        }


def best_response(matrix: PayoffMatrix, host: MixedStrategy) -> BestResponseReport:
    """Exact argmax over the pure rows against a host mixture.

    On the canonical 12x6 grid the report also carries the host's
    car-placement marginal pi (the best-response value always equals
    1 - min(pi)) and the exclusion list: staying plans priced out by the
    reveal weights (rules I and II) and never-switch plans that fall short
    of the value.
    """
    if host.labels != matrix.col_labels:
        raise ValueError("host strategy labels do not match the matrix columns")
    payoffs = payoffs_vs_rows(matrix, host)
    value = max(payoffs)
    best = tuple(l for l, v in zip(matrix.row_labels, payoffs) if v == value)

    pi = None
    excluded: list[Exclusion] = []
    if matrix.row_labels == CONTESTANT_LABELS and matrix.col_labels == HOST_LABELS:
        pi = car_marginal(host)
        by_label = dict(zip(matrix.row_labels, payoffs))
        for door in "123":
            if host.prob_of(f"{door}L") > 0:
                label = f"{door}SN"
                excluded.append(Exclusion(label, "I", by_label[label]))
            if host.prob_of(f"{door}R") > 0:
                label = f"{door}NS"
                excluded.append(Exclusion(label, "II", by_label[label]))
        for door, pi_door in zip("123", pi):
            if pi_door < value:
                excluded.append(Exclusion(f"{door}NN", "NN", pi_door))
    return BestResponseReport(value, best, tuple(excluded), pi)


@dataclass(frozen=True)
class ResponseClassification:
    case: int  # 1, 2 or 3
    support: tuple[str, ...]
    strategy: MixedStrategy | None  # pinned exactly in cases 1 and 3


def classify_equilibrium_response(
    pi: tuple[Fraction, Fraction, Fraction], host_fully_supported: bool
) -> ResponseClassification:
    """Predicted support of the contestant's strategy in an equilibrium
    where the host mixes every reveal action.

    With the car-placement weights sorted decreasingly: a unique lightest
    door forces the pure always-switch plan on it (case 1); two tied
    lightest doors allow mixtures of their two always-switch plans
    (case 2); the uniform marginal forces the uniform always-switch
    mixture (case 3).
    """
    if not host_fully_supported:
        raise ValueError("classification requires a fully supported host strategy")
    pi = tuple(Fraction(x) for x in pi)
    if len(pi) != 3 or any(x < 0 for x in pi) or sum(pi) != 1:
        raise ValueError("pi must be a probability vector over the three doors")
    if min(pi) == 0:
        raise ValueError("a fully supported host cannot have a zero car weight")
    low = min(pi)
    minimizers = tuple(d for d, x in zip((1, 2, 3), pi) if x == low)
    support = tuple(f"{d}SS" for d in minimizers)
    if len(minimizers) == 1:
        return ResponseClassification(
            1, support, MixedStrategy.point_mass(CONTESTANT_LABELS, support[0])
        )
    if len(minimizers) == 2:
        return ResponseClassification(2, support, None)
    weights = {l: Fraction(1, 3) for l in support}
    return ResponseClassification(
        3, support, MixedStrategy.from_mapping(CONTESTANT_LABELS, weights)
    )


@dataclass(frozen=True)
class HostIndifferenceReport:
    values: tuple[Fraction, ...]  # contestant-mixture payoff to the host, per column
    is_constant: bool
    closing_case: int | None  # 1, 2 or 3 when an always-switch support pins it

    def to_json_dict(self) -> dict:
        return {
            "values": [str(v) for v in self.values],
            "is_constant": self.is_constant,
            "closing_case": self.closing_case,
        }


def verify_host_indifference(
    host_matrix: PayoffMatrix, contestant: MixedStrategy
) -> HostIndifferenceReport:
    """Is the host indifferent across all pure replies to this contestant mixture?

    Also classifies which equalizing pattern applies when the support is a
    set of always-switch plans: a single such row constant on its own
    (case 1), a two-row mixture equalizing (case 2), or the uniform
    three-row average equalizing (case 3).
    """
    values = payoffs_vs_columns(contestant, host_matrix)
    constant = len(set(values)) == 1
    support = contestant.support()
    case = None
    if support and all(l.endswith("SS") for l in support) and constant:
        if len(support) == 3:
            if all(contestant.prob_of(l) == Fraction(1, 3) for l in support):
                case = 3
        else:
            case = len(support)
    return HostIndifferenceReport(values, constant, case)
