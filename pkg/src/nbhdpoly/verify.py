"""Cross-check every applicable method against the brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .decomposition import (
    TheoremMode,
    cartesian_poly,
    cut_vertex_split_poly,
    disjoint_union_poly,
    edge_addition_general,
    edge_addition_restricted,
    has_length3_path,
    independent_cut_split_poly,
    join_poly,
    matching_cut_poly,
    vertex_attachment_poly,
)
from .errors import CostGuardExceeded, PreconditionError
from .graph import (
    Graph,
    add_edge,
    attach_vertex,
    complement,
    connected_components,
    induced_subgraph,
)
from .oracle import neighborhood_polynomial_oracle
from .polynomial import Polynomial
from .reduction import neighborhood_polynomial_reduction
from .solve import Limits, auto_solver

PASS, WARN, FAIL, SKIP = "PASS", "WARN", "FAIL", "SKIP"


def first_difference(p: Polynomial, q: Polynomial) -> Optional[tuple[int, int, int]]:
    """``(k, p_k, q_k)`` for the lowest degree where the coefficients differ."""
    for k in range(max(len(p), len(q))):
        if p[k] != q[k]:
            return k, p[k], q[k]
    return None


@dataclass
class MethodResult:
    target: str
    method: str
    status: str
    polynomial: Optional[Polynomial] = None
    referee: Optional[Polynomial] = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"target": self.target, "method": self.method, "status": self.status, "detail": self.detail}
        if self.polynomial is not None:
            out["polynomial"] = self.polynomial.to_json()
        if self.referee is not None:
            out["oracle"] = self.referee.to_json()
        return out


@dataclass
class VerifyReport:
    n: int
    m: int
    results: list[MethodResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    def count(self, status: str) -> int:
        return sum(r.status == status for r in self.results)

    def equality_matrix(self, target: str = "G") -> tuple[list[str], list[list[bool]]]:
        rows = [r for r in self.results if r.target == target and r.polynomial is not None]
        names = [r.method for r in rows]
        matrix = [[a.polynomial == b.polynomial for b in rows] for a in rows]
        return names, matrix

    def render_text(self) -> str:
        lines = [f"graph: n={self.n} m={self.m}"]
        for r in self.results:
            label = r.method if r.target == "G" else f"{r.method} on {r.target}"
            if r.status == SKIP:
                lines.append(f"SKIP  {label}: {r.detail}")
            else:
                line = f"{r.status}  {label}: {r.polynomial}"
                if r.detail:
                    line += f"  ({r.detail})"
                lines.append(line)
        names, matrix = self.equality_matrix()
        if len(names) > 1:
            lines.append("agreement on G:")
            width = max(len(s) for s in names)
            for name, row in zip(names, matrix):
                lines.append(f"  {name:<{width}}  " + " ".join("=" if e else "x" for e in row))
        lines.append(
            f"summary: {self.count(PASS)} pass, {self.count(WARN)} warn, "
            f"{self.count(FAIL)} fail, {self.count(SKIP)} skipped"
        )
        return "\n".join(lines)

    def to_json(self) -> dict:
        names, matrix = self.equality_matrix()
        return {
            "n": self.n,
            "m": self.m,
            "ok": self.ok,
            "results": [r.to_json() for r in self.results],
            "agreement": {"methods": names, "matrix": matrix},
        }


def _judge(target: str, method: str, got: Polynomial, referee: Polynomial, primary: bool) -> MethodResult:
    diff = first_difference(got, referee)
    if diff is None:
        return MethodResult(target, method, PASS, got, referee)
    k, a, b = diff
    detail = f"differs from oracle {referee} at x^{k}: {a} vs {b}"
    return MethodResult(target, method, FAIL if primary else WARN, got, referee, detail)


def run_verify(
    G: Graph,
    limits: Limits = Limits(),
    cut_vertex: Optional[int] = None,
    cut_set: Optional[Sequence[int]] = None,
    cut_matching: Optional[Sequence[tuple[int, int]]] = None,
    attach: Optional[Sequence[int]] = None,
    add_edges: Optional[Sequence[tuple[int, int]]] = None,
    factors: Optional[tuple[Graph, Graph]] = None,
) -> VerifyReport:
    """Run the oracle, the reduction and every rule with a usable certificate.

    Edge-insertion rules are tried on every non-edge unless ``add_edges`` is
    given. Literal-mode mismatches are reported as WARN; a mismatch from any
    other method is a FAIL.
    """
    solver = auto_solver(limits)
    report = VerifyReport(G.n, G.m)
    out = report.results
    oracle = neighborhood_polynomial_oracle(G, limits.oracle_limit)
    out.append(MethodResult("G", "oracle", PASS, oracle, oracle, "referee"))

    try:
        red, _ = neighborhood_polynomial_reduction(G, limits.degree_guard, limits.term_budget)
        out.append(_judge("G", "reduction", red, oracle, True))
    except CostGuardExceeded as exc:
        out.append(MethodResult("G", "reduction", SKIP, detail=str(exc)))

    comps = connected_components(G)
    if len(comps) >= 2:
        G1, _ = induced_subgraph(G, comps[0])
        G2, _ = induced_subgraph(G, set(G.vertices()) - comps[0])
        out.append(_judge("G", "disjoint_union", disjoint_union_poly(solver(G1), solver(G2)), oracle, True))
    else:
        out.append(MethodResult("G", "disjoint_union", SKIP, detail="graph is connected"))

    co_comps = connected_components(complement(G))
    if len(co_comps) >= 2:
        side = co_comps[0]
        G1, _ = induced_subgraph(G, side)
        G2, _ = induced_subgraph(G, set(G.vertices()) - side)
        out.append(_judge("G", "join", join_poly(solver(G1), G1.n, solver(G2), G2.n), oracle, True))
    else:
        out.append(MethodResult("G", "join", SKIP, detail="complement is connected, so G is not a join"))

    if factors is not None:
        try:
            out.append(_judge("G", "cartesian", cartesian_poly(*factors, solver=solver), oracle, True))
        except PreconditionError as exc:
            out.append(MethodResult("G", "cartesian", SKIP, detail=str(exc)))
    else:
        out.append(MethodResult("G", "cartesian", SKIP, detail="no product factors known (use a grid/ladder/prism generator)"))

    if cut_vertex is not None:
        out.append(_judge("G", "cut_vertex", cut_vertex_split_poly(G, cut_vertex, solver), oracle, True))
    else:
        out.append(MethodResult("G", "cut_vertex", SKIP, detail="no --cut-vertex certificate"))

    if cut_set is not None:
        out.append(_judge("G", "independent_cut", independent_cut_split_poly(G, cut_set, solver), oracle, True))
    else:
        out.append(MethodResult("G", "independent_cut", SKIP, detail="no --cut-set certificate"))

    if cut_matching is not None:
        for mode in TheoremMode:
            got = matching_cut_poly(G, cut_matching, mode, solver)
            out.append(_judge("G", f"matching_cut[{mode.value}]", got, oracle, mode is TheoremMode.CORRECTED))
    else:
        out.append(MethodResult("G", "matching_cut", SKIP, detail="no --cut-matching certificate"))

    if attach is not None:
        target = f"G+v{sorted(set(attach))}"
        if G.n + 1 > limits.oracle_limit:
            out.append(MethodResult(target, "vertex_attachment", SKIP, detail="attached graph exceeds oracle limit"))
        else:
            referee = neighborhood_polynomial_oracle(attach_vertex(G, attach), limits.oracle_limit)
            got = vertex_attachment_poly(G, attach, base=oracle)
            out.append(_judge(target, "vertex_attachment", got, referee, True))
    else:
        out.append(MethodResult("G", "vertex_attachment", SKIP, detail="no --attach set"))

    user_edges = add_edges is not None
    if add_edges is None:
        add_edges = [(u, v) for u in G.vertices() for v in G.vertices() if u < v and not G.has_edge(u, v)]
    if not add_edges:
        out.append(MethodResult("G", "edge_addition", SKIP, detail="graph is complete"))
    for u, v in add_edges:
        target = f"G+{u}-{v}"
        if user_edges and (u == v or G.has_edge(u, v)):
            raise PreconditionError(f"cannot add edge ({u}, {v})")
        referee = neighborhood_polynomial_oracle(add_edge(G, u, v), limits.oracle_limit)
        if not G.adjacency[u] or not G.adjacency[v]:
            out.append(MethodResult(target, "edge_addition", SKIP, detail="an endpoint is isolated"))
            continue
        if has_length3_path(G, u, v):
            out.append(MethodResult(target, "edge_addition_restricted", SKIP, detail="path of length 3 joins the endpoints"))
        else:
            out.append(_judge(target, "edge_addition_restricted",
                              edge_addition_restricted(G, u, v, base=oracle), referee, True))
        for mode in TheoremMode:
            got = edge_addition_general(G, u, v, mode, base=oracle)
            out.append(_judge(target, f"edge_addition_general[{mode.value}]", got, referee,
                              mode is TheoremMode.CORRECTED))
    return report

