# inequalities/constructions.py
"""
Rebuild the extended graph of a scenario from its compatibility graph using
only graph rewrites: triangular eliminations, vertex splits, or triangular
eliminations followed by edge contractions. Every result uses the same copy
ids as extension.extended_graph, so equality (not just isomorphism) holds.
"""

from itertools import combinations
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from cutgeom.suspension import suspension
from exceptions import ScenarioError
from extension.extended import copy_id
from inequalities.contraction import edge_contract_graph
from inequalities.splitting import vertex_split_graph
from inequalities.triangular import triangular_eliminate_graph
from logger import StructuredLogger
from scenario.hypergraph import Graph
from scenario.scenario import Scenario, compatibility_graph, require_valid_scenario

logger = StructuredLogger("inequalities.constructions")


class ConstructionResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph: Graph
    steps: Tuple[str, ...]


def te_construction(s: Scenario) -> ConstructionResult:
    """Triangular eliminations only; needs every context to hold at most two measurements."""
    require_valid_scenario(s)
    if any(len(c) > 2 for c in s.contexts):
        raise ScenarioError("The triangular elimination construction needs contexts of size <= 2")
    g = compatibility_graph(s)
    steps: List[str] = []
    # current vertex standing for measurement m inside context i
    current = {(m, i): m for i, c in enumerate(s.contexts) for m in c}

    for x in s.measurements:
        owners = s.contexts_of(x)
        first = copy_id(x, owners[0] + 1)
        g = g.relabel({x: first})
        for i in range(len(s.contexts)):
            if current.get((x, i)) == x:
                current[(x, i)] = first
        steps.append(f"rename:{x}->{first}")
        created = []
        for i in owners[1:]:
            partner = [m for m in s.contexts[i] if m != x]
            if not partner:
                continue
            other = current[(partner[0], i)]
            new = copy_id(x, i + 1)
            g = triangular_eliminate_graph(
                g,
                [(first, other)],
                extra_edges=[(new, c) for c in created],
                names={(first, other): new},
            )
            created.append(new)
            current[(x, i)] = new
            steps.append(f"te:{first}|{other}->{new}")
    logger.debug("TE construction finished", steps=len(steps))
    return ConstructionResult(graph=g, steps=tuple(steps))


def split_construction(s: Scenario, apex: Optional[str] = None) -> ConstructionResult:
    """
    Vertex splits only. With `apex`, the construction starts from the
    suspension and the apex stays adjacent to every copy.
    """
    require_valid_scenario(s)
    g = compatibility_graph(s)
    if apex is not None:
        g = suspension(g, apex).graph
    steps: List[str] = []
    contexts = [list(c) for c in s.contexts]

    for x in s.measurements:
        owners = s.contexts_of(x)
        if len(owners) == 1:
            name = copy_id(x, owners[0] + 1)
            g = g.relabel({x: name})
            contexts[owners[0]] = [name if m == x else m for m in contexts[owners[0]]]
            steps.append(f"rename:{x}->{name}")
            continue
        cur = x
        previous: List[str] = []
        for step, i in enumerate(owners[:-1]):
            later = set()
            for k in owners[step + 1 :]:
                later.update(m for m in contexts[k] if m != cur)
            here = [m for m in contexts[i] if m != cur]
            S = [m for m in here if m not in later]
            B = [m for m in here if m in later] + previous + ([apex] if apex else [])
            T = sorted(later - set(here))
            s_name = copy_id(x, i + 1)
            last = step == len(owners) - 2
            t_name = copy_id(x, owners[-1] + 1) if last else f"{x}~{step + 1}"
            g = vertex_split_graph(g, cur, S, T, B, s_name=s_name, t_name=t_name)
            steps.append(f"split:{cur}->{s_name},{t_name}")
            contexts[i] = [s_name if m == cur else m for m in contexts[i]]
            for k in owners[step + 1 :]:
                contexts[k] = [t_name if m == cur else m for m in contexts[k]]
            previous.append(s_name)
            cur = t_name
    logger.debug("Split construction finished", steps=len(steps))
    return ConstructionResult(graph=g, steps=tuple(steps))


def te_contract_construction(s: Scenario) -> ConstructionResult:
    """
    One copy of each measurement per neighbor by triangular elimination, then
    contraction of the copies that share a context.
    """
    require_valid_scenario(s)
    for a, b in combinations(s.contexts, 2):
        if len(set(a) & set(b)) > 1:
            raise ScenarioError(
                "The TE and contraction construction needs every pair of measurements "
                "to share at most one context"
            )
    base = compatibility_graph(s)
    g = base
    steps: List[str] = []
    neighbor_copy = lambda x, y: f"{x}@{y}"  # noqa: E731
    # vertex currently carrying the edge between x and y, seen from x
    holder = {}
    for u, v in g.edges:
        holder[(u, v)] = u
        holder[(v, u)] = v

    for x in s.measurements:
        if len(s.contexts_of(x)) == 1:
            continue
        neighbors = sorted(base.neighbors(x))
        first = neighbor_copy(x, neighbors[0])
        g = g.relabel({x: first})
        holder[(x, neighbors[0])] = first
        steps.append(f"rename:{x}->{first}")
        created = [first]
        for y in neighbors[1:]:
            new = neighbor_copy(x, y)
            g = triangular_eliminate_graph(
                g,
                [(first, holder[(y, x)])],
                extra_edges=[(new, c) for c in created[1:]],
                names={(first, holder[(y, x)]): new},
            )
            holder[(x, y)] = new
            created.append(new)
            steps.append(f"te:{first}|{holder[(y, x)]}->{new}")

    for x in s.measurements:
        owners = s.contexts_of(x)
        for i in owners:
            target = copy_id(x, i + 1)
            members = [m for m in s.contexts[i] if m != x]
            if len(owners) == 1:
                g = g.relabel({x: target})
                steps.append(f"rename:{x}->{target}")
                break
            if not members:
                continue
            pieces = [holder[(x, y)] for y in members]
            g = g.relabel({pieces[0]: target})
            for piece in pieces[1:]:
                g = edge_contract_graph(g, (target, piece), w_name=target)
                steps.append(f"contract:{target}|{piece}->{target}")
    logger.debug("TE and contraction construction finished", steps=len(steps))
    return ConstructionResult(graph=g, steps=tuple(steps))
