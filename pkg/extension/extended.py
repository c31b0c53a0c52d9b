# extension/extended.py

from typing import Dict, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from coupling.maximal import (
    Coupling,
    MarginalFamily,
    MarginalMember,
    is_maximal_coupling,
    max_coupling,
)
from exceptions import CouplingError, ScenarioError
from logger import StructuredLogger
from scenario.behavior import (
    Behavior,
    ContextDistribution,
    require_valid_behavior,
)
from scenario.hypergraph import Graph, Hypergraph, two_section
from scenario.scenario import Scenario, require_valid_scenario

logger = StructuredLogger("extension.extended")

COPY_SEPARATOR = "^"


def copy_id(measurement: str, context_index: int) -> str:
    """Copy of `measurement` owned by context number `context_index` (1-based)."""
    return f"{measurement}{COPY_SEPARATOR}{context_index}"


def parse_copy_id(copy: str) -> Tuple[str, int]:
    measurement, sep, index = copy.rpartition(COPY_SEPARATOR)
    if not sep or not measurement or not index.isdigit():
        raise ScenarioError(f"{copy!r} is not a copy id of the form 'x^k'")
    return measurement, int(index)


class ExtendedScenario(BaseModel):
    model_config = ConfigDict(frozen=True)

    base: Scenario
    copies: Dict[str, Tuple[str, ...]]
    relabeled_contexts: Tuple[Tuple[str, ...], ...]
    coupling_measurements: Tuple[str, ...]
    coupling_contexts: Tuple[Tuple[str, ...], ...]

    def copy_vertices(self) -> Tuple[str, ...]:
        return tuple(c for m in self.base.measurements for c in self.copies[m])

    def copy_of(self, measurement: str, context_index: int) -> str:
        """Copy of a measurement in the 0-based base context index."""
        if measurement not in self.base.contexts[context_index]:
            raise ScenarioError(
                f"Measurement {measurement} is not in context {context_index + 1}"
            )
        return copy_id(measurement, context_index + 1)

    def measurement_of(self, copy: str) -> str:
        measurement, index = parse_copy_id(copy)
        if copy not in self.copies.get(measurement, ()):
            raise ScenarioError(f"{copy} is not a copy in this extended scenario")
        return measurement

    def context_of(self, copy: str) -> int:
        """0-based base context owning the copy."""
        _, index = parse_copy_id(copy)
        return index - 1

    @property
    def hypergraph(self) -> Hypergraph:
        return Hypergraph(
            vertices=self.copy_vertices(),
            hyperedges=self.relabeled_contexts + self.coupling_contexts,
        )

    @property
    def graph(self) -> Graph:
        return two_section(self.hypergraph)

    @property
    def scenario(self) -> Scenario:
        """The extended scenario as an ordinary scenario over copy ids."""
        return Scenario(
            measurements=self.copy_vertices(),
            contexts=self.relabeled_contexts + self.coupling_contexts,
            outcomes=self.base.outcomes,
        )


def extend_hypergraph(s: Scenario) -> ExtendedScenario:
    require_valid_scenario(s)
    copies = {
        m: tuple(copy_id(m, i + 1) for i in s.contexts_of(m)) for m in s.measurements
    }
    relabeled = tuple(
        tuple(copy_id(m, i + 1) for m in context) for i, context in enumerate(s.contexts)
    )
    coupled = tuple(m for m in s.measurements if len(copies[m]) >= 2)
    return ExtendedScenario(
        base=s,
        copies=copies,
        relabeled_contexts=relabeled,
        coupling_measurements=coupled,
        coupling_contexts=tuple(copies[m] for m in coupled),
    )


def extended_graph(s: Scenario) -> Graph:
    return extend_hypergraph(s).graph


def copy_marginals(b: Behavior, measurement: str, ext: Optional[ExtendedScenario] = None) -> MarginalFamily:
    """Family of the copies of one measurement, each with its own context's marginal."""
    s = b.scenario
    ext = ext or extend_hypergraph(s)
    members = []
    for i in s.contexts_of(measurement):
        distribution = b.distribution(i).single_marginal(measurement)
        members.append(
            MarginalMember(copy_id=ext.copy_of(measurement, i), distribution=distribution)
        )
    return MarginalFamily(outcomes=s.outcomes, members=tuple(members))


class ExtendedBehavior(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    extended: ExtendedScenario
    relabeled: Tuple[ContextDistribution, ...]
    couplings: Tuple[Coupling, ...]

    def coupling_for(self, measurement: str) -> Coupling:
        index = self.extended.coupling_measurements.index(measurement)
        return self.couplings[index]

    @property
    def behavior(self) -> Behavior:
        coupling_tables = tuple(
            ContextDistribution(context=context, table=dict(c.joint))
            for context, c in zip(self.extended.coupling_contexts, self.couplings)
        )
        return Behavior(
            scenario=self.extended.scenario,
            distributions=self.relabeled + coupling_tables,
        )


def extend_behavior(
    b: Behavior, choice: Optional[Mapping[str, Coupling]] = None
) -> ExtendedBehavior:
    """
    Relabel every context table onto copies and couple the copies of each
    repeated measurement, by default with max_coupling.

    A coupling supplied in `choice` must be maximal for the observed copy
    marginals, otherwise CouplingError is raised.
    """
    require_valid_behavior(b)
    choice = dict(choice or {})
    ext = extend_hypergraph(b.scenario)
    unknown = set(choice) - set(ext.coupling_measurements)
    if unknown:
        raise CouplingError(f"Couplings supplied for uncoupled measurements {sorted(unknown)}")

    relabeled = tuple(
        ContextDistribution(context=context, table=dict(b.distribution(i).table))
        for i, context in enumerate(ext.relabeled_contexts)
    )
    couplings = []
    for m in ext.coupling_measurements:
        family = copy_marginals(b, m, ext)
        supplied = choice.get(m)
        if supplied is None:
            couplings.append(max_coupling(family))
            continue
        if supplied.family.copy_ids() != family.copy_ids():
            raise CouplingError(
                f"Coupling for {m} is over {list(supplied.family.copy_ids())}, "
                f"expected {list(family.copy_ids())}"
            )
        if not is_maximal_coupling(family, supplied.joint):
            raise CouplingError(f"Supplied coupling for {m} is not a maximal coupling")
        couplings.append(
            Coupling(family=family, joint=dict(supplied.joint), equality_mass=supplied.equality_mass)
        )
    logger.debug(
        "Extended behavior built",
        copies=len(ext.copy_vertices()),
        couplings=len(couplings),
        supplied=sorted(choice),
    )
    return ExtendedBehavior(extended=ext, relabeled=relabeled, couplings=tuple(couplings))
