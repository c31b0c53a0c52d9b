# coupling/maximal.py
"""
Maximal couplings of a family of distributions over one outcome set.

The joint table puts the pointwise minimum of the members on the diagonal
and spreads the residual masses as a normalized product off the diagonal.
"""

from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Mapping, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from exceptions import CouplingError

ZERO = Fraction(0)
ONE = Fraction(1)


class MarginalMember(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    copy_id: str
    distribution: Dict[int, Fraction]

    def probability(self, outcome: int) -> Fraction:
        return self.distribution.get(outcome, ZERO)


class MarginalFamily(BaseModel):
    """Copies of one measurement with their observed marginals."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    outcomes: Tuple[int, ...]
    members: Tuple[MarginalMember, ...]

    @model_validator(mode="after")
    def _normalized(self):
        if not self.members:
            raise ValueError("A marginal family needs at least one member")
        allowed = set(self.outcomes)
        for member in self.members:
            if set(member.distribution) - allowed:
                raise ValueError(
                    f"Member {member.copy_id} uses outcomes outside {list(self.outcomes)}"
                )
            if any(p < 0 for p in member.distribution.values()):
                raise ValueError(f"Member {member.copy_id} has negative probabilities")
            if sum(member.distribution.values(), ZERO) != ONE:
                raise ValueError(f"Member {member.copy_id} is not normalized")
        return self

    @classmethod
    def of(cls, outcomes: Iterable[int], distributions: Mapping[str, Mapping]):
        return cls(
            outcomes=tuple(outcomes),
            members=tuple(
                MarginalMember(
                    copy_id=copy_id,
                    distribution={a: Fraction(p) for a, p in dist.items()},
                )
                for copy_id, dist in distributions.items()
            ),
        )

    @property
    def size(self) -> int:
        return len(self.members)

    def copy_ids(self) -> Tuple[str, ...]:
        return tuple(m.copy_id for m in self.members)


class Coupling(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    family: MarginalFamily
    joint: Dict[Tuple[int, ...], Fraction]
    equality_mass: Fraction

    def probability(self, outcomes) -> Fraction:
        return self.joint.get(tuple(outcomes), ZERO)

    def member_marginal(self, index: int) -> Dict[int, Fraction]:
        result = {a: ZERO for a in self.family.outcomes}
        for outcomes, p in self.joint.items():
            result[outcomes[index]] += p
        return result

    def pairwise_equality_mass(self, i: int, j: int) -> Fraction:
        return sum(
            (p for outcomes, p in self.joint.items() if outcomes[i] == outcomes[j]), ZERO
        )

    def pair_correlation(self, i: int, j: int) -> Fraction:
        """<x_i x_j> for ±1 outcomes."""
        _require_binary(self.family.outcomes)
        return sum(
            (outcomes[i] * outcomes[j] * p for outcomes, p in self.joint.items()), ZERO
        )


def _require_binary(outcomes):
    if tuple(sorted(outcomes)) != (-1, 1):
        raise CouplingError(f"Correlations need outcomes {{-1, 1}}, got {list(outcomes)}")


def pointwise_min(f: MarginalFamily) -> Tuple[Dict[int, Fraction], Fraction]:
    p_minus = {a: min(m.probability(a) for m in f.members) for a in f.outcomes}
    return p_minus, sum(p_minus.values(), ZERO)


def max_coupling(f: MarginalFamily) -> Coupling:
    p_minus, overlap = pointwise_min(f)
    count = f.size
    joint: Dict[Tuple[int, ...], Fraction] = {}
    for a in f.outcomes:
        if p_minus[a] != 0:
            joint[(a,) * count] = p_minus[a]
    if overlap != ONE:
        residuals = [
            {a: m.probability(a) - p_minus[a] for a in f.outcomes} for m in f.members
        ]
        norm = (ONE - overlap) ** (count - 1)
        for outcomes in product(f.outcomes, repeat=count):
            if len(set(outcomes)) == 1:
                # some member's residual vanishes at a, so the product is zero here
                continue
            mass = ONE
            for residual, a in zip(residuals, outcomes):
                mass *= residual[a]
                if mass == 0:
                    break
            if mass != 0:
                joint[outcomes] = mass / norm
    return Coupling(family=f, joint=joint, equality_mass=overlap)


def is_maximal_coupling(f: MarginalFamily, joint: Mapping) -> bool:
    """Marginals reproduced exactly and diagonal pinned to the pointwise minimum."""
    count = f.size
    p_minus, _ = pointwise_min(f)
    marginals = [{a: ZERO for a in f.outcomes} for _ in range(count)]
    for outcomes, p in joint.items():
        outcomes = tuple(outcomes)
        if len(outcomes) != count or any(a not in p_minus for a in outcomes):
            return False
        if p < 0:
            return False
        for j, a in enumerate(outcomes):
            marginals[j][a] += p
    for member, observed in zip(f.members, marginals):
        if any(observed[a] != member.probability(a) for a in f.outcomes):
            return False
    return all(joint.get((a,) * count, ZERO) == p_minus[a] for a in f.outcomes)


def coupling_is_unique(f: MarginalFamily) -> bool:
    """
    Whether every maximal coupling of f equals max_coupling(f).

    Holds for one member, for full overlap, for two members with at most
    three outcomes and for three binary members. Two members over four or
    more outcomes can have several maximal couplings, so False is returned.
    """
    _, overlap = pointwise_min(f)
    if f.size == 1 or overlap == ONE:
        return True
    if f.size == 2:
        return len(f.outcomes) <= 3
    return f.size == 3 and len(f.outcomes) == 2


def coupling_bounds(
    f: MarginalFamily, subset: Iterable[int], a: int
) -> Tuple[Fraction, Fraction]:
    """
    Bounds on p(all members in subset show a) over maximal couplings.

    Args:
        f: the marginal family.
        subset: 0-based member indices.
        a: the outcome.

    Returns:
        (p_minus(a) over all members, min over subset members of p(a)).
    """
    subset = sorted(set(subset))
    if not subset:
        raise CouplingError("coupling_bounds needs a non-empty subset of members")
    if any(j < 0 or j >= f.size for j in subset):
        raise CouplingError(f"Member indices {subset} out of range for {f.size} members")
    if a not in f.outcomes:
        raise CouplingError(f"Outcome {a} is not in {list(f.outcomes)}")
    p_minus, _ = pointwise_min(f)
    upper = min(f.members[j].probability(a) for j in subset)
    return p_minus[a], upper


def _mean(distribution: Mapping[int, Fraction]) -> Fraction:
    _require_binary(set(distribution) | {-1, 1})
    return Fraction(distribution.get(1, 0)) - Fraction(distribution.get(-1, 0))


def max_equal_correlation(px: Mapping[int, Fraction], py: Mapping[int, Fraction]) -> Fraction:
    """<xy> under the maximal coupling of two ±1 distributions: 1 - |<x> - <y>|."""
    return ONE - abs(_mean(px) - _mean(py))
