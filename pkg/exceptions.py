# exceptions.py


class ContextcutError(ValueError):
    """Base class for every error raised by contextcut operations."""


class ScenarioError(ContextcutError):
    "Raised when a scenario, hypergraph or graph breaks a structural rule."


class BehaviorError(ContextcutError):
    "Raised when a behavior or context table cannot be used by an operation."


class CouplingError(ContextcutError):
    "Raised when a coupling request or a supplied coupling is not acceptable."


class AmbiguityError(ContextcutError):
    "Raised when two contexts disagree on a mean or pairwise marginal that a graph entry needs."


class ConventionError(ContextcutError):
    "Raised when an operation receives a vector or inequality in the wrong encoding."


class DerivationError(ContextcutError):
    "Raised when an inequality derivation step has invalid parameters."


class SizeLimitExceeded(ContextcutError):
    "Raised when an enumeration or LP would exceed the configured limits."


class SelectorError(ContextcutError):
    "Raised when a catalog selector cannot be resolved."


class CertificateError(ContextcutError):
    "Raised when a returned certificate fails its exact re-verification."


class InfeasibleError(ContextcutError):
    "Raised when a linear program has no feasible point and a caller asked for one."


class UnboundedError(ContextcutError):
    "Raised when a linear program objective is unbounded."
