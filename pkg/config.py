# config.py

import os
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

load_dotenv()

DEFAULT_VERTEX_LIMIT = 24
DEFAULT_ORACLE_COLUMNS = 2**20
DEFAULT_SOUNDNESS_LIMIT = 16
DEFAULT_WORKERS = 1


def _int_from_env(name, default):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}")


class Limits(BaseModel):
    """Hard caps for every enumerating operation."""

    model_config = ConfigDict(frozen=True)

    vertices: int = Field(
        default=DEFAULT_VERTEX_LIMIT,
        gt=0,
        description="Maximum number of graph vertices for cut-vector enumeration",
    )
    oracle_columns: int = Field(
        default=DEFAULT_ORACLE_COLUMNS,
        gt=0,
        description="Maximum number of global assignments in the extended noncontextuality oracle",
    )
    soundness_vertices: int = Field(
        default=DEFAULT_SOUNDNESS_LIMIT,
        gt=0,
        description="Maximum number of vertices the validity harness enumerates",
    )
    workers: int = Field(
        default=DEFAULT_WORKERS,
        gt=0,
        description="joblib workers used for chunked cut evaluation",
    )

    @classmethod
    def from_env(cls, **overrides):
        values = dict(
            vertices=_int_from_env("CONTEXTCUT_LIMIT", DEFAULT_VERTEX_LIMIT),
            oracle_columns=_int_from_env(
                "CONTEXTCUT_ORACLE_COLUMNS", DEFAULT_ORACLE_COLUMNS
            ),
            soundness_vertices=_int_from_env(
                "CONTEXTCUT_SOUNDNESS_LIMIT", DEFAULT_SOUNDNESS_LIMIT
            ),
            workers=_int_from_env("CONTEXTCUT_WORKERS", DEFAULT_WORKERS),
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


def resolve_limits(limits=None):
    return limits if limits is not None else Limits.from_env()
