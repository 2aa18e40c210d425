from functools import cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from pyfixpoint.shared.consts import ENV_PREFIX


class Settings(BaseSettings):
    """Tunable defaults. Every field can be set through a `PYFIXPOINT_<FIELD>` variable."""

    model_config = SettingsConfigDict(env_prefix=ENV_PREFIX, frozen=True)

    eps_ax: float = Field(default=1e-9, ge=0, description="Slack added on the passing side of every inequality")
    tol: float = Field(default=1e-9, gt=0, description="Solver stopping tolerance")
    max_iter: int = Field(default=1_000_000, ge=1)
    samples: int = Field(default=1_000, ge=1, description="Sampled elements per certificate")
    seed: int = 0
    interval_upper: float = Field(default=1e3, description="Upper sampling bound M of interval carriers")
    growth_bound: float = Field(default=1e6, gt=0, description="Largest t the control-function growth probe visits")
    growth_threshold: float = Field(default=1.0, description="psi(G) must reach this for the growth probe to pass")
    max_witnesses: int = Field(default=10, ge=1, description="Violations kept per check")
    exhaustive_limit: int = Field(default=64, ge=1, description="Finite carriers up to this size are checked exhaustively")
    comparable_coverage_warn: float = Field(default=0.1, ge=0, le=1)
    pair_block: int = Field(default=64, ge=1, description="Leading samples crossed all-pairs on top of random pairs")
    triple_block: int = Field(default=16, ge=1, description="Leading samples crossed all-triples on top of random triples")
    candidate_pool: int = Field(default=256, ge=1, description="Samples searched for a common comparable point")
    sequence_length: int = Field(default=1_000, ge=2, description="Prefix length of the continuity probe sequences")
    continuity_tol: float = Field(default=1e-2, gt=0, description="Tail deviation the continuity probe treats as converged")
    probe_sequences: int = Field(default=8, ge=1, description="Test sequences per continuity probe")
    orbit_probe_steps: int = Field(default=256, ge=1, description="Orbit length explored per start by the counterexample search")
    confinement_eps: float = Field(default=0.1, gt=0, description="eps of the orbit confinement diagnostic")


@cache
def get_settings() -> Settings:
    return Settings()
