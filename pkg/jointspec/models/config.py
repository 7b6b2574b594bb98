"""Configuration models for jointspec runs."""

from typing import Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class ToleranceConfig(BaseModel):
    """Named numerical tolerances (overridable with --tol NAME=VAL)."""
    orth: float = Field(1e-10, description="Max-abs deviation of PᵀP from I")
    eig_residual: float = Field(1e-9, description="A·P − P·Λ residual, relative to ‖A‖_F")
    eig_class: float = Field(1e-8, description="Relative gap grouping equal eigenvalues")
    reconstruct: float = Field(1e-8, description="‖PΛPᵀ − A‖_F relative to max(1, ‖A‖_F)")
    mass: float = Field(1e-10, description="Total mass of a signed measure vs 1")
    oracle_float: float = Field(1e-7, description="Permutation-sum vs determinant moments (float path)")
    float_identity: float = Field(1e-8, description="Generic float identity tolerance")
    schur: float = Field(1e-10, description="Schur block vs direct resolvent inverse")
    mgf: float = Field(1e-9, description="Both sides of the Rademacher MGF identity")
    mgf_tail: float = Field(1e-10, description="Allowed truncation tail of the MGF expansion")
    basis: float = Field(1e-8, description="Atom weights under in-class basis rotations")
    slater: float = Field(1e-8, description="Slater probabilities vs det(P_uv)^2")
    clt_final: float = Field(0.05, description="Scaled-moment gap at the largest n")
    clt_slope: float = Field(-0.4, description="Maximum fitted log-log slope of the gap")
    symmetry: float = Field(1e-12, description="Asymmetry accepted in dense graph input")


class CapsConfig(BaseModel):
    """Brute-force size caps."""
    measure_dim: int = Field(9, ge=1, description="Largest n for S_N enumeration")
    hike_length: int = Field(10, ge=0, description="Largest total length for hike enumeration")
    walk_length: int = Field(10, ge=0, description="Largest length for walk/excursion enumeration")
    jacobi_sweeps: int = Field(100, ge=1, description="Cyclic Jacobi sweep budget")
    star_direct_max_n: int = Field(1000, ge=1, description="Largest n using the direct star path")


class LoggingConfig(BaseModel):
    """Logging configuration."""
    level: str = Field("WARNING", description="Log level (DEBUG, INFO, WARNING, ERROR)")

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        """Accept only standard level names."""
        v = v.upper()
        if v not in ("DEBUG", "INFO", "WARNING", "ERROR"):
            raise ValueError("level must be DEBUG, INFO, WARNING or ERROR")
        return v


class RunConfig(BaseSettings):
    """Complete run configuration.

    Values come from defaults, then config.yaml, then JSM_* environment
    variables (e.g. JSM_SEED=7, JSM_TOLERANCES__CLT_FINAL=0.1), then CLI flags.
    """
    model_config = SettingsConfigDict(env_prefix="JSM_", env_nested_delimiter="__")

    seed: int = Field(0, description="Master seed for randomized suites")
    trials: Optional[int] = Field(None, ge=1, description="Random trials per suite (None: suite default)")
    trunc: int = Field(8, ge=0, description="Series truncation degree L")
    output: Literal["text", "csv"] = Field("text", description="Report format")
    workers: int = Field(1, ge=1, description="Threads used by trial loops")
    n_grid: Tuple[int, ...] = Field((10, 100, 1000, 10000), description="Copies n for CLT reports")
    tolerances: ToleranceConfig = ToleranceConfig()
    caps: CapsConfig = CapsConfig()
    logging: LoggingConfig = LoggingConfig()

    @classmethod
    def settings_customise_sources(cls, settings_cls, init_settings, env_settings, dotenv_settings,
                                   file_secret_settings):
        """Environment variables take precedence over values loaded from YAML."""
        return env_settings, init_settings

    @field_validator("n_grid")
    @classmethod
    def validate_n_grid(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        """n grid must be strictly increasing positive integers."""
        if not v or any(n < 1 for n in v) or any(a >= b for a, b in zip(v, v[1:])):
            raise ValueError("n_grid must be strictly increasing positive integers")
        return v


class CliOverrides(BaseModel):
    """Command-line flags, validated on their own and laid over a loaded RunConfig.

    Kept outside BaseSettings so that applying them never rereads JSM_*.
    """
    seed: Optional[int] = None
    trials: Optional[int] = Field(None, ge=1)
    trunc: Optional[int] = Field(None, ge=0)
    output: Optional[Literal["text", "csv"]] = None
    workers: Optional[int] = Field(None, ge=1)
    log_level: Optional[str] = None

    def apply(self, config: RunConfig) -> RunConfig:
        """Copy of config with every flag that was given."""
        updates = self.model_dump(exclude_none=True, exclude={"log_level"})
        if self.log_level is not None:
            updates["logging"] = LoggingConfig(level=self.log_level)
        return config.model_copy(update=updates)
