from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env", env_ignore_empty=True, extra="ignore"
    )

    PROJECT_NAME: str = "CR Normal Form Lab"

    # Arithmetic
    PRECISION_BITS: int = 256
    TRUNC_WEIGHT: int = 10
    MODE: str = "exact"
    SEED: int = 17

    # Tolerances
    RESIDUAL_TOL: float = 1e-10
    CONDITION_WARN: float = 1e8
    RANK_TOL: float = 1e-10
    REALITY_TOL: float = 1e-12
    SAMPLE_TOL: float = 1e-8
    TABLE_TOL: float = 0.02

    # Chains
    CHAIN_STEP: float = 1e-3
    SINGULARITY_TOL: float = 1e-12
    BRANCH_GUARD: float = 0.99

    # Lemma audit
    DENSE_DET_LIMIT: int = 60
    AUDIT_WORKERS: int = 4
    AUDIT_CHUNK: int = 25

    # Outputs
    OUTPUT_DIR: str = "out"
    METRICS_FILE: str | None = None

    @property
    def IS_EXACT(self) -> bool:
        return self.MODE == "exact"

    @property
    def GUARD_BITS(self) -> int:
        return max(32, self.PRECISION_BITS // 8)


settings = Settings()
