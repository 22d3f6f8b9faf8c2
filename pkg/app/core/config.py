import os
from pydantic_settings import BaseSettings

class Settings(BaseSettings):
    # Reduction budgets
    DEFAULT_FUEL: int = int(os.getenv("DEFAULT_FUEL", "1000000"))
    CHECK_FUEL: int = int(os.getenv("CHECK_FUEL", "200000"))

    # Substitution-coherence audit
    AUDIT_SAMPLES: int = int(os.getenv("AUDIT_SAMPLES", "100"))
    AUDIT_SEED: int = int(os.getenv("AUDIT_SEED", "0"))
    AUDIT_MAX_NAMES: int = int(os.getenv("AUDIT_MAX_NAMES", "2"))

    # Named terms nest deeply once comp at Glue/U unfolds
    RECURSION_LIMIT: int = int(os.getenv("RECURSION_LIMIT", "20000"))

    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")
    CORPUS_PATH: str = os.getenv("CORPUS_PATH", "corpus/")

    # Source uploads accepted by the HTTP service
    MAX_SOURCE_SIZE: int = int(os.getenv("MAX_SOURCE_SIZE", str(512 * 1024)))
    ALLOWED_EXTENSIONS: set = {"ctt"}

    # Worker threads for batch evaluation; 1 keeps runs single threaded
    JOBS: int = int(os.getenv("JOBS", "1"))

    class Config:
        env_file = ".env"
        case_sensitive = True

settings = Settings()
