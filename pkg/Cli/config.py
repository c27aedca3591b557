from pathlib import Path
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from Engine.magma.enumeration import DEFAULT_MONOMIAL_BUDGET
from Engine.magma.terms import Alphabet


# Path to the .env file, relative to the working directory
env_path = r".env"

# Explicitly load the .env file
load_dotenv(dotenv_path=env_path)


class Settings(BaseSettings):
    BUDGET: int = DEFAULT_MONOMIAL_BUDGET
    ALPHABET: str = "z1,z2,z3,z4"
    BOUND: int = 6
    THREADS: int = 1
    SEED: int = 0
    LOG_LEVEL: str = "WARNING"
    LOG_FILE: Optional[str] = None

    model_config = SettingsConfigDict(env_file=env_path, env_prefix="MAGMA_FORGE_", extra="ignore")


def get_settings() -> Settings:
    # read on every invocation so environment overrides apply per command
    return Settings()


def parse_alphabet(text: str) -> Alphabet:
    return Alphabet(tuple(s.strip() for s in text.split(",") if s.strip()))


class SessionConfig(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    alphabet: Alphabet
    bound: int = Field(6, ge=1)
    monomial_budget: int = Field(DEFAULT_MONOMIAL_BUDGET, ge=1)
    output: Optional[Path] = None  # None means stdout
    threads: int = Field(1, ge=1)
    seed: int = 0
    output_format: Literal["json", "text"] = "json"

    @classmethod
    def from_settings(
        cls,
        settings: Settings,
        *,
        alphabet: Optional[str] = None,
        budget: Optional[int] = None,
        bound: Optional[int] = None,
        threads: Optional[int] = None,
        seed: Optional[int] = None,
        output: Optional[Path] = None,
        output_format: str = "json",
    ) -> "SessionConfig":
        """Environment settings, overridden by whatever flags were given."""
        return cls(
            alphabet=parse_alphabet(alphabet or settings.ALPHABET),
            bound=settings.BOUND if bound is None else bound,
            monomial_budget=settings.BUDGET if budget is None else budget,
            output=output,
            threads=settings.THREADS if threads is None else threads,
            seed=settings.SEED if seed is None else seed,
            output_format=output_format,
        )
