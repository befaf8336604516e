from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from parrondo.errors import PolicySpecError
from .game import GameTypes


class PolicyTypes(str, Enum):
    PURE_A = "A"
    PURE_B = "B"
    PATTERN = "pattern"
    RANDOM_MIX = "mix"
    CAPITAL_AWARE = "optimal"


class PatternPolicy(BaseModel):
    """Periodic game sequence over {A, B}, played cyclically from index 0."""

    model_config = ConfigDict(frozen=True)

    sequence: str

    @field_validator("sequence")
    @classmethod
    def check_sequence(cls, v: str) -> str:
        if not v:
            raise ValueError("pattern must not be empty")
        for char in v:
            if char not in ("A", "B"):
                raise ValueError(f"invalid pattern character {char!r}")
        return v

    @property
    def period(self) -> int:
        return len(self.sequence)

    def game_at(self, index: int) -> GameTypes:
        return GameTypes(self.sequence[index % self.period])


class Policy(BaseModel):
    """Rule choosing Game A or B before every play."""

    model_config = ConfigDict(frozen=True)

    variant: PolicyTypes
    pattern: Optional[PatternPolicy] = None
    gamma: Optional[float] = None

    @model_validator(mode="after")
    def check_variant_fields(self) -> "Policy":
        if self.variant is PolicyTypes.PATTERN and self.pattern is None:
            raise ValueError("pattern policy needs a pattern")
        if self.variant is PolicyTypes.RANDOM_MIX:
            if self.gamma is None or not 0.0 <= self.gamma <= 1.0:
                raise ValueError("gamma out of range [0, 1]")
        return self

    @classmethod
    def pure_a(cls) -> "Policy":
        return cls(variant=PolicyTypes.PURE_A)

    @classmethod
    def pure_b(cls) -> "Policy":
        return cls(variant=PolicyTypes.PURE_B)

    @classmethod
    def periodic(cls, sequence: str) -> "Policy":
        return cls(variant=PolicyTypes.PATTERN, pattern=PatternPolicy(sequence=sequence))

    @classmethod
    def random_mix(cls, gamma: float = 0.5) -> "Policy":
        return cls(variant=PolicyTypes.RANDOM_MIX, gamma=gamma)

    @classmethod
    def capital_aware(cls) -> "Policy":
        return cls(variant=PolicyTypes.CAPITAL_AWARE)

    @classmethod
    def parse(cls, spec: str) -> "Policy":
        """Parse ``A | B | pattern:<AB..> | mix:<gamma> | optimal``."""
        text = spec.strip()
        kind, _, arg = text.partition(":")
        match kind:
            case "A" if not arg:
                return cls.pure_a()
            case "B" if not arg:
                return cls.pure_b()
            case "optimal" if not arg:
                return cls.capital_aware()
            case "pattern":
                bad = next((c for c in arg if c not in ("A", "B")), None)
                if not arg:
                    raise PolicySpecError("pattern must not be empty")
                if bad is not None:
                    raise PolicySpecError(f"invalid pattern character {bad!r}")
                return cls.periodic(arg)
            case "mix":
                try:
                    gamma = float(arg)
                except ValueError:
                    raise PolicySpecError(f"invalid mixture weight {arg!r}") from None
                if not 0.0 <= gamma <= 1.0:
                    raise PolicySpecError("gamma out of range [0, 1]")
                return cls.random_mix(gamma)
        raise PolicySpecError(f"unknown policy {spec!r}")

    @property
    def label(self) -> str:
        match self.variant:
            case PolicyTypes.PATTERN:
                return f"pattern:{self.pattern.sequence}"
            case PolicyTypes.RANDOM_MIX:
                return f"mix:{self.gamma:g}"
            case _:
                return self.variant.value
