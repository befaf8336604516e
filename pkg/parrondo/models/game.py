from enum import Enum

from pydantic import BaseModel, ConfigDict, field_validator

ALPHA_MAX = 0.1


class GameTypes(str, Enum):
    A = "A"
    B = "B"
    MIXTURE = "mix"
    OPTIMAL = "optimal"


class Coins(str, Enum):
    A = "a"
    ONE = "b1"
    TWO = "b2"


class GameParams(BaseModel):
    """Bias and modulus shared by Games A and B."""

    model_config = ConfigDict(frozen=True)

    alpha: float
    modulus: int = 3

    @field_validator("alpha")
    @classmethod
    def check_alpha(cls, v: float) -> float:
        if not 0.0 <= v < ALPHA_MAX:
            raise ValueError(f"alpha out of range [0, {ALPHA_MAX})")
        return v

    @field_validator("modulus")
    @classmethod
    def check_modulus(cls, v: int) -> int:
        if v < 2:
            raise ValueError("modulus must be an integer >= 2")
        return v

    @property
    def coin_a_win(self) -> float:
        return 0.5 - self.alpha

    @property
    def coin_b1_win(self) -> float:
        return 0.1 - self.alpha

    @property
    def coin_b2_win(self) -> float:
        return 0.75 - self.alpha

    def coin_win(self, coin: Coins) -> float:
        match coin:
            case Coins.A:
                return self.coin_a_win
            case Coins.ONE:
                return self.coin_b1_win
            case Coins.TWO:
                return self.coin_b2_win

    def residue(self, capital: int) -> int:
        # python's % is the mathematical modulus, so -1 maps to M - 1
        return capital % self.modulus


class WinProbabilityVector(BaseModel):
    """Probability of winning one play from each capital residue."""

    model_config = ConfigDict(frozen=True)

    per_state_win: tuple[float, ...]

    @field_validator("per_state_win")
    @classmethod
    def check_open_interval(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        if not v:
            raise ValueError("win vector must not be empty")
        for i, p in enumerate(v):
            if not 0.0 < p < 1.0:
                raise ValueError(f"win probability {p!r} at residue {i} not in (0, 1)")
        return v

    def __len__(self) -> int:
        return len(self.per_state_win)

    def __getitem__(self, i: int) -> float:
        return self.per_state_win[i]
