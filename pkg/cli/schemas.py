"""
JSON schemas for every document the CLI reads or writes.

Big integers travel as decimal strings; small structural integers (p, s, N,
D, g) stay JSON numbers.
"""

from typing import Annotated, Literal, Optional

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, model_validator
from sympy import isprime

DecimalStr = Annotated[str, Field(pattern=r"^-?[0-9]+$")]


def _odd_prime(p: int) -> int:
    if not isprime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    return p


OddPrime = Annotated[int, Field(ge=3), AfterValidator(_odd_prime)]


# ------------------------------------------------------------------
# Core values
# ------------------------------------------------------------------

class SeriesModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    p: OddPrime = Field(..., description="Odd prime.")
    s: int = Field(default=0, ge=0, description="Denominator exponent.")
    N: int = Field(..., ge=0, description="p-adic precision of the numerators.")
    D: int = Field(..., ge=0, description="X-adic truncation: terms up to X^D.")
    coeffs: list[DecimalStr] = Field(default_factory=list, description="Numerators c_0..c_D; missing tail is zero.")

    @model_validator(mode="after")
    def _fits(self) -> "SeriesModel":
        if len(self.coeffs) > self.D + 1:
            raise ValueError(f"{len(self.coeffs)} coefficients do not fit D={self.D}")
        return self


class ScalarModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    p: OddPrime
    unit: DecimalStr = "0"
    valuation: Optional[int] = Field(default=None, description="None encodes exact zero.")
    precision: int = Field(default=0, ge=0)


class FrobeniusModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    p: Optional[OddPrime] = None
    g_plus: int = Field(..., ge=0)
    g_minus: int = Field(..., ge=0)
    C: list[list[DecimalStr]]
    prec: Optional[int] = Field(default=None, ge=1, description="Entries known mod p^prec; omitted means exact.")
    side: Literal["primal", "dual"] = "primal"


class SeriesMatrixModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    p: OddPrime
    g: int = Field(..., ge=0)
    D: int = Field(..., ge=0)
    denominator_exp: int = Field(..., ge=0)
    level: Optional[int] = None
    side: Optional[Literal["primal", "dual"]] = None
    entries: list[list[SeriesModel]]

    @model_validator(mode="after")
    def _square(self) -> "SeriesMatrixModel":
        if len(self.entries) != self.g or any(len(r) != self.g for r in self.entries):
            raise ValueError(f"entries are not {self.g}x{self.g}")
        return self


class IwasawaElementModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    p: OddPrime
    components: dict[str, SeriesModel]

    @model_validator(mode="after")
    def _characters(self) -> "IwasawaElementModel":
        expected = {str(eta) for eta in range(self.p - 1)}
        if set(self.components) != expected:
            raise ValueError(f"components must be keyed exactly by 0..{self.p - 2}")
        return self


class WeierstrassModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    p: OddPrime
    mu: int = Field(..., ge=0)
    lambda_: int = Field(..., ge=0, alias="lambda")
    distinguished: list[DecimalStr]
    precision: int = Field(..., ge=0)
    unit: SeriesModel
    certified: bool


class PresentationModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    r: int = Field(..., ge=1)
    matrix: list[list[SeriesModel]]

    @model_validator(mode="after")
    def _square(self) -> "PresentationModel":
        if len(self.matrix) != self.r or any(len(row) != self.r for row in self.matrix):
            raise ValueError(f"matrix is not {self.r}x{self.r}")
        return self


# ------------------------------------------------------------------
# Command inputs
# ------------------------------------------------------------------

class WeierstrassInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    f: SeriesModel


class CompareInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    f_x: SeriesModel
    f_y: SeriesModel


class EulerInput(BaseModel):
    model_config = ConfigDict(extra="forbid")

    m: int = Field(..., ge=0)
    e: int = Field(..., ge=0)
    deg_f: int = Field(..., ge=0)
    n_level: int = Field(..., ge=0)
    g: int = Field(..., ge=0)
    g_minus: int = Field(..., ge=0)
    p: Optional[OddPrime] = None
