"""Type definitions and enums for the application."""

from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CoxeterType(str, Enum):
    """Coxeter types with an Eulerian polynomial."""

    A = "A"
    B = "B"
    D = "D"


class FamilyTag(str, Enum):
    """Derivative-polynomial families and their transforms."""

    PTILDE = "Ptilde"
    QTILDE = "Qtilde"
    A = "a"
    B = "b"
    D = "d"


class SeriesKind(str, Enum):
    """Functions with a built-in Maclaurin series."""

    TAN = "tan"
    SEC = "sec"
    TANH = "tanh"
    SECH = "sech"
    TAN_POW_K = "tan_pow_k"
    SEC_TAN_POW_K = "sec_tan_pow_k"


class OrderKind(str, Enum):
    """Tangent (T) or secant (S) numbers of order k."""

    T = "T"
    S = "S"


class Ordering(str, Enum):
    """Result of comparing two real algebraic numbers."""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class RegionKind(str, Enum):
    """Regions a real-rootedness certificate can confine the roots to."""

    ALL_REALS = "all_reals"
    OPEN_INTERVAL = "open_interval"
    CLOSED_INTERVAL = "closed_interval"
    NEGATIVE_AXIS = "negative_axis"


class Claim(str, Enum):
    """Statements a certificate can carry."""

    REAL_ROOTED_IN_REGION = "real_rooted_in_region"
    INTERLEAVES = "interleaves"
    STRICTLY_INTERLEAVES = "strictly_interleaves"
    COMMON_INTERLEAVER = "common_interleaver"
    COMPATIBLE = "compatible"


class Verdict(str, Enum):
    """Certificate outcome."""

    PASS = "pass"
    FAIL = "fail"

    @classmethod
    def of(cls, ok: bool) -> "Verdict":
        return cls.PASS if ok else cls.FAIL


class Command(str, Enum):
    TABLE = "table"
    VERIFY = "verify"
    CERTIFY = "certify"


class Suite(str, Enum):
    STEMBRIDGE = "stembridge"
    SPECIAL_VALUES = "special-values"
    CVIJOVIC = "cvijovic"
    TRANSFORMS = "transforms"
    ORACLE = "oracle"
    ALL = "all"


class CheckKind(str, Enum):
    RZ = "rz"
    INTERLEAVE = "interleave"
    CHAINS = "chains"
    COMPAT = "compat"
    SIGNS = "signs"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class TableMethod(str, Enum):
    FAST = "fast"
    BRUTE = "brute"


class CheckResult(BaseModel):
    """One line of a verification report."""

    model_config = ConfigDict(populate_by_name=True)

    check: str
    n: int
    expected: str
    got: str
    passed: bool = Field(alias="pass")


class Report(BaseModel):
    """Ordered list of check results."""

    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def add(self, check: str, n: int, expected: Any, got: Any, passed: Optional[bool] = None) -> bool:
        ok = (expected == got) if passed is None else passed
        self.checks.append(
            CheckResult(check=check, n=n, expected=str(expected), got=str(got), passed=ok)
        )
        return ok

    def extend(self, other: "Report") -> "Report":
        self.checks.extend(other.checks)
        return self

    def to_records(self) -> List[Dict[str, Any]]:
        return [c.model_dump(by_alias=True) for c in self.checks]


class RootEntry(BaseModel):
    """Isolating interval of one distinct root, endpoints as "num/den"."""

    lo: str
    hi: str
    mult: int
    poly: int = 0


class Checkpoint(BaseModel):
    """Values of n_f and n_g at a rational point or at a root (given by its interval)."""

    x: Optional[str] = None
    lo: Optional[str] = None
    hi: Optional[str] = None
    nf: int
    ng: int


class SignSample(BaseModel):
    """Sign of polys[poly] at the rational point x."""

    x: str
    poly: int
    sign: int


class Comparison(BaseModel):
    """One link of an interleaving chain."""

    left: str
    relation: str
    right: str


class WeightSample(BaseModel):
    """One random nonnegative combination and its real-root count."""

    weights: List[str]
    real_roots: int
    degree: int


class Evidence(BaseModel):
    roots: List[RootEntry] = Field(default_factory=list)
    checkpoints: List[Checkpoint] = Field(default_factory=list)
    signs: List[SignSample] = Field(default_factory=list)
    comparisons: List[Comparison] = Field(default_factory=list)
    samples: List[WeightSample] = Field(default_factory=list)
    pairs: List["Certificate"] = Field(default_factory=list)


class Certificate(BaseModel):
    """Serializable record proving or refuting a root-location claim."""

    claim: Claim
    polys: List[List[str]]
    evidence: Evidence = Field(default_factory=Evidence)
    verdict: Verdict
    seed: Optional[int] = None
    label: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS


Evidence.model_rebuild()


MIN_N_MAX: Dict[str, int] = {
    "table": 0,
    "table:d": 2,
    "verify:stembridge": 2,
    "verify:special-values": 2,
    "verify:cvijovic": 1,
    "verify:transforms": 2,
    "verify:oracle": 1,
    "verify:all": 2,
    "certify:rz": 2,
    "certify:interleave": 2,
    "certify:compat": 2,
    "certify:chains": 1,
    "certify:signs": 1,
}


class RunConfig(BaseModel):
    """Validated settings for one CLI invocation."""

    command: Command
    family: Optional[str] = None
    suite: Optional[Suite] = None
    check: Optional[CheckKind] = None
    n: Optional[int] = None
    n_max: int
    brute_cap: int = Field(default=10, ge=1)
    series_order: int = Field(default=32, ge=0)
    output_format: OutputFormat = OutputFormat.JSON
    output_path: Optional[Path] = None
    seed: int = 0
    jobs: int = Field(default=1, ge=1)
    samples: int = Field(default=64, ge=0)
    method: TableMethod = TableMethod.FAST

    @model_validator(mode="after")
    def _check_selectors(self) -> "RunConfig":
        if self.command is Command.TABLE:
            families = {t.value for t in CoxeterType} | {f.value for f in FamilyTag}
            if self.family not in families:
                raise ValueError(f"table needs --family, one of {sorted(families)}")
            key = "table:d" if self.family == FamilyTag.D.value else "table"
        elif self.command is Command.VERIFY:
            if self.suite is None:
                raise ValueError("verify needs --suite")
            key = f"verify:{self.suite.value}"
        else:
            if self.check is None:
                raise ValueError("certify needs --check")
            key = f"certify:{self.check.value}"
        minimum = MIN_N_MAX[key]
        if self.n_max < minimum:
            raise ValueError(f"n_max must be at least {minimum} for {key}, got {self.n_max}")
        if self.n is not None and self.n < minimum:
            raise ValueError(f"n must be at least {minimum} for {key}, got {self.n}")
        return self
