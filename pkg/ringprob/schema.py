"""
Typed data structures used across ringprob: files, reports and run configuration.
"""
from __future__ import annotations

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

SCHEMA_VERSION = "1"

Mode = Literal["cp", "zp"]
Objective = Literal["max", "sum", "lex"]
OutputFormat = Literal["json", "csv", "text"]


class Caps(BaseModel):
    max_order: int = Field(default=4096, ge=1)
    pair_order: int = Field(default=4096, ge=1)
    oracle_order: int = Field(default=256, ge=1)
    enumeration_candidates: int = Field(default=8**9, ge=1)


DEFAULT_CAPS = Caps()


class ExtractionSettings(BaseModel):
    sample_size: int = Field(default=64, ge=1)
    bookkeeping: bool = True


class ScanPreset(BaseModel):
    family: str
    params: List[int]


class AppConfig(BaseModel):
    schema_version: str = SCHEMA_VERSION
    caps: Caps = Caps()
    extraction: ExtractionSettings = ExtractionSettings()
    objective: Objective = "max"
    jobs: int = Field(default=1, ge=1)
    scan_presets: Dict[str, ScanPreset] = Field(default_factory=dict)


class RunConfig(BaseModel):
    """Validated options for one CLI invocation."""

    command: str
    inputs: List[str] = Field(default_factory=list)
    mode: Mode = "cp"
    output_format: OutputFormat = "json"
    caps: Caps = Caps()
    jobs: int = Field(default=1, ge=1)
    objective: Objective = "max"
    extraction: ExtractionSettings = ExtractionSettings()

    @model_validator(mode="after")
    def _caps_only_lower(self) -> "RunConfig":
        for name, default in DEFAULT_CAPS.model_dump().items():
            value = getattr(self.caps, name)
            if value > default:
                raise ValueError(f"caps.{name}={value} may not exceed the default {default}")
        return self


class RingFile(BaseModel):
    name: str = ""
    flavor: Literal["associative", "lie"] = "associative"
    orders: List[int]
    table: List[List[List[int]]]


class SubsetFile(BaseModel):
    schema_version: str = SCHEMA_VERSION
    ring_name: str
    ring_hash: str
    kind: Literal["subgroup", "set"] = "subgroup"
    members: List[int]
    generators: List[int] = Field(default_factory=list)


class SubgroupRecord(BaseModel):
    members: List[int]
    generators: List[int] = Field(default_factory=list)
    order: int
    index: int


class AssertionRecord(BaseModel):
    name: str
    status: Literal["pass", "fail"]
    witness: Any = None
    detail: str = ""


class ConstructionReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    ring_name: str
    ring_hash: str
    mode: Mode
    domain_order: int
    domain_index: int
    a: int
    n: int
    b_list: List[int]
    c: SubgroupRecord
    literal_annihilator_order: Optional[int] = None
    transversal: List[int]
    s: int
    orbit_sizes: List[int]
    product_bound: str
    set_size: int
    span_size: int
    assertion_log: List[AssertionRecord] = Field(default_factory=list)
    valid: bool = False
    notes: List[str] = Field(default_factory=list)


class DescentStep(BaseModel):
    step: int
    y: int
    index_before: int
    index_after: int
    n_step: int
    max_ann_index: int
    ann_bound: int
    samples: int


class DescentTrace(BaseModel):
    side: Literal["left", "right"]
    initial_index: int
    n: int
    steps: List[DescentStep] = Field(default_factory=list)
    final: SubgroupRecord
    assertion_log: List[AssertionRecord] = Field(default_factory=list)
    valid: bool = False


class ExtractionReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    ring_name: str
    ring_hash: str
    mode: Mode
    source_flavor: Literal["associative", "lie"]
    epsilon: str
    threshold: str
    x_set: List[int]
    b: SubgroupRecord
    index_b: int
    eberhard_r: int
    eberhard_verified: bool
    generation_length: int
    summand_bound: int
    orbit_bound: str
    max_orbit_over_b: int
    d: SubgroupRecord
    witness_generators: List[int]
    index_d: int
    max_orbit_over_d: int
    square_or_bracket_set_size: int
    square_or_bracket_span_size: int
    converse_bound: str
    construction: Optional[ConstructionReport] = None
    descent: Optional[DescentTrace] = None
    assertion_log: List[AssertionRecord] = Field(default_factory=list)
    valid: bool = False
    notes: List[str] = Field(default_factory=list)


class OracleResult(BaseModel):
    schema_version: str = SCHEMA_VERSION
    ring_name: str
    ring_hash: str
    mode: Mode
    objective: Objective
    members: List[int]
    index: int
    span_size: int
    value: List[int]
    candidates: int


class InfoReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    ring_name: str
    ring_hash: str
    flavor: Literal["associative", "lie"]
    orders: List[int]
    cardinality: int
    commutative: bool
    noncommuting_pair: Optional[List[int]] = None
    cp: str
    zp: Optional[str] = None
    max_centralizer_index: int
    max_right_annihilator_index: Optional[int] = None
    max_left_annihilator_index: Optional[int] = None
    permutation: List[int] = Field(default_factory=list)


class VerifyOutcome(BaseModel):
    suite: str
    passed: bool
    checks: List[AssertionRecord] = Field(default_factory=list)


class VerifyReport(BaseModel):
    schema_version: str = SCHEMA_VERSION
    ring_name: str
    ring_hash: str
    suite: str
    passed: bool
    suites: List[VerifyOutcome] = Field(default_factory=list)


class GapRow(BaseModel):
    """Extracted ideal against the brute-force optimum for one ring and mode."""

    ring_name: str
    cardinality: int
    mode: Mode
    objective: Objective
    cp: str
    zp: Optional[str] = None
    valid: bool
    index_d: int
    span_d: int
    oracle_index: Optional[int] = None
    oracle_span: Optional[int] = None
    extracted_value: List[int] = Field(default_factory=list)
    oracle_value: Optional[List[int]] = None
    gap: Optional[int] = None
    feasible: Optional[bool] = None
