"""
CLI Output Models
Pydantic documents emitted by every command; field elements are integers,
polynomials ascending integer lists and matrices lists of rows
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..codes.framework import CheckReport


class FieldReport(BaseModel):
    p: int
    m: int
    q: int
    modulus: List[int]
    operation: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    result: Optional[int] = None


class BasisReport(BaseModel):
    p: int
    m: int
    d: int
    operation: str
    alpha: Optional[int] = None
    elements: List[int] = Field(default_factory=list)
    normal: Optional[bool] = None
    self_dual: Optional[bool] = None
    gram: List[List[int]] = Field(default_factory=list)


class SkewPolyReport(BaseModel):
    p: int
    m: int
    s: int
    convention: str
    operation: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    result: Dict[str, Any] = Field(default_factory=dict)


class ConstacyclicReport(BaseModel):
    p: int
    m: int
    s: int
    n: int
    u: int
    generator: List[int]
    cofactor: List[int]
    dimension: int
    dual_dimension: int
    generator_matrix: List[List[int]]
    dual_generator_poly: List[int]
    dual_matrix: List[List[int]]
    checks: Dict[str, bool]


class SkewRSReport(BaseModel):
    p: int
    m: int
    s: int
    n: int
    k: int
    alpha: int
    beta: int
    delta: int
    g: List[int]
    gamma: int
    generator_matrix: List[List[int]]
    dual_g: Optional[List[int]] = None
    mu: Optional[int] = None
    nu: Optional[int] = None
    sge_matrix: Optional[List[List[int]]] = None
    min_distance: Optional[int] = None
    dual_min_distance: Optional[int] = None
    mds: Optional[bool] = None
    checks: Dict[str, bool] = Field(default_factory=dict)


class ConvolutionalReport(BaseModel):
    p: int
    d: int
    t: int
    n: int
    basis: List[int]
    U: List[List[int]]
    h: int
    idempotent: List[List[int]]
    M_R_f: List[List[List[int]]]
    dual_generators: List[List[List[int]]]
    checks: Dict[str, bool]


class SuiteReport(BaseModel):
    suite: str
    passed: bool
    checked: int
    failures: int
    checks: List[CheckReport]


class VerificationReport(BaseModel):
    seed: int
    passed: bool
    checked: int
    suites: List[SuiteReport]
    skipped: List[str] = Field(default_factory=list)
    oracle_selections: Dict[str, str] = Field(default_factory=dict)


DOCUMENTS = {
    "FieldReport": FieldReport,
    "BasisReport": BasisReport,
    "SkewPolyReport": SkewPolyReport,
    "ConstacyclicReport": ConstacyclicReport,
    "SkewRSReport": SkewRSReport,
    "ConvolutionalReport": ConvolutionalReport,
    "VerificationReport": VerificationReport,
    "CheckReport": CheckReport,
}


def document_schemas() -> Dict[str, Any]:
    """JSON schema of every document type, keyed by model name"""
    return {name: model.model_json_schema(mode="serialization") for name, model in DOCUMENTS.items()}
