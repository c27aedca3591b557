from pydantic import BaseModel
from typing import Dict, List, Optional


class TermEntrySchema(BaseModel):
    shape: str
    word: List[str]
    coeff: str


class PolynomialSchema(BaseModel):
    alphabet: List[str]
    terms: List[TermEntrySchema]


class EmbedResultSchema(BaseModel):
    term: str
    shape: str
    word: List[str]
    degree: int


class EvalResultSchema(BaseModel):
    expression: str
    images: List[str]
    result: PolynomialSchema
    text: str
    degree: Optional[int] = None


class ProjectionSchema(BaseModel):
    input: str
    degree: Optional[int] = None
    component: PolynomialSchema
    text: str
    split: Optional[Dict[str, str]] = None


class VerdictSchema(BaseModel):
    status: str
    bound: Optional[int] = None
    certificate: str
    witness: Optional[PolynomialSchema] = None
    witness_text: Optional[str] = None


class FreeGeneratorReportSchema(BaseModel):
    generators: List[PolynomialSchema]
    generators_text: List[str]
    degrees: List[int]
    seed_retained: List[str]
    leading_forms: List[str]
    bound: int
    certificates: Dict[str, str]


class EnumerationRowSchema(BaseModel):
    degree: int
    shapes: int
    monomials: int
    slice_dim: Optional[int] = None


class EnumerationSchema(BaseModel):
    alphabet: List[str]
    rows: List[EnumerationRowSchema]
    listing: Optional[List[str]] = None


class PropertyResultSchema(BaseModel):
    name: str
    passed: bool
    checked: int
    counterexample: Optional[str] = None


class OracleReportSchema(BaseModel):
    alphabet: List[str]
    bound: int
    seed: int
    samples: int
    passed: bool
    properties: List[PropertyResultSchema]
