"""Request and response bodies for the counting service.

Counts are decimal strings end to end: they are exact integers that can
outgrow what JSON consumers reliably parse as numbers.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class CountRequest(BaseModel):
    composition: Optional[str] = None
    peakset: Optional[str] = None
    n: Optional[int] = None
    methods: List[str] = ["fast"]


class CountResponse(BaseModel):
    n: int
    composition: str
    peakset: Optional[str]
    count: str
    method: str
    counts_by_method: Dict[str, str]
    agree: bool


class TableRequest(BaseModel):
    composition: str
    stat: str


class TableResponse(BaseModel):
    n: int
    composition: str
    stat: str
    row_labels: Optional[List[int]]
    col_labels: List[int]
    rows: List[List[int]]


class MaximalRequest(BaseModel):
    n: int
    prune: bool = False
    include_counts: bool = False


class MaximalityReportModel(BaseModel):
    n: int
    max_value: str
    argmax: List[str]
    predicted: Optional[List[str]]
    predicted_value: Optional[str]
    verdict: str
    counts: Optional[Dict[str, str]] = None


class VerifyRequest(BaseModel):
    n_from: int = Field(alias="from")
    n_to: int = Field(alias="to")
    prune: bool = False

    model_config = {"populate_by_name": True}


class VerifyResponse(BaseModel):
    n_from: int = Field(serialization_alias="from")
    n_to: int = Field(serialization_alias="to")
    all_match: bool
    reports: List[MaximalityReportModel]


class FactorizeRequest(BaseModel):
    composition: str


class FactorizeResponse(BaseModel):
    composition: str
    k: int
    factors: List[str]


class EnumerateRequest(BaseModel):
    composition: str
    limit: Optional[int] = None


class EnumerateResponse(BaseModel):
    composition: str
    n: int
    total: str
    permutations: List[List[int]]
