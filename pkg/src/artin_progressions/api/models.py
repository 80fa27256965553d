from pydantic import BaseModel

from artin_progressions.schemas import ModulusClassification, OutputRecord


class BaseResponse(BaseModel):
    g: int
    h: int
    g1: int
    g2: int
    discriminant: int


class DensityResponse(BaseModel):
    base: BaseResponse
    f: int
    digits: int
    total: str
    densities: list[OutputRecord]


class ClassificationResponse(BaseModel):
    base: BaseResponse
    fmax: int
    wud_moduli: list[int]
    moduli: list[ModulusClassification]
