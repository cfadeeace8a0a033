"""Conversions between domain values and their JSON documents."""

from __future__ import annotations

import logging
from typing import Any, TypeVar

import pydantic

from cli.schemas import (
    FrobeniusModel,
    IwasawaElementModel,
    PresentationModel,
    ScalarModel,
    SeriesMatrixModel,
    SeriesModel,
    WeierstrassModel,
)
from iwasawa.element import IwasawaElement
from iwasawa.presentation import ModulePresentation
from iwasawa.weierstrass import WeierstrassData
from logmatrix.frobenius import FrobeniusData, Side, build_frobenius
from logmatrix.series_matrix import SeriesMatrix
from padic.errors import SchemaError, UsageError
from padic.scalar import PadicScalar
from padic.series import TruncatedSeries

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=pydantic.BaseModel)


def parse(model: type[M], data: Any) -> M:
    """``model.model_validate`` with schema failures mapped to SchemaError."""
    try:
        return model.model_validate(data)
    except pydantic.ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first.get("loc", ())) or "<root>"
        raise SchemaError(f"{model.__name__}: {where}: {first.get('msg')}") from exc


# ------------------------------------------------------------------
# Series and scalars
# ------------------------------------------------------------------

def encode_series(f: TruncatedSeries) -> dict:
    return {"p": f.p, "s": f.denom_exp, "N": f.p_prec, "D": f.x_prec, "coeffs": [str(c) for c in f.coeffs]}


def series_from_model(m: SeriesModel) -> TruncatedSeries:
    return TruncatedSeries.build(m.p, [int(c) for c in m.coeffs], m.D, m.N, m.s)


def decode_series(data: Any) -> TruncatedSeries:
    return series_from_model(parse(SeriesModel, data))


def encode_scalar(x: PadicScalar) -> dict:
    if x.is_exact_zero:
        return {"p": x.p, "unit": "0", "valuation": None, "precision": 0}
    return {"p": x.p, "unit": str(x.unit), "valuation": int(x.valuation), "precision": x.precision}


def decode_scalar(data: Any) -> PadicScalar:
    m = parse(ScalarModel, data)
    if m.valuation is None:
        return PadicScalar.exact_zero(m.p)
    if m.precision == 0:
        return PadicScalar.precision_zero(m.p, m.valuation)
    return PadicScalar(m.p, int(m.unit) % m.p**m.precision, m.valuation, m.precision)


# ------------------------------------------------------------------
# Frobenius data and series matrices
# ------------------------------------------------------------------

def encode_frobenius(fd: FrobeniusData) -> dict:
    return {
        "p": fd.p,
        "g_plus": fd.g_plus,
        "g_minus": fd.g_minus,
        "C": [[str(x) for x in row] for row in fd.C],
        "prec": fd.prec,
        "side": fd.side.value,
    }


def frobenius_from_model(m: FrobeniusModel, p: int | None = None, prec: int | None = None) -> FrobeniusData:
    """``p`` and ``prec`` fill in what the document leaves out."""
    prime = m.p if m.p is not None else p
    if prime is None:
        raise UsageError("the Frobenius document has no p and none was given on the command line")
    fd = build_frobenius([[int(x) for x in row] for row in m.C], m.g_minus, m.g_plus, prime, m.prec or prec)
    if m.side == Side.DUAL.value:
        return FrobeniusData(fd.p, fd.g_plus, fd.g_minus, fd.C, fd.prec, Side.DUAL)
    return fd


def decode_frobenius(data: Any, p: int | None = None, prec: int | None = None) -> FrobeniusData:
    return frobenius_from_model(parse(FrobeniusModel, data), p, prec)


def encode_series_matrix(m: SeriesMatrix) -> dict:
    return {
        "p": m.p,
        "g": m.g,
        "D": m.x_prec,
        "denominator_exp": m.denominator_exp,
        "level": m.level,
        "side": m.side.value if m.side is not None else None,
        "entries": [[encode_series(f) for f in row] for row in m.entries],
    }


def decode_series_matrix(data: Any) -> SeriesMatrix:
    m = parse(SeriesMatrixModel, data)
    rows = [[series_from_model(f) for f in row] for row in m.entries]
    side = Side(m.side) if m.side is not None else None
    return SeriesMatrix.of(rows, m.p, m.D, level=m.level, side=side)


# ------------------------------------------------------------------
# Iwasawa layer
# ------------------------------------------------------------------

def encode_element(e: IwasawaElement) -> dict:
    return {"p": e.p, "components": {str(eta): encode_series(f) for eta, f in enumerate(e.components)}}


def decode_element(data: Any) -> IwasawaElement:
    m = parse(IwasawaElementModel, data)
    return IwasawaElement.of(m.p, [series_from_model(m.components[str(eta)]) for eta in range(m.p - 1)])


def encode_weierstrass(w: WeierstrassData) -> dict:
    return {
        "p": w.p,
        "mu": w.mu,
        "lambda": w.lambda_,
        "distinguished": [str(c) for c in w.distinguished],
        "precision": w.precision,
        "unit": encode_series(w.unit),
        "certified": w.certified,
    }


def decode_weierstrass(data: Any) -> WeierstrassData:
    m = parse(WeierstrassModel, data)
    return WeierstrassData(
        p=m.p,
        mu=m.mu,
        lambda_=m.lambda_,
        distinguished=tuple(int(c) for c in m.distinguished),
        precision=m.precision,
        unit=series_from_model(m.unit),
        certified=m.certified,
    )


def encode_presentation(pres: ModulePresentation) -> dict:
    return {"r": pres.size, "matrix": [[encode_series(f) for f in row] for row in pres.matrix.entries]}


def decode_presentation(data: Any) -> ModulePresentation:
    m = parse(PresentationModel, data)
    return ModulePresentation.of([[series_from_model(f) for f in row] for row in m.matrix])
