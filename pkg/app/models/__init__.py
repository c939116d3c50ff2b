from app.models.base import BaseModel
from app.models.beam import BeamParams, LGIndex, ModeComponent
from app.models.diagnostics import AstigmaticLens, IntensityMap, LarmorConfig
from app.models.field import ComplexField, GridSpec, PolarQuadrature
from app.models.spectrum import EllRange, ModeSpectrum, Normalization, SweepResult
from app.models.tilt import RetrievalConfig, TiltGeometry

__all__ = [
    "BaseModel",
    "BeamParams", "LGIndex", "ModeComponent",
    "AstigmaticLens", "IntensityMap", "LarmorConfig",
    "ComplexField", "GridSpec", "PolarQuadrature",
    "EllRange", "ModeSpectrum", "Normalization", "SweepResult",
    "RetrievalConfig", "TiltGeometry",
]
