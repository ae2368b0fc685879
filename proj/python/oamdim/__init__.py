"""Sector-plate OAM analyzers: mode spectra, Shannon dimensionality,
coincidence fringes and plate optimization."""

from ._core import (
    TWO_PI,
    AnalyzerDimension,
    Fringe,
    ModeSpectrum,
    OptimizationReport,
    QuadratureSpectrum,
    SectorPlate,
    SourceSpectrum,
    __version__,
    analyzer_dimension,
    analyzer_overlap,
    captured_power,
    coincidence_fringe,
    default_l_max,
    dimension_vs_sectors,
    evaluate_candidate,
    fringe_dimension,
    load_plate,
    mode_spectrum,
    mode_spectrum_quadrature,
    optimize_plate,
    overlap_fringe_oracle,
    read_fringe_csv,
    save_plate,
    schmidt_number,
    shannon_dimension,
    single_sector_dimension,
    truncate_spectrum,
    visibility,
    windowed_dimension,
    write_fringe_csv,
)

__all__ = [
    "TWO_PI",
    "AnalyzerDimension",
    "Fringe",
    "ModeSpectrum",
    "OptimizationReport",
    "QuadratureSpectrum",
    "SectorPlate",
    "SourceSpectrum",
    "__version__",
    "analyzer_dimension",
    "analyzer_overlap",
    "captured_power",
    "coincidence_fringe",
    "default_l_max",
    "dimension_vs_sectors",
    "evaluate_candidate",
    "fringe_dimension",
    "load_plate",
    "mode_spectrum",
    "mode_spectrum_quadrature",
    "optimize_plate",
    "overlap_fringe_oracle",
    "read_fringe_csv",
    "save_plate",
    "schmidt_number",
    "shannon_dimension",
    "single_sector_dimension",
    "truncate_spectrum",
    "visibility",
    "windowed_dimension",
    "write_fringe_csv",
]
