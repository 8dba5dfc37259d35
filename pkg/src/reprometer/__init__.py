"""reprometer: reproducibility assessment of measurements based on the unbiased CV."""

__version__ = "1.0.0"

__all__ = ["__version__"]
