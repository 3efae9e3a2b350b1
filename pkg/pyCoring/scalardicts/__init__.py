from .scalardict import ScalarDict
from .linear_maps import LinearMap

__all__ = ["ScalarDict", "LinearMap"]
