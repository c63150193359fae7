"""Exact tree amplitudes, Bell identities and series inversion for scalar
field diffeomorphisms.

All polynomial values are canonical strings over exact rationals (e.g.
``"12*a1^2 - 6*a2"``); verification suites return report dictionaries.
"""

try:
    from ._core import (  # noqa: F401
        W_coeff,
        __version__,
        b_poly,
        bell,
        c_coeff,
        d_coeff,
        inverse_series,
        legendre_coeffs,
        loday_coeffs,
        poly_eval,
        series_json,
        verify,
        w_coeff,
    )
except ImportError:  # build-tree layout: _core.so next to this package on PYTHONPATH
    from _core import (  # noqa: F401
        W_coeff,
        __version__,
        b_poly,
        bell,
        c_coeff,
        d_coeff,
        inverse_series,
        legendre_coeffs,
        loday_coeffs,
        poly_eval,
        series_json,
        verify,
        w_coeff,
    )

__all__ = [
    "W_coeff",
    "b_poly",
    "bell",
    "c_coeff",
    "d_coeff",
    "inverse_series",
    "legendre_coeffs",
    "loday_coeffs",
    "poly_eval",
    "series_json",
    "verify",
    "w_coeff",
    "__version__",
]
