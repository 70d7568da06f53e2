"""Exact colored HOMFLY-PT polynomials of twist knots.

The heavy lifting lives in the C++ extension ``twistknot._core``; this
package re-exports its surface.
"""

from ._core import (
    NoConventionMatchesError,
    NotDivisibleError,
    Poly1,
    Poly2,
    QRat,
    UnknownSuiteError,
    ZeroFactorError,
    brace_a_fall,
    brace_fall,
    colored_homfly_fig8,
    colored_homfly_trefoil,
    colored_homfly_twist,
    colored_jones,
    kauffman_jones,
    qbinomial,
    resolve_jones_convention,
    run_all_suites,
    run_suite,
    s_p,
    sigma,
    suite_names,
    t_p,
    tau,
    theta,
)

__all__ = [
    "NoConventionMatchesError",
    "NotDivisibleError",
    "Poly1",
    "Poly2",
    "QRat",
    "UnknownSuiteError",
    "ZeroFactorError",
    "brace_a_fall",
    "brace_fall",
    "colored_homfly_fig8",
    "colored_homfly_trefoil",
    "colored_homfly_twist",
    "colored_jones",
    "kauffman_jones",
    "qbinomial",
    "resolve_jones_convention",
    "run_all_suites",
    "run_suite",
    "s_p",
    "sigma",
    "suite_names",
    "t_p",
    "tau",
    "theta",
]

__version__ = "0.1.0"
