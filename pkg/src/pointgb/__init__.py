"""Exact Groebner bases for vanishing ideals of finite point sets."""

from .exactnum import (
    QQ,
    CyclotomicField,
    CyclotomicNumber,
    PrimeField,
    PrimeFieldElement,
    binom_mod_p,
    cyc_inv,
    cyc_mul,
    field_from_tag,
    omega,
)
from .polyring import (
    DEGLEX,
    LEX,
    Polynomial,
    TermOrder,
    compare,
    elementary_symmetric,
    evaluate,
    leading_monomial,
    reduce,
    s_polynomial,
)
from .groebner import (
    GroebnerBasis,
    autoreduce,
    buchberger,
    is_groebner,
    is_reduced,
    reduced_groebner_basis,
    standard_monomials,
)
from .pointideal import (
    PointSet,
    add_point,
    characteristic_function,
    single_point_basis,
    vanishing_basis,
)
from .boundcert import (
    CertificateRefused,
    DegreeCertificate,
    becs_bound,
    certify_degree,
    new_standard_monomial,
)

__version__ = "0.1.0"
