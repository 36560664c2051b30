"""Polynomials with cyclic, wreath-product and dihedral Galois groups.

The construction: pick a 2x2 matrix A over Q or Q[sqrt(D)] whose trace and
determinant satisfy trace^2 = (zeta + 1/zeta)^2 * det for a primitive root of
unity zeta, and take the numerator f1 of the Moebius orbit sum
X + A(X) + ... + A^(n-1)(X) + C.  Then f1 generates a cyclic degree-n
extension; over a quadratic field, f1 times its conjugate is a rational
polynomial with wreath-product group Cn wr C2, and a numeric resolvent built
from paired root orbits yields a degree-n rational polynomial with dihedral
group Dn.  Every claim is certified by exact polynomial identities and by
factorization types modulo primes.
"""

from .arith import FieldMismatchError, FieldSpec, QuadRat, field_spec, supported_degrees
from .galois import (
    CyclicCertificate,
    WreathReport,
    certify_f1_irreducible,
    certify_wreath,
    conjugate_poly,
    verify_cyclic,
    verify_supplied_roots,
    wreath_product_poly,
    zero_expression,
)
from .grammar import ParseError, parse_factor_type, parse_matrix, parse_poly, parse_quadrat
from .modp import (
    FactorType,
    GroupModel,
    IrreducibilityCertificate,
    PolyP,
    ScanResult,
    certify_irreducible_Q,
    cyclic_admissible_types,
    ddf_type,
    dihedral_admissible_types,
    is_squarefree_mod_p,
    reduce_mod_p,
    scan_primes,
    wreath_admissible_types,
    wreath_group_model,
)
from .moebius import (
    ConstructionParams,
    ConstructionResult,
    InvalidMatrixError,
    Mat2,
    MatrixValidity,
    construct_f1,
    moebius_apply,
    orbit_sum,
    search_params,
    validate_matrix,
)
from .numeric import (
    DihedralResult,
    RootOrbit,
    dihedral_resolvent,
    embed,
    find_roots,
    orbit_roots,
    reconstruct_integer_poly,
    resolvent_conjugates,
)
from .poly import (
    Poly,
    RatFunc,
    compose_mod,
    ext_gcd,
    integralize,
    normalize_primitive,
    poly_gcd,
)

__version__ = "0.1.0"

__all__ = [
    "QuadRat", "FieldSpec", "field_spec", "supported_degrees", "FieldMismatchError",
    "Poly", "RatFunc", "poly_gcd", "ext_gcd", "compose_mod",
    "normalize_primitive", "integralize",
    "Mat2", "MatrixValidity", "ConstructionParams", "ConstructionResult",
    "InvalidMatrixError", "validate_matrix", "moebius_apply", "orbit_sum",
    "construct_f1", "search_params",
    "PolyP", "FactorType", "reduce_mod_p", "is_squarefree_mod_p", "ddf_type",
    "ScanResult", "scan_primes", "IrreducibilityCertificate",
    "certify_irreducible_Q", "GroupModel", "wreath_group_model",
    "wreath_admissible_types", "dihedral_admissible_types", "cyclic_admissible_types",
    "conjugate_poly", "wreath_product_poly", "zero_expression",
    "CyclicCertificate", "verify_cyclic", "verify_supplied_roots",
    "certify_f1_irreducible", "WreathReport", "certify_wreath",
    "embed", "find_roots", "RootOrbit", "orbit_roots", "resolvent_conjugates",
    "reconstruct_integer_poly", "DihedralResult", "dihedral_resolvent",
    "ParseError", "parse_poly", "parse_quadrat", "parse_matrix", "parse_factor_type",
    "__version__",
]
