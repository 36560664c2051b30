"""Shared reference constructions used across the test modules.

The degree-5/8/10/12 rows work over quadratic fields; degree 3/4/6 over Q.
Expected polynomial values are the published displays for these examples,
entered verbatim; everything else in the tests is recomputed from scratch.
"""

from fractions import Fraction

from cycgal import ConstructionParams, Mat2, Poly, QuadRat, field_spec

H = Fraction(1, 2)


def Q5(u, v=0):
    return QuadRat.of(u, v, 5)


def params_n6():
    return ConstructionParams(
        spec=field_spec(6), A=Mat2.of(1, 1, -1, 2), C=QuadRat.rational(1)
    )


def params_n5():
    A = Mat2(Q5(1), Q5(Fraction(-5, 2), H), Q5(1), Q5(Fraction(-3, 2), H))
    return ConstructionParams(spec=field_spec(5), A=A, C=Q5(-1))


def params_n8():
    A = Mat2(
        QuadRat.of(2, 0, 2), QuadRat.of(-2, 1, 2), QuadRat.of(1, 0, 2), QuadRat.of(0, 1, 2)
    )
    return ConstructionParams(spec=field_spec(8), A=A, C=QuadRat.rational(1, 2))


def params_n10():
    A = Mat2(Q5(5), Q5(5), Q5(-5, -2), Q5(5))
    return ConstructionParams(spec=field_spec(10), A=A, C=QuadRat.rational(1, 5))


def params_n12():
    A = Mat2(
        QuadRat.of(2, 0, 3), QuadRat.of(-4, 1, 3), QuadRat.of(1, 0, 3), QuadRat.of(-1, 0, 3)
    )
    return ConstructionParams(spec=field_spec(12), A=A, C=QuadRat.rational(1, 3))


def params_n3():
    return ConstructionParams(
        spec=field_spec(3), A=Mat2.of(0, -1, 1, 1), C=QuadRat.rational(0)
    )


def params_n4():
    return ConstructionParams(
        spec=field_spec(4), A=Mat2.of(-1, -1, 1, -1), C=QuadRat.rational(1)
    )


def all_params():
    return {
        3: params_n3(),
        4: params_n4(),
        5: params_n5(),
        6: params_n6(),
        8: params_n8(),
        10: params_n10(),
        12: params_n12(),
    }


# f1 for the degree-6 construction (exact, primitive form)
F1_N6 = Poly(list(reversed([2, 2, -35, 40, 5, -14, 2])), 1)

# f1 for the degree-5 construction over Q[sqrt(5)] (published display)
F1_N5_DISPLAY = Poly(
    [Q5(178, -80), Q5(-395, 175), Q5(300, -128), Q5(-80, 32), Q5(-3, 1), Q5(3, -1)], 5
)

# its conjugate, as displayed
F1_N5_CONJ_DISPLAY = Poly(
    [Q5(178, 80), Q5(-395, -175), Q5(300, 128), Q5(-80, -32), Q5(-3, -1), Q5(3, 1)], 5
)

# root expression for x2 in the degree-5 construction
P2_N5 = Poly(
    [
        Q5(14, -6),
        Q5(Fraction(-61, 2), Fraction(15, 2)),
        Q5(18, -3),
        Q5(Fraction(-1, 2), H),
        Q5(-1),
    ],
    5,
)

# primitive form of f1*f1' for the degree-5 construction (content 4 removed)
F_WREATH_N5 = Poly(
    list(reversed([1, -2, -39, 170, 35, -1538, 3753, -3970, 1825, -155, -79])), 1
)

# f1*f1' for the degree-10 construction, already primitive
F_WREATH_N10 = Poly(
    list(
        reversed(
            [
                1, 2, -449, -570, 28905, 26568, -648012, -371400, 5691930,
                2011900, -19618774, -4515500, 28459650, 4137000, -16200300,
                -1473000, 3613125, 191250, -280625, -6250, 3125,
            ]
        )
    ),
    1,
)

# dihedral resolvent minimal polynomials
G_N5 = Poly(list(reversed([1, -1, -840, -6135, 24775, -19900])), 1)
G_N10 = Poly(
    list(
        reversed(
            [
                1, -1, -22950, 6120, 166823200, -61635600, -383129676000,
                257616832000, 23507471680000, 13131916800000, -235594368000000,
            ]
        )
    ),
    1,
)

# cyclic quintic over Q with its root expressions (fixture data)
CYCLIC_QUINTIC = Poly(list(reversed([1, -5, -1, 12, 5, -1])), 1)
CYCLIC_QUINTIC_PS = [
    Poly([Fraction(c, 23) for c in reversed(row)], 1)
    for row in (
        [-18, 98, -23, -216, 6],
        [5, -17, -46, 60, 98],
        [1, -8, 0, 58, 38],
        [12, -73, 69, 75, -27],
    )
]

# degree-5 polynomial with symmetric Galois group (negative control)
S5_QUINTIC = Poly(list(reversed([1, 2, -1, 1, -1, 1])), 1)


def proportional_over_K(f: Poly, g: Poly) -> bool:
    """f and g agree up to a nonzero field scalar (cross-multiplied lc check)."""
    if f.degree != g.degree or f.D != g.D:
        return False
    return f.scale(g.lc) == g.scale(f.lc)
