"""Twists, T(p^2), eta-quotient metadata and the parameters attached to a prime."""

from fractions import Fraction

from crankforms import (
    CRANK,
    EtaQuotient,
    HeckeContext,
    QSeries,
    QuadChar,
    admissible_prime,
    eta_weight_char,
    hecke_Tp2,
    ligozat_order,
    theorem_params,
    twist,
    twist_slash,
)
from crankforms.errors import NoAdmissibleExponent

f = QSeries([1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42])
print(twist(f, QuadChar("top", 5)).coeffs)
print(twist_slash(f, 5).coeffs)   # the same thing, through the Gauss sum

print(list(hecke_Tp2(QSeries.from_dict({1: 1}, 700), HeckeContext(5, 2)).terms()))

e = EtaQuotient.parse("5:5,1:-1")
print(eta_weight_char(e))
E1 = EtaQuotient.parse("1:5,5:-1")
print(ligozat_order(E1, Fraction(0, 1)), ligozat_order(E1, 5))

print(admissible_prime(CRANK, 5), theorem_params(CRANK, 23, 10))
try:
    theorem_params(CRANK, 5, 50)
except NoAdmissibleExponent as exc:
    print("ell = 5:", exc)
