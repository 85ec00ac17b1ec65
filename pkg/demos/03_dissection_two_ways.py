"""Residue-class series by the root-of-unity filter and by reading off z-exponents."""

from crankforms import CrankSpec, crank_dissection_dft, dissect_laurent

spec = CrankSpec(2, 1, 1)
N, order = 5, 25
for m in range(N):
    exact = crank_dissection_dft(spec, N, m, order)   # sums in Z[zeta_5], then certified integral
    direct = dissect_laurent(spec, N, m, order)
    print(m, exact == direct, exact.coeffs[:12])
