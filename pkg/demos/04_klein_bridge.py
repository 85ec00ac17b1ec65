"""Klein forms at (0, s/N) and the identity omega_s / k = -(q;q)^2 / ((zeta^s q)(zeta^-s q))."""

from crankforms import klein_expansion, omega, omega_over_klein
from crankforms.modforms import klein_filter_sum

N = 5
k = klein_expansion(1, N, 6)
print("k_(0,1/5) leading terms:", [str(c) for c in k.coeffs[:3]])
print("omega_1 =", omega(1, N))
print(omega_over_klein(1, N, 4).coeffs[:2])

# summing over s against zeta^(-ms) lands back in the integers
for m in range(N):
    print(m, klein_filter_sum(m, N, 12).coeffs)
