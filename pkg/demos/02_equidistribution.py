"""The crank splits p(5n+4), p(7n+5), p(11n+6) into equal classes."""

from crankforms import CRANK, CongruenceClaim, search, verify_claim
from crankforms.harness import class_counts
from crankforms.serialize import emit

for A, B in ((5, 4), (7, 5), (11, 6)):
    claim = CongruenceClaim(CRANK, A, 1, 1, A, B, "equidistribution")
    print(emit(verify_claim(claim, 99), "table").decode(), end="")

print(class_counts(CRANK, 5, 9))   # p(9) = 30, six per class
print(class_counts(CRANK, 5, 6))   # no such luck off the progression

# let the search rediscover the mod 5 progression
for c in search(CRANK, 5, 1, 1, 12, 100, "equidistribution"):
    print(c.A, c.B, c.describe())
