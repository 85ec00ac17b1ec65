"""Crank counts from the generating function, next to a brute-force tally."""

from crankforms import CRANK, brute_counts, crank_table

table = crank_table(CRANK, 11)
for n, row in enumerate(table):
    print(n, dict(sorted(row.items())))

# n = 1 is the one place the generating function and the statistic differ
print("GF at n=1:        ", table[1])
print("crank of (1):     ", brute_counts("crank", 1))

# from n = 2 on they agree exactly
print(all(table[n] == brute_counts("crank", n) for n in range(2, 11)))
