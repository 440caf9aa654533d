# coding: utf-8

# # Alternating sums over degree sequences
#
# A quantum K-theory structure constant of degree d is an alternating sum over
# sequences (d_0, d_1, ..., d_r) of total d with d_i >= 1 for i >= 1, each
# weighted by (-1)^r.  The invariants themselves are abstract integer tables
# here; the point is the combinatorics.

# In[1]:

from cominq.qconstants import (
    alt_binomial_sum, assemble_direct, assemble_matrix, cancellation_sum, count_sequences,
    degenerate_tables, enumerate_sequences, random_tables,
)


# In[2]:

for s in enumerate_sequences(3):
    print(s.entries, "sign", s.sign)
print("counts by d:", [len(enumerate_sequences(d)) for d in range(8)])


# ## Why terms cancel
#
# If a term only depends on min(d_0, dmax), then for d > dmax the sequences
# sharing d_0 come in binomial families whose signs sum to zero.

# In[3]:

print([alt_binomial_sum(k) for k in range(1, 8)])
print("d=5, d0=1:", [count_sequences(5, 1, length) for length in range(1, 6)])
c = {0: 17, 1: -4, 2: 9}.__getitem__
print("cancellation_sum d=2, dmax=2:", cancellation_sum(2, 2, c))
print("cancellation_sum d=5, dmax=2:", cancellation_sum(5, 2, c))


# ## Three ways to add it up
#
# The brute-force sum over intermediate classes, the matrix chain, and the
# term-by-term report agree.

# In[4]:

t = random_tables(3, 3, seed=42)
report = assemble_direct(t, 0, 1, 2, 3)
for term in report.terms:
    print(term)
print("direct", report.value, " matrix", assemble_matrix(t, 0, 1, 2, 3))


# With tables whose terms depend only on min(d_0, 1) and r, the terms with a
# common d_0 and r collapse to one value each.

# In[5]:

t = degenerate_tables(2, 4, dmax=1, seed=7)
for term in assemble_direct(t, 0, 0, 1, 4).terms:
    print(term["sequence"], term["term"])
