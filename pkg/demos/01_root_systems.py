# coding: utf-8

# # Root systems and minimal coset representatives
#
# Everything in `cominq` is exact integer arithmetic.  A root system is
# generated from its Cartan matrix by closing the simple roots under the
# simple reflections; a Weyl group element is stored as its integer matrix on
# the root lattice.

# In[1]:

import numpy as np

from cominq.rootsys import build_root_system, cominuscule_nodes
from cominq.weyl import enumerate_wp, format_word, from_word, longest_element


# ## E7 from scratch
#
# 63 positive roots, and the highest root tells us which nodes are
# cominuscule: those where its coefficient is 1.

# In[2]:

e7 = build_root_system("E7", 7)
print(len(e7.positive_roots), "positive roots")
print("highest root", e7.highest_root)
print("cominuscule nodes", sorted(cominuscule_nodes(e7)))
print(e7.cartan)


# ## Words read left to right
#
# `from_word(rs, (i1, ..., ik))` is the product s_i1 ... s_ik.  The length is
# the number of positive roots sent negative.

# In[3]:

w0 = longest_element(e7, e7.nodes)
print("length of w0:", w0.length)
print("w0 acts as -1 on E7:", np.array_equal(w0.action, -np.eye(7, dtype=np.int64)))


# ## The Freudenthal variety E7/P7
#
# Minimal coset representatives come from a breadth-first search over the
# orbit of the seventh fundamental weight.  There are 56 of them, with this
# distribution of lengths:

# In[4]:

wp = enumerate_wp(e7, 7)
print(len(wp), "representatives")
print("rank sizes", wp.ranks())
print("longest:", format_word(wp.words[-1]))


# Bruhat order on these 56 elements, as a boolean matrix.  Row sums count how
# many representatives lie above each one.

# In[5]:

rel = wp.bruhat
print("relations:", int(rel.sum()))
print("above the base point:", int(rel[0].sum()), " below the top:", int(rel[:, -1].sum()))
u = from_word(e7, (7, 6, 5, 4, 2, 3, 4, 5, 6, 7))
print("is 7,6,5,4,2,3,4,5,6,7 below the top?", wp.leq(u, wp.u_max))
