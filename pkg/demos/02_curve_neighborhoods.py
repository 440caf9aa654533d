# coding: utf-8

# # Degree distance and curve neighborhoods
#
# For a cominuscule space X = G/P the degree distance from the base point to
# the Schubert cell of u is the number of times the special reflection s_node
# occurs in any reduced word of u.  The largest such number is the diameter
# d_X(2).

# In[1]:

from cominq.curves import (
    deg_dist, diameter, dx_table, gamma, gamma1, line_chain, parse_space, verify_dx3, x_small,
)
from cominq.weyl import format_word, reduced_word


# In[2]:

for name in ["Gr(3,7)", "LG(4)", "OG(6)", "Q(7)", "E6", "E7"]:
    X = parse_space(name)
    t = dx_table(X)
    print(f"{name:8s} dim {X.dim:3d}  diameter {diameter(X)}  table ({t.d2}, {t.d3})")


# ## One line at a time
#
# gamma1 enlarges a Schubert variety by all lines meeting it.  Starting from a
# line in E7/P7 we reach an 18-dimensional Schubert variety, then everything.

# In[3]:

E7 = parse_space("E7")
x1 = x_small(E7, 1)
g = gamma1(E7, x1)
print(format_word(reduced_word(g)), "length", g.length)
print("second step is the whole space:", gamma(E7, x1, 2) == E7.wp.u_max)


# ## Chains of lines
#
# Cutting the canonical word at each occurrence of s_node gives a chain of
# Schubert cells, consecutive ones joined by a line.

# In[4]:

X = parse_space("E6")
u = x_small(X, 2)
print("X_2 in E6/P6:", format_word(reduced_word(u)), "deg_dist", deg_dist(X, u))
for step in line_chain(X, u):
    print("  ", format_word(reduced_word(step)) or "e")


# ## The special varieties X_d
#
# The (d_X(3) - d)-neighborhood of X_d fills the space.

# In[5]:

for name in ["Gr(2,5)", "Gr(4,8)", "LG(3)", "E6", "E7"]:
    print(name, verify_dx3(parse_space(name)).lines())
