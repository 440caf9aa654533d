# coding: utf-8

# # The quantum K-theory ring of the Cayley plane
#
# The full multiplication table of the 27 Schubert structure sheaves of
# E6/P6 ships with the package.  It is checked against associativity, a
# codimension/sign rule, the degree bound, and the Weyl group of E6.

# In[1]:

from cominq.cayley import (
    LABEL_WORDS, infer_index, link_labels, load_table, multiply, parse_expr, parse_label,
    verify_associativity, verify_codim_sign, verify_degree_bound,
)
from cominq.curves import diameter, parse_space

table = load_table()
print(len(table.entries), "products")


# In[2]:

x = parse_expr("O1")
power = parse_expr("1")
for k in range(1, 18):
    power = multiply(table, power, x)
    if k in (1, 2, 8, 16, 17):
        print(f"O1^{k} =", power)


# The point class squared involves q^2, and 2 is exactly the diameter of the
# space computed from the Weyl group.

# In[3]:

point = parse_label("O16")
print("O16 * O16 =", table.product(point, point))
print("diameter", diameter(parse_space("E6")), " index", infer_index(table))


# ## Integrity checks

# In[4]:

for rep in (verify_associativity(table), verify_degree_bound(table), verify_codim_sign(table)):
    print("\n".join(rep.lines()))


# ## Labels and Weyl words

# In[5]:

rep = link_labels(table, parse_space("E6").wp)
print("all linked:", rep.passed)
for label, word in list(LABEL_WORDS.items())[:5]:
    print(f"{str(label):5s} {word}")
