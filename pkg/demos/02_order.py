# coding: utf-8

# # Natural order, filters and closed inverse subsemigroups

# In[1]:

from groupoidal.families import inverse_symmetric
from groupoidal.order import bar_closure, enumerate_closed_inverse_subsemigroups, enumerate_filters, is_conjugate

S = inverse_symmetric(2)
e1, e12, t = S.index("[1,0]"), S.index("[1,2]"), S.index("[2,1]")
print("e1 <= e12:", S.leq(e1, e12), "  e12 <= e1:", S.leq(e12, e1))


# Upward closure of a set under the natural order.

# In[2]:

print(sorted(S.label(s) for s in S.up([e1])))


# Filters of the idempotent semilattice, and all closed inverse subsemigroups.

# In[3]:

print(len(enumerate_filters(S)), "filters")
family = enumerate_closed_inverse_subsemigroups(S)
for H in family:
    print(sorted(S.label(s) for s in H))


# The bar closure of a filter adds the elements that sit above it.

# In[4]:

F = frozenset([e12])
print(sorted(S.label(s) for s in bar_closure(S, F)))


# Conjugate closed subsemigroups: {e1}^ and {e2}^ are swapped by [2,0].

# In[5]:

e2 = S.index("[0,2]")
w = is_conjugate(S, S.up([e1]), S.up([e2]))
print("conjugating element:", S.label(w))
