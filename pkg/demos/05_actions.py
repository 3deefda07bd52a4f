# coding: utf-8

# # Transitive actions, covers and strong congruences

# In[1]:

from groupoidal.actions import (
    action_graph,
    check_cover,
    coset_space_action,
    equivalent_to_coset_action,
    is_fundamental,
    is_universal,
    schutzenberger_action,
    strong_congruences,
    universal_cover,
)
from groupoidal.families import inverse_symmetric

S = inverse_symmetric(2)
e12, t = S.index("[1,2]"), S.index("[2,1]")


# Every transitive action is a coset space S/S_x.

# In[2]:

X = schutzenberger_action(S, S.index("[1,0]"))
alpha = equivalent_to_coset_action(X, X.base)
print("bijective:", alpha.is_bijective(), " mapping", alpha.mapping)


# The universal action at {e12} and its fundamental quotient.

# In[3]:

U = coset_space_action(S, [e12])
Fd = coset_space_action(S, [e12, t])
print("U universal:", is_universal(U), "  Fd fundamental:", is_fundamental(Fd))


# Strong congruences on U correspond to subgroups of the local group S_2.

# In[4]:

for c in strong_congruences(U):
    print(c.partition, "subgroup size", len(c.subgroup))


# The universal cover U -> Fd is a cover of labelled graphs.

# In[5]:

Y, cover = universal_cover(Fd)
print("cover:", check_cover(Y, Fd, cover))
print(action_graph(U).edges)
