# coding: utf-8

# # The Paterson groupoid of a finite inverse semigroup

# In[1]:

from groupoidal.dot import export_dot
from groupoidal.families import inverse_symmetric
from groupoidal.groupoid import connected_components, local_group, paterson_groupoid

S = inverse_symmetric(2)
G = paterson_groupoid(S)
print(len(G.objects), "objects,", len(G.arrows), "arrows")
print("isomorphic to restricted product:", G.iso_certificate["isomorphism"])


# Components and their local groups.

# In[2]:

for c in connected_components(G):
    x = min(c)
    print([G.objects[y] for y in sorted(c)], "local group order", local_group(G, x).order)


# DOT output for graphviz.

# In[3]:

print(export_dot(G))
