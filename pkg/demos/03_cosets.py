# coding: utf-8

# # Cosets and the semigroups K(S), L(S)
#
# A coset here is an upward closed set A with A A^-1 A inside A.
# Cosets multiply as the smallest coset containing the set product.

# In[1]:

from groupoidal.cosets import build_KS, build_LS, coset_space_action, enumerate_cosets, left_coset
from groupoidal.families import inverse_symmetric
from groupoidal.order import closed_closure

S = inverse_symmetric(2)
cosets = enumerate_cosets(S)
print(len(cosets), "cosets of I_2")


# In[2]:

K = build_KS(S)
print("|K(S)| =", len(K))
for i in range(len(K)):
    print(i, K.label(i))


# L(S) keeps only the cosets reachable from principal ones; for a finite
# semigroup it is a copy of S.

# In[3]:

L = build_LS(S)
print("|L(S)| =", len(L), " iso:", L.certificate["isomorphism"])


# Left cosets of a closed inverse subsemigroup, and the coset space action.

# In[4]:

e1, a = S.index("[1,0]"), S.index("[2,0]")
H = closed_closure(S, [e1])
print(sorted(S.label(s) for s in left_coset(S, a, H).carrier))
X = coset_space_action(S, H)
print(len(X), "points; stabilizer", sorted(S.label(s) for s in X.stabilizer()))
