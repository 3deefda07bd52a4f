# coding: utf-8

# # Finite inverse semigroups
#
# The symmetric inverse monoid I_n holds every injective partial map of
# {1..n}.  A map is written as a list of images, 0 meaning "undefined",
# so [2,0] sends 1 to 2 and is undefined at 2.

# In[1]:

from groupoidal.core import green_data, semigroup_from_generators, sigma_quotient
from groupoidal.families import inverse_symmetric
from groupoidal.partial_perm import PartialPerm

S = inverse_symmetric(2)
print(len(S), "elements:", [S.label(s) for s in range(len(S))])


# Products compose right to left, (fg)(x) = f(g(x)).

# In[2]:

a, t = S.index("[2,0]"), S.index("[2,1]")
print("a*t =", S.label(S.mul(a, t)), " t*a =", S.label(S.mul(t, a)))
print("inverse of a:", S.label(S.inv(a)))


# Idempotents are the partial identities, and they commute.

# In[3]:

print("idempotents:", [S.label(e) for e in S.idempotents])


# Green's D-classes of I_n are indexed by rank.

# In[4]:

gd = green_data(S)
for cls in gd.D:
    print(sorted(S.label(s) for s in cls))


# The minimum group congruence sigma.  I_2 has a zero, so its maximal
# group image is trivial.  Its group of units is S_2.

# In[5]:

G, proj = sigma_quotient(S)
print("maximal group image of I_2 has order", G.order)
H = S.restrict([S.index("[1,2]"), t])
print("of its unit group:", sigma_quotient(H)[0].order)


# Any set of partial permutations generates an inverse semigroup.

# In[6]:

T = semigroup_from_generators([PartialPerm.parse("[2,3,0]")])
print(len(T), [T.label(s) for s in range(len(T))])
