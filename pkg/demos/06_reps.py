# coding: utf-8

# # Irreducible representations by induction from maximal subgroups
#
# One irreducible for each D-class idempotent e and each irreducible
# of the maximal subgroup G_e, built on a transversal of the R-classes
# in the L-class of e.  Arithmetic is exact (fractions or mod p).

# In[1]:

from groupoidal.fields import PrimeField, Rationals
from groupoidal.families import inverse_symmetric
from groupoidal.reps import (
    certify_simple,
    irreducible_representations,
    match_factors,
    regular_composition_factors,
    res_ind_check,
)

S = inverse_symmetric(3)
reps = irreducible_representations(S, Rationals())
print("dims", [M.dim for M in reps], " sum of squares", sum(M.dim**2 for M in reps))


# A 2-dimensional one, element by element.

# In[2]:

M = [R for R in reps if R.dim == 2][0]
print(M.info)
for s in (S.index("[2,1,3]"), S.index("[2,3,1]")):
    print(S.label(s))
    print(M(s))


# Simplicity check by spinning after reduction mod 5 and 7.

# In[3]:

print([certify_simple(R) for R in reps])


# Restriction undoes induction.

# In[4]:

print(res_ind_check(S, M.idempotent, M.group_rep, M))


# Cross-check against a direct decomposition of the regular module over GF(7).

# In[5]:

factors = regular_composition_factors(S, 7)
print(len(factors), "composition factors, match:", match_factors(reps, factors, 7))


# Over GF(3) the group S_3 is not semisimple and the pipeline refuses.

# In[6]:

try:
    irreducible_representations(S, PrimeField(3))
except Exception as exc:
    print(type(exc).__name__, exc)
