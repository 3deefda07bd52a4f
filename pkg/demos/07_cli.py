# coding: utf-8

# # Command line
#
# The same reports are available from the shell:
#
#     groupoidal analyze --builtin inverse_symmetric:2
#     groupoidal run --builtin inverse_symmetric:3 --compute reps --field q --out out/
#     groupoidal export-dot --builtin inverse_symmetric:2 --graph actions
#
# Here we drive the entry point from Python with a throwaway cache.

# In[1]:

import json
import os
import tempfile

from groupoidal.cli import main

os.environ["GROUPOIDAL_CACHE_DIR"] = tempfile.mkdtemp()
main(["analyze", "--builtin", "inverse_symmetric:2"])


# Errors come back as JSON on stderr with a distinct exit code.

# In[2]:

code = main(["reps", "--builtin", "group:C3", "--field", "q"])
print("exit code", code)


# A semigroup file can be a list of generators.

# In[3]:

path = os.path.join(tempfile.mkdtemp(), "gens.json")
with open(path, "w") as fh:
    json.dump(["[2,3,0]", "[2,1,3]"], fh)
main(["cosets", "--input", path])
