# %% [markdown]
# # The excluded graph has a path factor anyway
#
# K1 v (K_{n-2} u K1) fails the isolated-vertex condition at its cut vertex:
# deleting that one vertex strands the pendant vertex, and 1 > 2/3.
# That only shows the sufficient condition fails. Both factor engines still find
# a {P3, P4, P5}-factor, because the pendant vertex can sit at the end of a path
# through the cut vertex into the clique.

# %%
from fractions import Fraction

from aspectra import exception_graph, has_p345_factor, kano_condition
from aspectra.verify import exception_check

# %%
for n in range(5, 13):
    rep = exception_check(n, Fraction(1, 3))
    blocks = rep.dp.certificate.blocks if rep.dp.has_factor else None
    print(f"n={n:2d} condition fails at {rep.kano.worst_set} (margin {rep.kano.worst_margin}), "
          f"factor={rep.dp.has_factor}, engines agree={rep.engines_agree}, blocks={blocks}")

# %% [markdown]
# Larger orders are beyond the brute-force oracle but the bitmask search still answers.

# %%
for n in (15, 20):
    out = has_p345_factor(exception_graph(n))
    print(n, out.has_factor, out.certificate.blocks)
    assert out.certificate.validate(exception_graph(n))

# %%
print(kano_condition(exception_graph(8)))
