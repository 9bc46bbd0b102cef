"""Three more ways to recognise a t-design: Johnson scheme, relative designs, orthogonal arrays."""

from itertools import combinations

from tdesigns import BooleanFunction, load_fixture
from tdesigns.delsarte import (
    johnson_design_check,
    johnson_outer_distribution,
    oa_strength,
    outer_distribution_hamming,
    relative_design_check,
    relative_design_sides,
)

fano = load_fixture("fano").structure
broken = load_fixture("fano-minus-one").structure

# %% Johnson scheme: B'_1 = B'_2 = 0 for a 2-design
print([str(b) for b in johnson_outer_distribution(fano)])
print([str(b) for b in johnson_outer_distribution(broken)])
print(johnson_design_check(fano, 2), johnson_design_check(broken, 2))

# %% Relative designs: both sides agree exactly on designs, LHS exceeds RHS otherwise
for D in (fano, broken):
    print([relative_design_sides(D, i) for i in (1, 2)], relative_design_check(D, 2))

# %% Orthogonal arrays: the even-weight vectors of length 4 have strength 3
even = BooleanFunction(4, frozenset(x for x in range(16) if bin(x).count("1") % 2 == 0))
print(oa_strength(even), [str(b) for b in outer_distribution_hamming(even).Bp])

# %% The weight-2 vectors alone only reach strength 1
rows = frozenset(sum(1 << i for i in c) for c in combinations(range(4), 2))
print(oa_strength(BooleanFunction(4, rows)))
