"""The [2^n - 1, n + 1] code of a Boolean function and its weight distribution."""

from tdesigns import code_enumerate, code_weight_distribution, generate_s5612, load_fixture
from tdesigns.codes import enumerate_weight_distribution

fano = load_fixture("fano").structure.characteristic_function()
dist = code_weight_distribution(fano)
print(dist.length, dist.dimension, dist.rows())

# %% The closed form reads weights off the spectrum; enumeration builds all 256 codewords
print(enumerate_weight_distribution(fano) == dist)
print(code_enumerate(fano, 1, 0), "= number of blocks")

# %% The S(5,6,12) code has minimum distance 132
big = code_weight_distribution(generate_s5612().characteristic_function())
print(big.length, big.dimension, big.minimum_distance)
for w, c in big.rows():
    print(w, c)
