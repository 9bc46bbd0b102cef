"""S(5,6,12) built as a PSL(2,11) orbit, then checked against its expected spectrum."""

from tdesigns import anf, complement_design, generate_s5612, verify_bruteforce, walsh_full
from tdesigns.fixtures import S5612_BASE_BLOCK
from tdesigns.spectral import steiner_full_spectrum

D = generate_s5612()
print("base block", S5612_BASE_BLOCK, "->", D.b, "blocks")
print(verify_bruteforce(D, 5))
print("self-complementary:", complement_design(D) == D)

# %% The dense spectrum, weight class by weight class
measured = walsh_full(D.characteristic_function()).by_weight()
for h in sorted(measured):
    print(h, dict(measured[h]))

# %% The spectrum any 5-(12,6,1) design must have, derived without the design
predicted = steiner_full_spectrum(12).multiset()
print("matches prediction:", predicted == measured)

# %% ANF: the 132 blocks in degree 6 and every 7-subset in degree 7
print(anf(D.characteristic_function()).degree_histogram)
