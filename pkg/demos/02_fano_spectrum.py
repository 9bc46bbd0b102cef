"""The Fano plane through its characteristic function: Walsh spectrum and ANF."""

from tdesigns import anf, load_fixture, verify_bruteforce, verify_spectral, walsh_full

fano = load_fixture("fano").structure
print(fano.block_points())

# %% Every pair of points lies on exactly one line
print(verify_bruteforce(fano, 2))

# %% Walsh values on weights 0..2 are 7, 1, -1: constant on each class, as a 2-design requires
spec = walsh_full(fano.characteristic_function())
for h, values in spec.by_weight().items():
    print(h, dict(values))

# %% The spectral test reaches the same verdict without counting pairs
print(verify_spectral(fano, 2))

# %% Remove one line and the test returns a witness vector instead
broken = load_fixture("fano-minus-one").structure
v = verify_spectral(broken, 2)
print(v.is_design, v.first_violation)

# %% ANF: the cubic terms are the lines, then 28 quartic terms and x_1...x_7
form = anf(fano.characteristic_function())
print(form.degree_histogram)
print(form.render())
