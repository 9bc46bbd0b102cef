"""Walsh values of putative (n-2)/2-(n, n/2, 1) systems on the middle weight class."""

from tdesigns.spectral import (
    alternating_lambda_sum,
    check_sum_identities,
    steiner_a,
    steiner_a_tilde,
    steiner_nonblock_system,
    steiner_params,
)

for n in (8, 12, 20, 24):
    params = steiner_params(n)
    a, at = steiner_a(n), steiner_a_tilde(n)
    print(f"n={n}: b={params.b} a={a} a~={at}")

# %% The same values from the intersection-count system, for a block and a non-block
for n in (8, 12):
    yb, vb = steiner_nonblock_system(n, True)
    yn, vn = steiner_nonblock_system(n, False)
    print(n, yb, vb, yn, vn)
    print("  alternating lambda sum:", alternating_lambda_sum(n))

# %% Linear, quadratic and Parseval identities on the assembled spectrum
for n in (8, 12, 20):
    print(n, check_sum_identities(n, steiner_params(n).b))
