"""Krawtchouk and Eberlein polynomials: tables and the identities they satisfy."""

from tdesigns import binomial, eberlein, krawtchouk_table

# %% The table for n = 7. Row k lists P_k(0), ..., P_k(7).
K = krawtchouk_table(7)
for k in range(8):
    print(k, K.row(k))

# %% Row 3 starts 35, 5, -5, and P_n(n) = (-1)^n
print(K(3, 0), K(3, 1), K(3, 2), K(7, 7))

# %% Orthogonality: sum_i C(n,i) P_r(i) P_s(i) = 2^n C(n,r) [r == s]
print("orthogonal:", K.check_orthogonality())

# %% Reflection P_k(x) = (-1)^k P_k(n - x)
print(all(K(k, x) == (-1) ** k * K(k, 7 - x) for k in range(8) for x in range(8)))

# %% Eberlein polynomials of J(7, 3); Q_l(0) is the valency C(k,l) C(n-k,l)
for l in range(4):
    print(l, [eberlein(7, 3, l, x) for x in range(4)], binomial(3, l) * binomial(4, l))
