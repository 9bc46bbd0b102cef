"""Necessary conditions for (n-2)/2-(n, n/2, 1) designs over a range of n."""

from tdesigns.admissibility import divisibility_disagreements, enumerate_admissible, steiner_half_report

print(enumerate_admissible(8, 150))

# %% Why 16 and 14 drop out
for n in (14, 16):
    print(steiner_half_report(n).as_json())

# %% The classical and spectral divisibility conditions are not the same test
family = [((n - 2) // 2, n, n // 2, 1) for n in range(8, 151, 2)]
print(divisibility_disagreements(family))
