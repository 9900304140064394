# The exact inequality behind the growth-rate argument.
#
# With lambda = m - 3/50, b_n >= lambda b_(n-1) follows by induction once
#     m - lambda >= lambda * (m / (lambda^mu - m))^2,
# for patterns whose variables (at least two of them) each occur mu or more
# times.  Everything below is exact rational arithmetic.

from fractions import Fraction

from golodavoid import lemma5_closed_form, parse_pattern, pattern_golod_series, ratio_check
from golodavoid.series import decimal_prefix

for m, mu in [(3, 3), (2, 4)]:
    lam = m - Fraction(3, 50)
    res = lemma5_closed_form(m, mu, lam, 2)
    print(f"m={m} mu={mu}: rhs = {res.rhs} ~ {decimal_prefix(res.rhs)}  holds={res.holds}")

# The same inequality fails for doubled patterns over 4 letters.
print(lemma5_closed_form(4, 2, 3, 2))

# Numerically, the ratio property holds deep into the series.
for text, m in [("xxxyyy", 3), ("xxxxyyyy", 2)]:
    p = parse_pattern(text)
    b = pattern_golod_series(p.occurrence_vector, m, 500)
    print(text, ratio_check(b, m - Fraction(3, 50)))
