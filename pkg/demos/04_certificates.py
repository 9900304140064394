# Avoidability certificates.
#
# A pattern with k variables and length at least 2^k, 3^k or 4^k contains a
# factor in which every variable occurs a multiple of 2, 3 or 4 times; that
# factor is then handled by a classical result, the exact growth inequality,
# or (weakest) by expanding the Golod series.

from golodavoid import analyze, certify, parse_pattern, zimin
from golodavoid.certifier import analysis_text

for text, target in [("xxxxyyyyxxxxyyyy", 2), ("xxxx", 2), ("xyzxyz", 4), ("xyxy", 4)]:
    print(certify(parse_pattern(text), target).to_text())

# Zimin patterns are one letter short of the 2^k threshold, and unavoidable.
print(analysis_text(analyze(zimin(4))))
print(certify(zimin(3), 4).to_text())
