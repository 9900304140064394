# Checking the Golod bound against exact counts.
#
# count_avoiders enumerates every avoiding word by depth-first extension, so
# the numbers below are exact.  Wherever the Golod series is non-negative it
# must sit below them.

from golodavoid import compare, count_avoiders, count_instances, instance_gf, parse_pattern
from golodavoid.certifier import comparison_csv

print(comparison_csv(compare(parse_pattern("xxx"), 2, 12)))
print(comparison_csv(compare(parse_pattern("xx"), 7, 6)))

# Binary square-free words stop at length 3.
print(count_avoiders(2, parse_pattern("xx"), 6).counts)

# Instance counts never exceed the coefficients of the instance series.
p = parse_pattern("xyx")
c = instance_gf(p.occurrence_vector, 2, 10)
for n in range(3, 11):
    print(n, count_instances(2, p, n), c[n])
