# Golod lower bounds for square-free and cube-free words.
#
# For a set S of forbidden words with at most c_i words of each length i,
# expanding 1 / (1 - m x + sum c_i x^i) gives a lower bound on the number of
# length-n words over m letters avoiding S, provided every coefficient is
# non-negative.  Here S is the set of instances of a pattern.

from golodavoid import first_negative, instance_gf, parse_pattern, pattern_golod_series

# Instances of xx over 3 letters: 3^i squares of each even length 2i.
print(list(instance_gf((2,), 3, 8)))

# Over 3 letters the bound breaks down quickly: a negative coefficient at n=5.
b = pattern_golod_series((2,), 3, 10)
print(list(b), "first negative:", first_negative(b))

# Over 7 letters it stays positive as far as we care to look.
b = pattern_golod_series((2,), 7, 300)
print("xx over 7 letters, first negative through 300:", first_negative(b))

# Cubes over 2 letters: the method fails at n=7 even though cube-free binary
# words exist in every length.
xxx = parse_pattern("xxx")
print(list(pattern_golod_series(xxx.occurrence_vector, 2, 10)))
