"""Truncated characters as exact signatures of piecewise-linear motion.

A character assigns a rational number to every forest up to a cutoff
degree and respects the shuffle product.  Lifting letter increments
gives the canonical such character; convolving two lifts runs the two
motions one after the other.

Run with: python3 demos/rough_signatures.py
"""

from fractions import Fraction

from postlie import (canonical_lift, char_convolve, char_to_csv,
                     character_failures, embed_rough_path, parse_forest,
                     unembed_rough_path)

X = canonical_lift({"o": Fraction(1, 2)}, 3)
Y = canonical_lift({"o": Fraction(1, 3)}, 3)

print("lift of a step of size 1/2, cut at degree 3:")
print(char_to_csv(X))
print("a character has no shuffle defects:", character_failures(X) == [])
print()

Z = char_convolve(X, Y)
W = canonical_lift({"o": Fraction(5, 6)}, 3)
print("running 1/2 then 1/3 equals one step of 5/6:", Z == W)
print()

E = embed_rough_path(X)
print("embedded on the word side the values change flavor:")
print(char_to_csv(E))
print("single-node value survives:",
      E.value(parse_forest("[o]")) == Fraction(1, 2))
print("embedding round-trips:", unembed_rough_path(E) == X)
