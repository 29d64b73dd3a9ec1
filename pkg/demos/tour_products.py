"""Tour of the core operations on planar decorated forests.

Run with: python3 demos/tour_products.py
"""

from postlie import (LinComb, gl_antipode, gl_product, left_graft,
                     mkw_coproduct, natural_growth, parse_forest,
                     primitive_projection, render_lincomb, render_tensor)


def b(text):
    return LinComb.basis(parse_forest(text))


def show(label, value, render=render_lincomb):
    print(f"{label:<28} {render(value)}")


print("Grafting attaches the first forest below nodes of the second,")
print("always as a leftmost child, once per target node.\n")
show("[a] grafted into [b]", left_graft(b("[a]"), b("[b]")))
show("[a] grafted into [b[c]]", left_graft(b("[a]"), b("[b[c]]")))
show("[a][b] grafted into [c]", left_graft(b("[a][b]"), b("[c]")))

print()
print("The Grossman-Larson product splits the left factor and grafts")
print("one half into the right factor, so it mixes word growth with")
print("tree growth.\n")
show("[a] * [b]", gl_product(b("[a]"), b("[b]")))
show("[a][b] * [c]", gl_product(b("[a][b]"), b("[c]")))

print()
print("Its antipode inverts forests for the product; on a single tree")
print("it is just a sign.\n")
show("S([a])", gl_antipode(b("[a]")))
show("S([a][b])", gl_antipode(b("[a][b]")))

print()
print("The coproduct runs over left-admissible cuts; the cut-away")
print("branches land in the first leg.\n")
show("coproduct of [a[b]]", mkw_coproduct(b("[a[b]]")), render_tensor)
show("coproduct of [a][b]", mkw_coproduct(b("[a][b]")), render_tensor)

print()
print("Natural growth attaches the left argument at every node of the")
print("right one and averages over the node count.\n")
show("[a] grown on [b[c]]", natural_growth(b("[a]"), b("[b[c]]")))

print()
print("The primitive projection removes everything a growth step can")
print("produce and is the identity on letters.\n")
show("projection of [a]", primitive_projection(b("[a]")))
show("projection of [a][b]", primitive_projection(b("[a][b]")))
show("projection of [a[b]]", primitive_projection(b("[a[b]]")))
