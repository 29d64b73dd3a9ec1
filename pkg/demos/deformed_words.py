"""The deformed layer: trees with integer weights on nodes and edges.

Vertices carry polynomial weights, edges carry lowering weights, and
the grafting picks up correction terms that move weight from an edge
onto the vertex below it.

Run with: python3 demos/deformed_words.py
"""

from postlie import (bracket0, parse_reg_tree, phi_reg, reg_assoc_product,
                     reg_gl_product, reg_graft, render_lincomb)

X = parse_reg_tree("[o{1}]")            # bare vertex of weight one
X2 = parse_reg_tree("[o{2}]")
BULLET = parse_reg_tree("[o{0}[o{0}]{0}]")   # one plain branch
I1 = parse_reg_tree("[o{0}[o{0}]{1}]")       # branch with a weighted edge


def show(label, value):
    print(f"{label:<26} {render_lincomb(value)}")


print("The word product glues at the root; weights add there.\n")
show("X . X", reg_assoc_product(X, X))
show("X . branch", reg_assoc_product(X, BULLET))

I0V1 = parse_reg_tree("[o{0}[o{1}]{0}]")     # branch over a weighted vertex

print()
print("Grafting lands below the branch of the target.  A polynomial")
print("vertex raises weights instead of attaching, and grafting under")
print("a weighted vertex adds one lowered companion term.\n")
show("X into branch", reg_graft(X, BULLET))
show("weighted into weighted", reg_graft(I1, I0V1))

print()
print("The two products agree on polynomial weights but not on")
print("branches, which is where the layer stops being commutative.\n")
show("X * X", reg_gl_product(X, X))
show("branch * weighted", reg_gl_product(BULLET, I1))
show("weighted * branch", reg_gl_product(I1, BULLET))

print()
print("The bracket is the word commutator on single branches, and")
print("pairing a branch against X lowers its edge weight.\n")
show("[weighted, X]", bracket0(I1, X))
show("[branch, weighted]", bracket0(BULLET, I1))

print()
print("The word-side isomorphism fixes letters and rewrites longer")
print("words with lower-degree tails.\n")
show("phi of X^2", phi_reg(X2, 4))
show("phi of X.branch", phi_reg(reg_assoc_product(X, BULLET), 4))
