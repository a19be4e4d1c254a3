"""
Terms, numerals, and the seven signatures
=========================================

"""

# Terms are immutable trees built from Zero, One, Var, Add, Mul, Neg,
# Inv, and Div.  Python's operators are overloaded on them, so ordinary
# expressions build abstract syntax.
from meadows import Var, ONE, ZERO, Inv, Mul, Add, numeral, power, render

x = Var("x")
y = Var("y")

t = x * (y + ONE)
print("a term:", render(t))

# The inverse is postfix in the concrete syntax; ** -1 or .inv() builds it.
print("its inverse:", render(t**-1))
print("same thing: ", render(t.inv()))

# Natural numbers are sugar for the numerals 1, 1+1, (1+1)+1, ...
from meadows import NumeralStyle

four = numeral(4)
print("numeral 4 collapsed:  ", render(four))
print("numeral 4 spelled out:", render(four, NumeralStyle.STRUCTURAL))

# Powers unfold through iterated products: x^3 is ((1*x)*x)*x under
# the hood, and the renderer folds the chain back.
from meadows import parse_term

cube = power(x, 3)
print("x cubed:", render(cube))
print("x^3 parses back to the same tree:", parse_term("x^3") == cube)

# Seven signatures tell apart which constructors a term may use.  The
# full meadow signatures keep 0 and -; the "arithmetical" ones drop -
# (and optionally 0); each comes in an inversive and a divisive flavor.
from meadows import SignatureId, conforms

inverse_law = Mul(x, Inv(x))
print()
for sig in SignatureId:
    print(f"{render(inverse_law)} conforms to {sig.value:6s}:", conforms(inverse_law, sig))

# Zero is excluded from the strictly arithmetical signatures:
print()
print("x + 0 in iamd: ", conforms(Add(x, ZERO), SignatureId.IAMD))
print("x + 0 in iamdz:", conforms(Add(x, ZERO), SignatureId.IAMDZ))

# Substitution and free variables are plain functions over the tree.
from meadows import free_vars, substitute

s = substitute(t, "y", Inv(x))
print()
print("t with y := x^-1:", render(s))
print("free variables:  ", free_vars(s))
