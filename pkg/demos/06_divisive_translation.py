"""
Translating between divisive and inversive notation
===================================================

"""

# Division and inverse are interdefinable: x / y is x * y^-1, and x^-1
# is 1 / x.  The translators rewrite terms between the two signatures.
from meadows import (
    PunchId,
    SignatureId,
    Add,
    Div,
    Inv,
    Var,
    ZERO,
    ONE,
    conforms,
    div_to_inv,
    inv_to_div,
    eval_punched,
    parse_term,
    render,
)

x, y = Var("x"), Var("y")

t = Div(x, y)
print(render(t), " -> ", render(div_to_inv(t)))

t = Inv(x)
print(render(t), "   -> ", render(inv_to_div(t)))

# Translation is purely structural; nothing is simplified along the way.
# Round-tripping x^-1 through the divisive form comes back as 1 * x^-1
# rather than collapsing to x^-1.
t = Inv(x)
back = div_to_inv(inv_to_div(t))
print()
print(render(t), "-> divisive -> inversive:", render(back))

# The round trip is still an identity provably, not just numerically:
# the decision procedures confirm the original and the translation
# denote the same function.
from meadows import TheoryId, decide_divisive, decide_iamdz_gil

decision = decide_iamdz_gil(t, back)
print("provably equal under ratiaz-gil:", decision.verdict)

t = parse_term("x / (y + 1)")
decision = decide_divisive(t, Div(x, Add(y, ONE)), TheoryId.DAMD)
print(render(t), "equals its reparse under damd:", decision.verdict)

# Translation also respects partiality: a divisive term under the
# all-zero punch is undefined exactly when its inversive translation
# is undefined at 0^-1.
t = Div(ONE, ZERO)
print()
print(render(t), "under divall0:  ", eval_punched(t, {}, PunchId.DIV_ALL0))
print(render(div_to_inv(t)), "under inv0:", eval_punched(div_to_inv(t), {}, PunchId.INV0))

# The weaker punch diverges: divnz0 defines 0 / 0 = 0, but the
# translation 0 * 0^-1 still hits the punched inverse.
t = Div(ZERO, ZERO)
print()
print(render(t), "under divnz0:   ", eval_punched(t, {}, PunchId.DIV_NONZERO0))
print(render(div_to_inv(t)), "under inv0:", eval_punched(div_to_inv(t), {}, PunchId.INV0))

# Signatures are checked along the way: the result of div_to_inv always
# conforms to the inversive signature and vice versa.
t = parse_term("(x + y) / (x * y)")
print()
print(render(t), "translates to", render(div_to_inv(t)))
print("conforms to iamdz:", conforms(div_to_inv(t), SignatureId.IAMDZ))
