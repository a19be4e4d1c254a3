"""
Normal forms: positive polynomials and coprime fractions
========================================================

"""

# Inverse-free terms over {1, +, *} normalize to polynomials with
# strictly positive integer coefficients: distribute all products and
# merge equal monomials.  Equality of such terms is equality of the
# polynomial maps.
from meadows import Var, ONE, Add, Mul, Inv, numeral, poly_normal, render

x = Var("x")
y = Var("y")

square = Mul(Add(x, ONE), Add(x, ONE))
print(render(square), " normalizes to ", poly_normal(square).render())

product = Mul(numeral(2), numeral(3))
print(render(product), "normalizes to", poly_normal(product).render())

# Terms with the inverse split into a single fraction of positive
# polynomials: the inverse distributes over products and cancels with
# itself, so one inverse floats to the top.  No gcd cancellation is
# attempted; the decision procedure happily compares cross products.
from meadows import split_inverse

t = Add(x, Inv(y))
fraction = split_inverse(t)
print(render(t), "splits into", fraction.render())

# Closed terms reduce all the way to coprime integer fractions.
from meadows import closed_normal_iamd, closed_normal_iamdz, closed_normal_full, parse_term

half_plus_third = parse_term("2^-1 + 3^-1")
print("2^-1 + 3^-1 =", closed_normal_iamd(half_plus_third).render())

# With 0 in the signature the inverse is zero-totalized: 0^-1 = 0, and
# the normal form may be the zero form.
print("0^-1       =", closed_normal_iamdz(parse_term("0^-1")).render())
print("0 + 3/9    =", closed_normal_iamdz(parse_term("0 + 3 * 9^-1")).render())

# Full meadow terms (with - and /) normalize through exact evaluation,
# signs and all.
print("-(2/4)     =", closed_normal_full(parse_term("-(2 * 4^-1)")).render())
print("1/(1 + -1) =", closed_normal_full(parse_term("1 / (1 + -1)")).render())

# Open zero-carrying terms first have 0 eliminated: either everything
# collapses to 0 or a zero-free term remains.
from meadows import zero_elim, ZERO

t = Add(x, Mul(ZERO, y))
print(render(t), "  after zero elimination: ", render(zero_elim(t)))
print("0^-1 * x", "after zero elimination: ", render(zero_elim(Mul(Inv(ZERO), x))))

# Nested inverses square polynomial sizes, so normalization carries a
# monomial-count guardrail.
from meadows import SizeLimit, power

wide = power(Add(Add(x, y), ONE), 9)
try:
    split_inverse(wide, max_monomials=10)
except SizeLimit as exc:
    print("guardrail:", exc)
