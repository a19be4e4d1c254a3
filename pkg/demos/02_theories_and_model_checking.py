"""
Axiom catalogs and sampled model checking
=========================================

"""

# The theory catalog stores each named axiom set as data.  The
# arithmetical theories are literal set differences of the commutative
# ring axioms: drop x + (-x) = 0, then drop x + 0 = x.
from meadows import TheoryId, axioms, conditional_law

print("commutative ring axioms:")
for eq in axioms(TheoryId.CR):
    print(f"  {eq.label:12s} {eq.render()}")

print()
print("zero-free arithmetical fragment (neither 0 nor - occurs):")
for eq in axioms(TheoryId.ACR):
    print(f"  {eq.label:12s} {eq.render()}")

# The inversive arithmetical theory adds the unrestricted inverse law;
# its zero-carrying cousin replaces it with two weaker axioms that stay
# valid when the inverse of 0 is 0.
print()
print("iamd adds:  ", axioms(TheoryId.IAMD)[-1].render())
for eq in axioms(TheoryId.IAMDZ)[-2:]:
    print("iamdz adds: ", eq.render())

# One theory carries a conditional law on top of its equations: the
# general inverse law, the side condition that drives the Theorem-style
# case split in the decision procedure.
law = conditional_law(TheoryId.RATIAZ_GIL)
print()
print("conditional law of ratiaz-gil:", law.render())

# check_model probes a theory against the exact rational evaluator on a
# chosen carrier: positive, non-negative, or all rationals.  Sampling
# is seeded, so reports are reproducible.
from meadows import Carrier, check_model

report = check_model(TheoryId.IAMD, Carrier.POSITIVE, samples=500, seed=7)
print()
print("iamd on positive rationals:", "all pass" if report.passed else "FAILED")

# On the non-negative rationals the unrestricted inverse law breaks at
# zero, and the report carries the witness.
report = check_model(TheoryId.IAMD, Carrier.NON_NEGATIVE, samples=500, seed=7)
for failure in report.failures():
    print(f"iamd on non-negative rationals: {failure.label} fails,")
    print(f"  witness: {failure.witness.assignment}",
          f"gives {failure.witness.left} != {failure.witness.right}")

# The zero-carrying axioms are designed exactly for that carrier:
report = check_model(TheoryId.IAMDZ, Carrier.NON_NEGATIVE, samples=500, seed=7)
print("iamdz on non-negative rationals:", "all pass" if report.passed else "FAILED")

# And the full rational-number specification holds over all rationals.
report = check_model(TheoryId.RATZI_SPEC, Carrier.ALL, samples=500, seed=7)
print("ratzi on all rationals:         ", "all pass" if report.passed else "FAILED")
