"""The (6,1)-Sun quiver and its two involutions.

The (2k,n)-Sun quiver is a 2k-cycle with alternating orientation and spokes
of length n.  For odd k it carries two involutions: the reflection tau and
the half-rotation rho, and the reduced inequality systems for the two differ.
"""

from quiver_cones import DimVector, ExtTable, counts, make_sun, serialize_quiver

q, (tau, rho) = make_sun(3, 1)
t = ExtTable(q)

print(serialize_quiver(q, [tau, rho]))

# Dimension vectors symmetric under both involutions must be constant;
# (2,2,...,2) is the smallest interesting one.
alpha = DimVector(q, (2,) * 6)
n1, n2, (n3_tau, n3_rho) = counts(t, alpha, [tau, rho])
print(f"alpha = {alpha.values}")
print(f"n1 = {n1}, n2 = {n2}, n3(tau) = {n3_tau}, n3(rho) = {n3_rho}")
print()

# A vector symmetric under rho but not under tau.
beta = DimVector(q, (1, 2, 3, 1, 2, 3))
n1, n2, (n3_rho,) = counts(t, beta, [rho])
print(f"beta = {beta.values}")
print(f"n1 = {n1}, n2 = {n2}, n3(rho) = {n3_rho}")
