"""Membership tests and inequality systems for the cone of semi-invariant weights.

Three equivalent characterisations are implemented:

* dw         -- sigma(alpha) = 0 and sigma(beta) <= 0 for every generic
                subdimension beta of alpha;
* inductive  -- the same with beta restricted to 0 <= beta <= alpha such that
                <beta,.> lies in the cone of alpha - beta (tested through the
                nonvanishing pairing);
* antiinv    -- for symmetric alpha and anti-symmetric sigma, one inequality
                per pair (beta, gamma) with alpha = beta + gamma + tau.beta
                and both pairings beta o gamma, beta o tau.beta nonzero.
"""

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import NotAntiSymmetricError, NotSymmetricDimensionError
from .quiver import (
    DimVector,
    OrbitBasis,
    antisym_basis,
    tau_dim,
    tau_weight,
    weight_eval,
)
from .schofield import box


@dataclass(frozen=True)
class IsoPair:
    """(beta, gamma) with alpha = beta + gamma + tau.beta for the ambient alpha."""

    beta: DimVector
    gamma: DimVector


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    reason: str = ""
    witness: Optional[DimVector] = None

    def __bool__(self):
        return self.member


@dataclass(frozen=True)
class InequalitySystem:
    """sigma(alpha) = 0 together with sigma(beta) <= 0 for each normal beta.

    When coordinate_space is set the system is read in anti-symmetric orbit
    coordinates; restricted_rows() gives the integer coefficient vectors.
    """

    alpha: DimVector
    normals: tuple
    coordinate_space: Optional[OrbitBasis] = None

    @property
    def quiver(self):
        return self.alpha.quiver

    def restricted_rows(self, primitive=False):
        """Coefficient vectors in orbit coordinates; primitive divides by the gcd,
        which keeps the halfspace but matches the conventional normal form."""
        if self.coordinate_space is None:
            raise ValueError("system has no coordinate space")
        rows = [self.coordinate_space.restrict_normal(b) for b in self.normals]
        return [primitive_row(r) for r in rows] if primitive else rows

    def ambient_rows(self):
        return [b.values for b in self.normals]


def primitive_row(row):
    g = gcd(*row) if row else 0
    return tuple(c // g for c in row) if g else tuple(row)


def _inductive_normals(t, a):
    """All beta <= a with beta o (a - beta) nonzero, lexicographic, cached."""
    key = ("inductive", t._as_tuple(a))
    cached = t._derived.get(key)
    if cached is None:
        cached = [b for b in box(t.quiver, a) if t.circ_nonzero(b, a - b)]
        t._derived[key] = cached
    return cached


def enumerate_I0(t, a, inv):
    """The pairs (beta, gamma): gamma = a - beta - tau.beta >= 0, both pairings nonzero."""
    if tau_dim(inv, a) != a:
        raise NotSymmetricDimensionError(f"{a.values} is not tau-symmetric")
    key = ("I0", t._as_tuple(a), inv.name, tuple(sorted(inv.vmap.items())))
    cached = t._derived.get(key)
    if cached is not None:
        return cached
    pairs = []
    for beta in box(t.quiver, a):
        tb = tau_dim(inv, beta)
        if not all(x + y <= z for x, y, z in zip(beta.values, tb.values, a.values)):
            continue
        gamma = a - beta - tb
        if t.circ_nonzero(beta, gamma) and t.circ_nonzero(beta, tb):
            pairs.append(IsoPair(beta, gamma))
    t._derived[key] = pairs
    return pairs


def member_dw(t, s, a):
    """Derksen-Weyman test: sigma(alpha) = 0 and disc(alpha, sigma) = 0."""
    if weight_eval(s, a) != 0:
        return MembershipResult(False, reason=f"sigma(alpha) = {weight_eval(s, a)} != 0")
    d = t.disc(a, s)
    if d != 0:
        _, witness = t.disc_witness(a, s)
        return MembershipResult(False, reason=f"disc = {d} > 0", witness=witness)
    return MembershipResult(True)


def member_inductive(t, s, a):
    """Inductive test over beta <= alpha with <beta,.> in the cone of alpha - beta."""
    if weight_eval(s, a) != 0:
        return MembershipResult(False, reason=f"sigma(alpha) = {weight_eval(s, a)} != 0")
    for beta in _inductive_normals(t, a):
        if weight_eval(s, beta) > 0:
            return MembershipResult(
                False, reason=f"sigma({beta.values}) > 0", witness=beta
            )
    return MembershipResult(True)


def member_antiinv(t, s, a, inv):
    """Reduced test for anti-symmetric weights on a tau-symmetric dimension."""
    if tau_dim(inv, a) != a:
        raise NotSymmetricDimensionError(f"{a.values} is not tau-symmetric")
    if s != -tau_weight(inv, s):
        raise NotAntiSymmetricError(f"weight {s.values} is not anti-symmetric")
    # sigma(alpha) = -sigma(alpha) for anti-symmetric sigma on symmetric alpha
    assert weight_eval(s, a) == 0
    for pair in enumerate_I0(t, a, inv):
        if weight_eval(s, pair.beta) > 0:
            return MembershipResult(
                False, reason=f"sigma({pair.beta.values}) > 0", witness=pair.beta
            )
    return MembershipResult(True)


def inequalities(t, a, method, inv=None, basis=None, dedup=True):
    """The inequality system of the chosen characterisation.

    For antiinv the system carries the orbit coordinate space; when dedup is
    set, normals whose restricted coefficient vectors coincide are emitted
    once (first occurrence in enumeration order).
    """
    if method == "dw":
        return InequalitySystem(a, tuple(t.generic_subdims(a)))
    if method == "inductive":
        return InequalitySystem(a, tuple(_inductive_normals(t, a)))
    if method != "antiinv":
        raise ValueError(f"unknown method {method!r}")
    if inv is None:
        raise ValueError("antiinv requires an involution")
    if basis is None:
        basis = antisym_basis(t.quiver, inv)
    pairs = enumerate_I0(t, a, inv)
    for p in pairs:
        tb = tau_dim(inv, p.beta)
        assert p.beta + tb <= a
    normals = [p.beta for p in pairs]
    if dedup:
        # distinct beta may cut out the same halfspace on the anti-symmetric
        # sublattice; compare primitive coefficient vectors
        seen, kept = set(), []
        for b in normals:
            row = primitive_row(basis.restrict_normal(b))
            if row not in seen:
                seen.add(row)
                kept.append(b)
        normals = kept
    return InequalitySystem(a, tuple(normals), coordinate_space=basis)


def counts(t, a, involutions=()):
    """(n1, n2, [n3 per involution]); trivial members are counted.

    n1 = #{beta <= alpha : beta generic subdim}; n2 restricts to nonvanishing
    pairing with alpha - beta; n3 = #I0 pairs for each given involution.
    """
    subs = t.generic_subdims(a)
    n1 = len(subs)
    n2 = len(_inductive_normals(t, a))
    n3s = [len(enumerate_I0(t, a, inv)) for inv in involutions]
    return n1, n2, n3s
