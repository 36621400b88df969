"""Generic ext/hom, generic subdimensions and discrepancy.

The engine is the recursion ext(a, b) = max_{a' generic subdim of a} -<a', b>,
with generic subdimensions of a determined by ext(a', a - a') = 0.  All
values for one quiver are memoized in an ExtTable; the per-dimension sets of
generic subdimensions are kept as integer matrices so that the inner maxima
are single matrix-vector products.
"""

import itertools

import numpy as np

from .errors import ValueOverflowError
from .quiver import DimVector, Weight, euler_form, weight_eval

# keeps every int64 product/sum inside the internal numpy path exact
_ENTRY_BOUND = 2**20


class ExtTable:
    """Memoized generic ext values for one fixed quiver.

    Entries are write-once: values depend only on the quiver, so recomputing
    a key always yields the same number.  All operations are pure; a
    single-threaded caller is the supported mode.
    """

    def __init__(self, quiver):
        self.quiver = quiver
        n = len(quiver.vertices)
        E = np.eye(n, dtype=np.int64)
        idx = quiver.vertex_index
        for _, t, h in quiver.arrows:
            E[idx(t), idx(h)] -= 1
        self._euler = E
        self._subs = {}  # tuple(a) -> (S, M) with S rows the generic subdims, M = S @ E
        self._ext = {}   # (tuple(a), tuple(b)) -> int
        self._derived = {}  # scratch cache for higher layers (inequality systems)

    # -- internal ----------------------------------------------------------

    def _as_tuple(self, a):
        if isinstance(a, DimVector):
            if a.quiver != self.quiver:
                raise ValueError("dimension vector bound to a different quiver")
            vals = a.values
        else:
            vals = tuple(int(v) for v in a)
        if any(v >= _ENTRY_BOUND for v in vals):
            raise ValueOverflowError("dimension entries too large for the exact int64 path")
        return vals

    def _sub_matrices(self, key):
        """(S, M) for the generic subdimensions of key, in lexicographic order."""
        cached = self._subs.get(key)
        if cached is not None:
            return cached
        n = len(key)
        grids = np.meshgrid(*(np.arange(k + 1) for k in key), indexing="ij")
        allb = np.stack(grids, axis=-1).reshape(-1, n).astype(np.int64)
        rest = np.asarray(key, dtype=np.int64) - allb
        # necessary condition <b, key-b> >= 0 prunes most candidates cheaply
        eb = allb @ self._euler
        survivors = np.nonzero(np.einsum("ij,ij->i", eb, rest) >= 0)[0]
        total = sum(key)
        rows = []
        for i in survivors:
            b = tuple(int(v) for v in allb[i])
            s = sum(b)
            if s == 0 or s == total:
                rows.append(b)
                continue
            _, mb = self._sub_matrices(b)  # strictly smaller mass: terminates
            if int((mb @ rest[i]).min()) >= 0:
                rows.append(b)
        S = np.array(rows, dtype=np.int64)
        result = (S, S @ self._euler)
        self._subs[key] = result
        return result

    # -- operations ---------------------------------------------------------

    def ext(self, a, b):
        """Generic ext value; max(0, max over generic subdims a' of a of -<a', b>)."""
        ka, kb = self._as_tuple(a), self._as_tuple(b)
        cached = self._ext.get((ka, kb))
        if cached is not None:
            return cached
        if sum(ka) == 0 or sum(kb) == 0:
            val = 0
        else:
            _, M = self._sub_matrices(ka)
            val = max(0, -int((M @ np.asarray(kb, dtype=np.int64)).min()))
        self._ext[(ka, kb)] = val
        return val

    def hom(self, a, b):
        """Generic hom value: <a, b> + ext(a, b); always >= 0."""
        da = a if isinstance(a, DimVector) else DimVector(self.quiver, a)
        db = b if isinstance(b, DimVector) else DimVector(self.quiver, b)
        return euler_form(self.quiver, da, db) + self.ext(a, b)

    def is_generic_subdim(self, b, a):
        """Whether every representation of dimension a has a subrepresentation of dimension b."""
        kb, ka = self._as_tuple(b), self._as_tuple(a)
        if any(x > y for x, y in zip(kb, ka)):
            return False
        if kb == ka or sum(kb) == 0:
            return True
        return self.ext(kb, tuple(y - x for x, y in zip(kb, ka))) == 0

    def generic_subdims(self, a):
        """All generic subdimensions of a, in mixed-radix lexicographic order."""
        S, _ = self._sub_matrices(self._as_tuple(a))
        return [DimVector(self.quiver, tuple(int(v) for v in row)) for row in S]

    def disc(self, a, s):
        """disc(a, s) = max of s(b) over generic subdims b of a; >= 0 since 0 is one."""
        if isinstance(s, Weight):
            if s.quiver != self.quiver:
                raise ValueError("weight bound to a different quiver")
            svals = s.values
        else:
            svals = tuple(int(v) for v in s)
        if any(abs(v) >= _ENTRY_BOUND for v in svals):
            raise ValueOverflowError("weight entries too large for the exact int64 path")
        S, _ = self._sub_matrices(self._as_tuple(a))
        return int((S @ np.asarray(svals, dtype=np.int64)).max())

    def disc_witness(self, a, s):
        """A generic subdimension attaining disc(a, s) (first in canonical order)."""
        subs = self.generic_subdims(a)
        best = max(subs, key=lambda b: weight_eval(s, b))
        return weight_eval(s, best), best

    def circ_nonzero(self, a, b):
        """Nonvanishing test for the pairing a o b: <a, b> = 0 and ext(a, b) = 0."""
        da = a if isinstance(a, DimVector) else DimVector(self.quiver, a)
        db = b if isinstance(b, DimVector) else DimVector(self.quiver, b)
        return euler_form(self.quiver, da, db) == 0 and self.ext(a, b) == 0

    def filtration_necessary(self, parts):
        """Necessary condition for a generic filtration dimension: sum_{i<j} <p_i, p_j> >= 0."""
        parts = list(parts)
        acc = 0
        for i, p in enumerate(parts):
            for q in parts[i + 1:]:
                acc += euler_form(self.quiver, p, q)
        return acc >= 0


def box(quiver, a):
    """Iterate all dimension vectors 0 <= b <= a in mixed-radix lexicographic order."""
    for vals in itertools.product(*(range(v + 1) for v in a.values)):
        yield DimVector(quiver, vals)
