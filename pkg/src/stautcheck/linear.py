"""Linear star-autonomous backends over exact rationals.

These are the degenerate models: par coincides with tensor value-wise, both
units are the one-dimensional space, and the two duals of a space are both
chosen to be its dual space on the same index set, so dual objects reuse the
domain's basis labels and the cancellation maps come out as literal identity
matrices.  The Kronecker flattening convention lives in
``core.matrices.kron``; every structural matrix below is derived from it.

Three concrete families:

* ``VecModel`` -- plain finite-dimensional spaces with the swap symmetry;
* ``GradedLineModel`` -- integer-graded lines with the scaled braiding
  c**(deg*deg), the minimal braided model whose braiding is not a symmetry
  and whose canonical twist-like composites pick up detectable scalars;
* module categories (see ``drinfeld``) subclass ``LinearModel`` and add
  action data.
"""

from dataclasses import dataclass
from fractions import Fraction

from .core import matrices as mx
from .core.model import StautModel
from .core.morphisms import Mor, MorError


@dataclass(frozen=True)
class Space:
    dim: int
    data: object = None


def _validate_entries(payload):
    for row in payload:
        for x in row:
            if not isinstance(x, (int, Fraction)):
                raise MorError(f"inexact matrix entry {x!r}; only int/Fraction allowed")


class LinearModel(StautModel):
    is_linear = True

    def __init__(self, gens, depth_limit=8):
        super().__init__(depth_limit)
        self._gen_spaces = dict(gens)
        self._gen_names = list(self._gen_spaces)

    def dim(self, ref):
        return self.value(ref).dim

    # ------------------------------------------------------------- evaluation

    def _gen_value(self, name):
        return self._gen_spaces[name]

    def _unit_t_value(self):
        return Space(1)

    def _unit_p_value(self):
        return Space(1)

    def _tens_value(self, va, vb):
        return Space(va.dim * vb.dim)

    def _par_value(self, va, vb):
        return self._tens_value(va, vb)

    def _rdual_value(self, va):
        return va

    def _ldual_value(self, va):
        return va

    # -------------------------------------------------------------- morphisms

    def mor(self, dom, cod, payload=None):
        if payload is None:
            raise MorError("linear morphisms need a matrix payload")
        r, c = mx.shape(payload)
        if (r, c) != (self.dim(cod), self.dim(dom)):
            raise MorError(
                f"matrix shape {(r, c)} does not fit {dom} -> {cod} "
                f"of dims {self.dim(dom)} -> {self.dim(cod)}")
        _validate_entries(payload)
        return Mor(dom, cod, payload, mx.is_identity(payload))

    def identity(self, p):
        return self._structural(("id", id(p)),
                                lambda: Mor(p, p, mx.identity(self.dim(p)), True))

    def _compose_payload(self, f, g):
        if f.payload_is_id:
            return Mor(f.dom, g.cod, g.payload, g.payload_is_id)
        if g.payload_is_id:
            return Mor(f.dom, g.cod, f.payload, f.payload_is_id)
        return self.mor(f.dom, g.cod, mx.matmul(g.payload, f.payload))

    def tens_mor(self, f, g):
        return self.mor(self.tens(f.dom, g.dom), self.tens(f.cod, g.cod),
                        mx.kron(f.payload, g.payload))

    def par_mor(self, f, g):
        return self.mor(self.par(f.dom, g.dom), self.par(f.cod, g.cod),
                        mx.kron(f.payload, g.payload))

    def invert(self, f):
        if f.payload_is_id:
            return Mor(f.cod, f.dom, f.payload, True)
        try:
            inv = mx.inverse(f.payload)
        except ValueError:
            raise MorError(f"morphism {f} is not invertible") from None
        return self.mor(f.cod, f.dom, inv)

    def hom_span(self, p, q):
        def build():
            dp, dq = self.dim(p), self.dim(q)
            units = []
            for i in range(dq):
                for j in range(dp):
                    m = [[0] * dp for _ in range(dq)]
                    m[i][j] = 1
                    units.append(self.mor(p, q, mx.mat(m)))
            return units
        return self._structural(("span", id(p), id(q)), build)

    def zero_mor(self, p, q):
        return self.mor(p, q, mx.zeros(self.dim(q), self.dim(p)))

    def mor_add(self, f, g):
        if f.dom is not g.dom or f.cod is not g.cod:
            raise MorError("cannot add morphisms of different shapes")
        return self.mor(f.dom, f.cod, mx.add(f.payload, g.payload))

    def mor_scale(self, c, f):
        return self.mor(f.dom, f.cod, mx.scale(c, f.payload))

    def random_mor(self, rng, p, q, lo=-3, hi=3):
        dp, dq = self.dim(p), self.dim(q)
        return self.mor(p, q, mx.mat([[rng.randint(lo, hi) for _ in range(dp)]
                                      for _ in range(dq)]))

    # ------------------------------------------------------- structural maps
    # With the fixed kron flattening, reassociation and unit absorptions are
    # literally identity matrices; only the duality units/counits have content.

    def _id_mor(self, a, b):
        if self.dim(a) != self.dim(b):
            raise MorError(f"structural identity between {a} and {b} of unequal dims")
        return Mor(a, b, mx.identity(self.dim(a)), True)

    def _build_assoc_t(self, p, q, r):
        return self._id_mor(self.tens(self.tens(p, q), r), self.tens(p, self.tens(q, r)))

    def _build_assoc_p(self, p, q, r):
        return self._id_mor(self.par(self.par(p, q), r), self.par(p, self.par(q, r)))

    def _build_lunit_t(self, p):
        return self._id_mor(self.tens(self.e, p), p)

    def _build_runit_t(self, p):
        return self._id_mor(self.tens(p, self.e), p)

    def _build_lunit_p(self, p):
        return self._id_mor(self.par(self.d, p), p)

    def _build_runit_p(self, p):
        return self._id_mor(self.par(p, self.d), p)

    def _build_dist_l(self, q, s, t):
        return self._id_mor(self.tens(q, self.par(s, t)), self.par(self.tens(q, s), t))

    def _build_dist_r(self, p, q, s):
        return self._id_mor(self.tens(self.par(p, q), s), self.par(p, self.tens(q, s)))

    def _coev_matrix(self, n):
        col = [[0] for _ in range(n * n)]
        for i in range(n):
            col[i * n + i][0] = 1
        return mx.mat(col)

    def _ev_matrix(self, n):
        row = [[0] * (n * n)]
        for i in range(n):
            row[0][i * n + i] = 1
        return mx.mat(row)

    def _build_dual_unit_r(self, p):
        return self.mor(self.e, self.par(self.rdual(p), p), self._coev_matrix(self.dim(p)))

    def _build_dual_counit_r(self, p):
        return self.mor(self.tens(p, self.rdual(p)), self.d, self._ev_matrix(self.dim(p)))

    def _build_dual_unit_l(self, p):
        return self.mor(self.e, self.par(p, self.ldual(p)), self._coev_matrix(self.dim(p)))

    def _build_dual_counit_l(self, p):
        return self.mor(self.tens(self.ldual(p), p), self.d, self._ev_matrix(self.dim(p)))


class VecModel(LinearModel):
    """Plain rational vector spaces with the swap symmetry."""

    is_braided = True

    def __init__(self, dims=None, depth_limit=8):
        dims = dims or {"p": 2}
        for name, n in dims.items():
            if not 1 <= n <= 3:
                raise MorError(f"generator {name!r} dim {n} out of range 1..3")
        super().__init__({name: Space(n) for name, n in dims.items()}, depth_limit)
        first = self.gen(self._gen_names[0])
        self.probes = [self.e, self.d, first, self.rdual(first), self.ldual(first),
                       self.tens(first, first)]

    def describe(self):
        dims = {n: s.dim for n, s in self._gen_spaces.items()}
        return f"vec({dims})"

    def braid(self, p, q):
        return self._structural(("br", id(p), id(q)), lambda: self.mor(
            self.tens(p, q), self.tens(q, p), mx.swap_matrix(self.dim(p), self.dim(q))))


def build_vec_model(max_dim=2, depth_limit=8):
    """The symmetric linear model on one generator of the given dimension."""
    if not 1 <= max_dim <= 3:
        raise MorError(f"max_dim must be 1..3, got {max_dim}")
    return VecModel({"p": max_dim}, depth_limit)


class GradedLineModel(LinearModel):
    """Integer-graded one-dimensional spaces with braiding c**(deg*deg).

    Morphisms between objects of different degree are zero only; the hom
    spanning sets are graded accordingly, which is what makes the scaled
    braiding natural.  Exists to exercise the negative branches of the
    twist/quasi-twist checks: its stitch composite is c**(-2 deg^2) != 1.
    """

    is_braided = True

    def __init__(self, c=Fraction(2), depth_limit=8):
        super().__init__({"x": Space(1, 1)}, depth_limit)
        self.c = Fraction(c)
        if self.c == 0:
            raise MorError("braiding scale must be nonzero")
        x = self.gen("x")
        self.probes = [self.e, self.d, x, self.rdual(x), self.tens(x, x)]

    def describe(self):
        return f"gradedline(c={self.c})"

    def degree(self, ref):
        return self.value(ref).data

    def _unit_t_value(self):
        return Space(1, 0)

    def _unit_p_value(self):
        return Space(1, 0)

    def _tens_value(self, va, vb):
        return Space(1, va.data + vb.data)

    def _rdual_value(self, va):
        return Space(1, -va.data)

    def _ldual_value(self, va):
        return Space(1, -va.data)

    def mor(self, dom, cod, payload=None):
        m = super().mor(dom, cod, payload)
        if not mx.is_zero(payload) and self.degree(dom) != self.degree(cod):
            raise MorError(f"nonzero map between degrees {self.degree(dom)} "
                           f"and {self.degree(cod)}")
        return m

    def hom_span(self, p, q):
        if self.degree(p) != self.degree(q):
            return []
        return super().hom_span(p, q)

    def braid(self, p, q):
        expo = self.degree(p) * self.degree(q)
        val = self.c ** expo
        return self.mor(self.tens(p, q), self.tens(q, p), ((val,),))


def scalar_cycle(model, lam):
    """The cycle candidate lam * identity on a linear model with equal duals."""
    from .cyclicity import CycleData
    lam = Fraction(lam)
    if lam == 0:
        raise MorError("scalar cycle needs a nonzero scalar")

    def comp(p):
        n = model.dim(p)
        payload = mx.scale(lam, mx.identity(n))
        return model.mor(model.rdual(p), model.ldual(p), payload)

    return CycleData(model, comp, label=f"scalar({lam})")


def identity_cycle(model):
    """The identity family rdual(p) -> ldual(p); needs equal duals."""
    from .cyclicity import CycleData

    def comp(p):
        return model.mor(model.rdual(p), model.ldual(p),
                         mx.identity(model.dim(p)))

    return CycleData(model, comp, label="identity")
