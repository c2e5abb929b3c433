"""Thin (posetal) star-autonomous models backed by a quantale.

A morphism p -> q is the unique order witness, existing iff the element of p
is below the element of q; construction of any structural map therefore IS the
check that the corresponding inequality holds in the quantale.  Equality of
parallel morphisms is automatic, which is exactly why thin models satisfy
every coherence diagram they can state.
"""

from .core.model import StautModel
from .core.morphisms import Mor, MorError
from .quantale import Quantale


class ThinModel(StautModel):
    def __init__(self, quantale: Quantale, probe_cap=10, depth_limit=8):
        super().__init__(depth_limit)
        self.q = quantale
        self._gen_names = [quantale.name(x) for x in quantale.elements]
        self._by_name = dict(zip(self._gen_names, quantale.elements))
        self.probes = self._default_probes(probe_cap)

    def _default_probes(self, cap):
        q = self.q
        picked = [q.unit, q.dualizer]
        for x in q.elements:
            if len(picked) >= cap:
                break
            if x not in picked:
                picked.append(x)
        return [self.e, self.d] + [self.gen(q.name(x)) for x in picked]

    def describe(self):
        return f"thin({self.q.label})"

    # ------------------------------------------------------------- evaluation

    def _gen_value(self, name):
        return self._by_name[name]

    def _unit_t_value(self):
        return self.q.unit

    def _unit_p_value(self):
        return self.q.dualizer

    def _tens_value(self, va, vb):
        return self.q.tensor(va, vb)

    def _par_value(self, va, vb):
        return self.q.par(va, vb)

    def _rdual_value(self, va):
        return self.q.perp(va)

    def _ldual_value(self, va):
        return self.q.prep(va)

    # -------------------------------------------------------------- morphisms

    def mor(self, dom, cod, payload=None):
        if payload is not None:
            raise MorError("thin morphisms carry no payload")
        if not self.q.le(self.value(dom), self.value(cod)):
            raise MorError(
                f"no witness {dom} -> {cod}: {self.q.name(self.value(dom))} is not "
                f"below {self.q.name(self.value(cod))} in {self.q.label}")
        return Mor(dom, cod, None, True)

    def identity(self, p):
        return Mor(p, p, None, True)

    def _compose_payload(self, f, g):
        return Mor(f.dom, g.cod, None, True)

    def tens_mor(self, f, g):
        return self.mor(self.tens(f.dom, g.dom), self.tens(f.cod, g.cod))

    def par_mor(self, f, g):
        return self.mor(self.par(f.dom, g.dom), self.par(f.cod, g.cod))

    def invert(self, f):
        return self.mor(f.cod, f.dom)

    def hom_span(self, p, q):
        if self.q.le(self.value(p), self.value(q)):
            return [self.mor(p, q)]
        return []

    # ------------------------------------------------------- structural maps

    def _iso(self, a, b):
        m = self.mor(a, b)
        self.mor(b, a)
        return m

    def _build_assoc_t(self, p, q, r):
        return self._iso(self.tens(self.tens(p, q), r), self.tens(p, self.tens(q, r)))

    def _build_assoc_p(self, p, q, r):
        return self._iso(self.par(self.par(p, q), r), self.par(p, self.par(q, r)))

    def _build_lunit_t(self, p):
        return self._iso(self.tens(self.e, p), p)

    def _build_runit_t(self, p):
        return self._iso(self.tens(p, self.e), p)

    def _build_lunit_p(self, p):
        return self._iso(self.par(self.d, p), p)

    def _build_runit_p(self, p):
        return self._iso(self.par(p, self.d), p)

    def _build_dist_l(self, q, s, t):
        return self.mor(self.tens(q, self.par(s, t)), self.par(self.tens(q, s), t))

    def _build_dist_r(self, p, q, s):
        return self.mor(self.tens(self.par(p, q), s), self.par(p, self.tens(q, s)))

    def _build_dual_unit_r(self, p):
        return self.mor(self.e, self.par(self.rdual(p), p))

    def _build_dual_counit_r(self, p):
        return self.mor(self.tens(p, self.rdual(p)), self.d)

    def _build_dual_unit_l(self, p):
        return self.mor(self.e, self.par(p, self.ldual(p)))

    def _build_dual_counit_l(self, p):
        return self.mor(self.tens(self.ldual(p), p), self.d)


def thin_identity_cycle(model):
    """The witness family rdual(p) -> ldual(p); exists iff the quantale is
    cyclic, and is then the unique cycle candidate of the thin model."""
    from .cyclicity import CycleData

    def comp(p):
        return model.mor(model.rdual(p), model.ldual(p))

    return CycleData(model, comp, label=f"identity({model.q.label})")
