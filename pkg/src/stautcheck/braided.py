"""Braidings, twists, and their correspondence with cyclicity data.

A braiding on the tensor induces one on the par through the duals and the de
Morgan isomorphisms; the two cohere through four mixed-distribution diagrams
checked here, and agree outright in degenerate models (par = tensor, equal
units).  The bridge to the axiom engine: a twist theta yields the hom-level
family omega |-> braid; (theta (x) id); omega, and a cycle family yields a
twist through the evaluation loop below; the two constructions are exact
mutual inverses, which ``roundtrip_check`` verifies.

Sign conventions (which crossing is an inverse braiding) were fixed once by
requiring consistency of all composites on the graded-line model, where every
crossing contributes a detectable scalar; the checks then re-verify them on
every braided backend.
"""

import random

from .core.morphisms import MorError
from .report import CheckResult
from . import cyclicity
from .cyclicity import BigCycle


def _pairs(model, dim_cap=8):
    ps = model.probe_objects()
    return [(p, q) for p in ps for q in ps
            if not model.is_linear or model.dim(p) * model.dim(q) <= dim_cap]


def _triples(model, dim_cap=8, cap=40, seed=0):
    ps = model.probe_objects()
    pool = [(p, q, r) for p in ps for q in ps for r in ps
            if not model.is_linear
            or model.dim(p) * model.dim(q) * model.dim(r) <= dim_cap]
    if len(pool) <= cap:
        return pool, True
    rng = random.Random(seed)
    return rng.sample(pool, cap), False


class Braiding:
    """The tensor braiding of a model plus its derived par braiding."""

    def __init__(self, model):
        if not model.is_braided:
            raise MorError("model has no braiding")
        self.model = model
        self._par_memo = {}

    def tens(self, p, q):
        return self.model.braid(p, q)

    def par(self, p, q):
        """p par q -> q par p, transported through the right duals."""
        key = (id(p), id(q))
        hit = self._par_memo.get(key)
        if hit is None:
            m = self.model
            hit = m.chain(
                m.invert(self._par_encoding(p, q)),
                m.rdual_mor(m.braid(m.ldual(p), m.ldual(q))),
                self._par_encoding(q, p))
            self._par_memo[key] = hit
        return hit

    def _par_encoding(self, a, b):
        """rdual(ldual(b) (x) ldual(a)) -> a par b, the canonical comparison."""
        m = self.model
        return m.chain(
            m.demorgan("tens_r", m.ldual(b), m.ldual(a)),
            m.par_mor(m.invert(m.canon_r(a)), m.invert(m.canon_r(b))))

    # ------------------------------------------------------------ validation

    def check_hexagons(self, seed=0):
        m = self.model
        triples, exh = _triples(m, seed=seed)
        for (p, q, r) in triples:
            lhs = self.tens(p, m.tens(q, r))
            rhs = m.chain(m.invert(m.assoc_t(p, q, r)),
                          m.tens_mor(self.tens(p, q), m.identity(r)),
                          m.assoc_t(q, p, r),
                          m.tens_mor(m.identity(q), self.tens(p, r)),
                          m.invert(m.assoc_t(q, r, p)))
            if lhs != rhs:
                return CheckResult("hexagon-one", False, f"at ({p},{q},{r})",
                                   len(triples), exh)
            lhs = self.tens(m.tens(p, q), r)
            rhs = m.chain(m.assoc_t(p, q, r),
                          m.tens_mor(m.identity(p), self.tens(q, r)),
                          m.invert(m.assoc_t(p, r, q)),
                          m.tens_mor(self.tens(p, r), m.identity(q)),
                          m.assoc_t(r, p, q))
            if lhs != rhs:
                return CheckResult("hexagon-two", False, f"at ({p},{q},{r})",
                                   len(triples), exh)
        return CheckResult("hexagons", True, "", len(triples), exh)

    def check_mixed_distributions(self, seed=0):
        """The four coherence diagrams tying the two braidings to the linear
        distributions."""
        m = self.model
        triples, exh = _triples(m, seed=seed)
        for (p, q, r) in triples:
            d1_l = m.chain(
                m.tens_mor(m.invert(self.par(q, p)), m.identity(r)),
                m.dist_r(q, p, r),
                self.par(q, m.tens(p, r)))
            d1_r = m.chain(
                self.tens(m.par(p, q), r),
                m.dist_l(r, p, q),
                m.par_mor(m.invert(self.tens(p, r)), m.identity(q)))
            if d1_l != d1_r:
                return CheckResult("mixed-dist-1", False, f"at ({p},{q},{r})",
                                   len(triples), exh)
            d2_l = m.chain(
                self.tens(r, m.par(q, p)),
                m.dist_r(q, p, r),
                m.par_mor(m.identity(q), m.invert(self.tens(r, p))))
            d2_r = m.chain(
                m.tens_mor(m.identity(r), m.invert(self.par(p, q))),
                m.dist_l(r, p, q),
                self.par(m.tens(r, p), q))
            if d2_l != d2_r:
                return CheckResult("mixed-dist-2", False, f"at ({p},{q},{r})",
                                   len(triples), exh)
            d3_l = m.chain(
                m.tens_mor(self.par(p, q), m.identity(r)),
                m.dist_r(q, p, r),
                m.invert(self.par(m.tens(p, r), q)))
            d3_r = m.chain(
                m.invert(self.tens(r, m.par(p, q))),
                m.dist_l(r, p, q),
                m.par_mor(self.tens(r, p), m.identity(q)))
            if d3_l != d3_r:
                return CheckResult("mixed-dist-3", False, f"at ({p},{q},{r})",
                                   len(triples), exh)
            d4_l = m.chain(
                m.invert(self.tens(m.par(q, p), r)),
                m.dist_r(q, p, r),
                m.par_mor(m.identity(q), self.tens(p, r)))
            d4_r = m.chain(
                m.tens_mor(m.identity(r), self.par(q, p)),
                m.dist_l(r, p, q),
                m.invert(self.par(q, m.tens(r, p))))
            if d4_l != d4_r:
                return CheckResult("mixed-dist-4", False, f"at ({p},{q},{r})",
                                   len(triples), exh)
        return CheckResult("mixed-distributions", True, "", len(triples), exh)

    def check_degenerate_agreement(self):
        """In a degenerate model the derived par braiding must coincide with
        the tensor braiding entrywise."""
        m = self.model
        bad = ""
        pairs = _pairs(m)
        for (p, q) in pairs:
            if self.par(p, q).payload != self.tens(p, q).payload:
                bad = f"at ({p},{q})"
                break
        return CheckResult("degenerate-braid-agreement", not bad, bad, len(pairs))

    def is_symmetry(self):
        m = self.model
        for (p, q) in _pairs(m):
            if m.compose(self.tens(p, q), self.tens(q, p)) != m.identity(m.tens(p, q)):
                return False, (p, q)
        return True, None


class Balance:
    """A candidate twist: one automorphism per object, memoized."""

    def __init__(self, model, component_fn, label="twist"):
        self.model = model
        self.label = label
        self._fn = component_fn
        self._memo = {}

    def component(self, p):
        hit = self._memo.get(id(p))
        if hit is None:
            hit = self._fn(p)
            if hit.dom is not p or hit.cod is not p:
                raise MorError(f"twist component at {p} has shape {hit}")
            self._memo[id(p)] = hit
        return hit

    def validate(self, probes=None):
        m = self.model
        probes = probes if probes is not None else m.probe_objects()
        bad = ""
        for p in probes:
            try:
                m.invert(self.component(p))
            except MorError as exc:
                bad = f"{p}: {exc}"
                break
        out = [CheckResult("twist-invertible", not bad, bad, len(probes))]
        bad = ""
        n = 0
        for p in probes:
            for q in probes:
                for f in m.hom_span(p, q):
                    n += 1
                    if m.compose(f, self.component(q)) != m.compose(self.component(p), f):
                        bad = f"naturality fails at {f}"
                        break
        out.append(CheckResult("twist-natural", not bad, bad, n))
        return out


def identity_balance(model):
    return Balance(model, model.identity, "identity")


def scaled_balance(model, lam):
    """lam * identity on every object; a balance only when lam is 1."""
    return Balance(model, lambda p: model.mor_scale(lam, model.identity(p)),
                   f"scaled({lam})")


def graded_square_balance(model):
    """c**(deg^2) per object on the graded-line model: its unique scalar-form
    balance, used to exercise the correspondence off the symmetric case."""
    def comp(p):
        return model.mor_scale(model.c ** (model.degree(p) ** 2),
                               model.identity(p))
    return Balance(model, comp, "graded-square")


def ribbon_balance(model):
    """The canonical twist of the double-of-Z2 model."""
    return Balance(model, lambda p: model.mor(p, p, model.twist_matrix(p)),
                   "ribbon")


# ----------------------------------------------------------- constructions

def balance_from_cycle(cycle):
    """Evaluation-loop composite turning cyclicity data into a twist:
    tensor-semicycles give tensor-semibalances and dually."""
    m = cycle.model

    def comp(p):
        rp, lp = m.rdual(p), m.ldual(p)
        left_leg = m.chain(
            m.tens_mor(m.identity(p), cycle.component(p)),
            m.invert(m.braid(lp, p)),
            m.dual_counit_l(p))
        return m.chain(
            m.invert(m.runit_t(p)),
            m.tens_mor(m.identity(p), m.dual_unit_r(p)),
            m.dist_l(p, rp, p),
            m.par_mor(left_leg, m.identity(p)),
            m.lunit_p(p))

    return Balance(m, comp, f"from({cycle.label})")


def cycle_from_balance(balance):
    """Hom-level family omega |-> braid ; (twist (x) id) ; omega.

    The composition order of the display is fixed by dom/cod typing: the
    braiding component is the one from t (x) p, and the twist acts on the
    first factor after crossing.
    """
    m = balance.model

    def ap(p, t, omega):
        return m.chain(m.braid(t, p),
                       m.tens_mor(balance.component(p), m.identity(t)),
                       omega)

    def unap(p, t, psi):
        return m.chain(m.invert(m.tens_mor(balance.component(p), m.identity(t))),
                       m.invert(m.braid(t, p)),
                       psi)

    return BigCycle(m, ap, unap, f"from({balance.label})")


def check_semibalance(balance, which, seed=0):
    """(tensor|par) semibalance square on probe pairs; on success also pins
    the unit component to the identity."""
    m = balance.model
    braiding = Braiding(m)
    pairs = _pairs(m)
    for (p, q) in pairs:
        if which == "tens":
            lhs = balance.component(m.tens(p, q))
            rhs = m.chain(braiding.tens(p, q),
                          m.tens_mor(balance.component(q), balance.component(p)),
                          braiding.tens(q, p))
        else:
            lhs = balance.component(m.par(p, q))
            rhs = m.chain(braiding.par(p, q),
                          m.par_mor(balance.component(q), balance.component(p)),
                          braiding.par(q, p))
        if lhs != rhs:
            return CheckResult(f"semibalance-{which}", False, f"at ({p},{q})",
                               len(pairs))
    unit = m.e if which == "tens" else m.d
    if balance.component(unit) != m.identity(unit):
        return CheckResult(f"semibalance-{which}", False,
                           "unit component is not the identity", len(pairs))
    return CheckResult(f"semibalance-{which}", True, "", len(pairs))


def stitch(model, p):
    """The canonical double-crossing automorphism of p: an evaluation loop
    whose two crossings are same-handed, so it measures the failure of the
    braiding to be a symmetry.  Identity in any symmetric model."""
    m = model
    rp = m.rdual(p)
    crossings = m.chain(
        m.invert(m.braid(rp, p)),
        m.invert(m.braid(p, rp)),
        m.dual_counit_r(p))
    return m.chain(
        m.invert(m.runit_t(p)),
        m.tens_mor(m.identity(p), m.dual_unit_r(p)),
        m.dist_l(p, rp, p),
        m.par_mor(crossings, m.identity(p)),
        m.lunit_p(p))


def check_stitch_natural(model, seed=0):
    m = model
    bad = ""
    n = 0
    for p in m.probe_objects():
        for q in m.probe_objects():
            for f in m.hom_span(p, q):
                n += 1
                if m.compose(f, stitch(m, q)) != m.compose(stitch(m, p), f):
                    bad = f"at {f}"
                    break
    return CheckResult("stitch-natural", not bad, bad, n)


def check_quasibalance(balance, probes=None):
    """twist ; cancel ; ldual(twist at the dual) ; cancel-back must equal the
    stitch on every probe object."""
    m = balance.model
    probes = probes if probes is not None else m.probe_objects()
    for p in probes:
        lhs = m.chain(balance.component(p),
                      m.canon_l(p),
                      m.ldual_mor(balance.component(m.rdual(p))),
                      m.invert(m.canon_l(p)))
        if lhs != stitch(m, p):
            return CheckResult("quasibalance", False, f"at {p}", len(probes))
    return CheckResult("quasibalance", True, "", len(probes))


def check_balance_double(balance, probes=None):
    """Per object: the twist commutes with the right dual exactly when the
    stitch is the twist squared."""
    m = balance.model
    probes = probes if probes is not None else m.probe_objects()
    for p in probes:
        left = balance.component(m.rdual(p)) == m.rdual_mor(balance.component(p))
        right = stitch(m, p) == m.compose(balance.component(p), balance.component(p))
        if left != right:
            return CheckResult("balance-double", False, f"at {p}", len(probes))
    return CheckResult("balance-double", True, "", len(probes))


def roundtrip_check(balance, config=None):
    """balance -> hom family -> object family -> balance must be the
    identity round trip, and the same starting from the cycle."""
    m = balance.model
    big = cycle_from_balance(balance)
    low = cyclicity.to_lower(big)
    back = balance_from_cycle(low)
    for p in m.probe_objects():
        if back.component(p) != balance.component(p):
            return CheckResult("roundtrip-balance", False, f"at {p}",
                               len(m.probe_objects()))
    big2 = cycle_from_balance(back)
    low2 = cyclicity.to_lower(big2)
    for p in m.probe_objects():
        if low2.component(p) != low.component(p):
            return CheckResult("roundtrip-cycle", False, f"at {p}",
                               len(m.probe_objects()))
    return CheckResult("roundtrip", True, "", 2 * len(m.probe_objects()))


def check_identity_cycle_symmetry(model, config=None):
    """The hom family induced by the identity twist is a full cycle exactly
    when the braiding is a symmetry."""
    big = cycle_from_balance(identity_balance(model))
    low = cyclicity.to_lower(big)
    profile = cyclicity.classify(low, config, big=big)
    sym, wit = Braiding(model).is_symmetry()
    ok = profile.cycle == sym
    return CheckResult("identity-cycle-vs-symmetry", ok,
                       f"cycle={profile.cycle}, symmetry={sym}"
                       + (f" (witness {wit})" if wit else ""), 1), profile
