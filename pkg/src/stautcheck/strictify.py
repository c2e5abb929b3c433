"""Strictification: integer-indexed strings of linear adjoints.

A string assigns to every integer an object together with adjunction data
tying index n to index n+1 (unit into the par, counit out of the tensor);
mates of base morphisms propagate along the indices in alternating
directions.  All strings here carry finite descriptors -- canonical dual
towers, period-two strings driven by a hom-level cycle, and the closures of
these under tensor, par, shifts and units -- so windowed checks certify the
whole family.

The payoff verified by this module: in the string category all de Morgan and
cancellation maps are componentwise identities (shift arithmetic), the string
category is equivalent to the base via take-component-zero and the canonical
tower, and for a full cycle the period-two strings compatible with it form a
closed subcategory on which the extended cycle is the identity.
"""

from .core.model import Adjunction
from .core.morphisms import MorError, ShapeError
from .core.objects import UniverseError
from .report import CheckResult
from .cyclicity import to_upper, lbind, rbind


class ZString:
    """Base: finite-descriptor family of objects with adjunction data."""

    def __init__(self, model):
        self.model = model
        self._z = {}
        self._gamma = {}
        self._tau = {}

    def z(self, n):
        hit = self._z.get(n)
        if hit is None:
            try:
                hit = self._z_at(n)
            except UniverseError as exc:
                raise UniverseError(
                    f"string component {n} of {self.describe()} needs a deeper "
                    f"universe: {exc}") from None
            self._z[n] = hit
        return hit

    def gamma(self, n):
        """Counit z(n) (x) z(n+1) -> d."""
        hit = self._gamma.get(n)
        if hit is None:
            hit = self._gamma_at(n)
            self._gamma[n] = hit
        return hit

    def tau(self, n):
        """Unit e -> z(n+1) par z(n); derived from gamma unless overridden."""
        hit = self._tau.get(n)
        if hit is None:
            hit = self._tau_at(n)
            self._tau[n] = hit
        return hit

    def _tau_at(self, n):
        m = self.model
        h = m.lcurry(self.gamma(n))
        return m.chain(m.dual_unit_r(self.z(n)),
                       m.par_mor(m.invert(h), m.identity(self.z(n))))

    def adjunction(self, n):
        return Adjunction(self.z(n), self.z(n + 1), self.tau(n), self.gamma(n))

    def describe(self):
        return type(self).__name__


class CanonicalZString(ZString):
    """Iterated chosen duals of a base object, with the chosen adjunctions."""

    def __init__(self, model, base):
        super().__init__(model)
        self.base = base

    def _z_at(self, n):
        if n == 0:
            return self.base
        if n > 0:
            return self.model.rdual(self.z(n - 1))
        return self.model.ldual(self.z(n + 1))

    def _gamma_at(self, n):
        if n >= 0:
            return self.model.dual_counit_r(self.z(n))
        return self.model.dual_counit_l(self.z(n + 1))

    def _tau_at(self, n):
        if n >= 0:
            return self.model.dual_unit_r(self.z(n))
        return self.model.dual_unit_l(self.z(n + 1))

    def describe(self):
        return f"canon({self.base})"


class Period2ZString(ZString):
    """Two alternating objects; the counit at every level is generated from
    level zero by the hom-level cycle, exactly as the compatibility condition
    demands."""

    def __init__(self, model, z0, z1, gamma0, big):
        super().__init__(model)
        if gamma0.dom is not model.tens(z0, z1) or gamma0.cod is not model.d:
            raise ShapeError(f"period-2 seed counit has shape {gamma0}")
        self.z0, self.z1 = z0, z1
        self._gamma[0] = gamma0
        self.big = big

    def _z_at(self, n):
        return self.z0 if n % 2 == 0 else self.z1

    def _gamma_at(self, n):
        if n > 0:
            prev = self.gamma(n - 1)
            return self.big.apply(self.z(n - 1), self.z(n), prev)
        nxt = self.gamma(n + 1)
        return self.big.unapply(self.z(n), self.z(n + 1), nxt)

    def describe(self):
        return f"period2({self.z0},{self.z1})"


class ShiftZString(ZString):
    """Index shift; +1 is the right dual of the string, -1 the left dual."""

    def __init__(self, inner, k):
        super().__init__(inner.model)
        self.inner = inner
        self.k = k

    def _z_at(self, n):
        return self.inner.z(n + self.k)

    def _gamma_at(self, n):
        return self.inner.gamma(n + self.k)

    def _tau_at(self, n):
        return self.inner.tau(n + self.k)

    def describe(self):
        return f"shift({self.k:+d},{self.inner.describe()})"


class TensZString(ZString):
    def __init__(self, left, right):
        if left.model is not right.model:
            raise MorError("string tensor across different models")
        super().__init__(left.model)
        self.left, self.right = left, right

    def _z_at(self, n):
        m = self.model
        if n % 2 == 0:
            return m.tens(self.left.z(n), self.right.z(n))
        return m.par(self.right.z(n), self.left.z(n))

    def _gamma_at(self, n):
        m = self.model
        if n % 2 == 0:
            return rbind(m, self.left.gamma(n), self.right.gamma(n))
        return lbind(m, self.right.gamma(n), self.left.gamma(n))

    def describe(self):
        return f"tens({self.left.describe()},{self.right.describe()})"


class ParZString(ZString):
    def __init__(self, left, right):
        if left.model is not right.model:
            raise MorError("string par across different models")
        super().__init__(left.model)
        self.left, self.right = left, right

    def _z_at(self, n):
        m = self.model
        if n % 2 == 0:
            return m.par(self.left.z(n), self.right.z(n))
        return m.tens(self.right.z(n), self.left.z(n))

    def _gamma_at(self, n):
        m = self.model
        if n % 2 == 0:
            return lbind(m, self.left.gamma(n), self.right.gamma(n))
        return rbind(m, self.right.gamma(n), self.left.gamma(n))

    def describe(self):
        return f"par({self.left.describe()},{self.right.describe()})"


class UnitZString(ZString):
    """The tensor-unit string (alternating e, d) or the par-unit string
    (alternating d, e)."""

    def __init__(self, model, which):
        super().__init__(model)
        assert which in ("e", "d")
        self.which = which

    def _z_at(self, n):
        m = self.model
        even = self.which == "e"
        return (m.e if even else m.d) if n % 2 == 0 else (m.d if even else m.e)

    def _gamma_at(self, n):
        m = self.model
        if self.z(n) is m.e:
            return m.lunit_t(m.d)
        return m.runit_t(m.d)

    def _tau_at(self, n):
        m = self.model
        if self.z(n) is m.e:
            return m.invert(m.lunit_p(m.e))
        return m.invert(m.runit_p(m.e))

    def describe(self):
        return f"unit({self.which})"


def zangify(model, p):
    return CanonicalZString(model, p)


def project0(string):
    return string.z(0)


def zang_ops(left, right, which):
    """Componentwise structure of the string category: tensor, par, the two
    duals (index shifts) and the two units."""
    if which == "tens":
        return TensZString(left, right)
    if which == "par":
        return ParZString(left, right)
    if which == "rdual":
        return ShiftZString(left, +1)
    if which == "ldual":
        return ShiftZString(left, -1)
    if which == "e":
        return UnitZString(left.model, "e")
    if which == "d":
        return UnitZString(left.model, "d")
    raise ValueError(f"unknown string operation {which!r}")


class ZMate:
    """A family of mates over two strings, generated from the component at
    index zero; even components point source-to-target, odd ones backwards."""

    def __init__(self, src, dst, base):
        if src.model is not dst.model:
            raise MorError("mate string across different models")
        if base.dom is not src.z(0) or base.cod is not dst.z(0):
            raise ShapeError(f"mate seed has shape {base}, expected "
                             f"{src.z(0)} -> {dst.z(0)}")
        self.model = src.model
        self.src, self.dst = src, dst
        self._m = {0: base}

    def m(self, n):
        hit = self._m.get(n)
        if hit is None:
            hit = self._lift(n)
            self._m[n] = hit
        return hit

    def _lift(self, n):
        m = self.model
        if n > 0:
            prev = self.m(n - 1)
            if (n - 1) % 2 == 0:
                ev = m.chain(m.tens_mor(prev, m.identity(self.dst.z(n))),
                             self.dst.gamma(n - 1))
                return m.curry_left(self.src.adjunction(n - 1), ev)
            ev = m.chain(m.tens_mor(prev, m.identity(self.src.z(n))),
                         self.src.gamma(n - 1))
            return m.curry_left(self.dst.adjunction(n - 1), ev)
        nxt = self.m(n + 1)
        if n % 2 == 0:
            ev = m.chain(m.tens_mor(m.identity(self.src.z(n)), nxt),
                         self.src.gamma(n))
            return m.curry_right(self.dst.adjunction(n), ev)
        ev = m.chain(m.tens_mor(m.identity(self.dst.z(n)), nxt),
                     self.dst.gamma(n))
        return m.curry_right(self.src.adjunction(n), ev)

    def check_mateship(self, window):
        """The defining compatibility through the counits on every adjacent
        pair of the window."""
        m = self.model
        lo, hi = window
        for n in range(lo, hi):
            if n % 2 == 0:
                lhs = m.chain(m.tens_mor(self.m(n), m.identity(self.dst.z(n + 1))),
                              self.dst.gamma(n))
                rhs = m.chain(m.tens_mor(m.identity(self.src.z(n)), self.m(n + 1)),
                              self.src.gamma(n))
            else:
                lhs = m.chain(m.tens_mor(self.m(n), m.identity(self.src.z(n + 1))),
                              self.src.gamma(n))
                rhs = m.chain(m.tens_mor(m.identity(self.dst.z(n)), self.m(n + 1)),
                              self.dst.gamma(n))
            if lhs != rhs:
                return CheckResult("mateship", False, f"between {n} and {n + 1}",
                                   hi - lo)
        return CheckResult("mateship", True, "", hi - lo)


def zangify_mor(model, f):
    return ZMate(zangify(model, f.dom), zangify(model, f.cod), f)


# ------------------------------------------------------------- windowed checks

def check_triangles(string, window):
    """Both triangle identities for every adjacent pair in the window."""
    m = string.model
    lo, hi = window
    for n in range(lo, hi):
        zn, zn1 = string.z(n), string.z(n + 1)
        t1 = m.chain(m.invert(m.runit_t(zn)),
                     m.tens_mor(m.identity(zn), string.tau(n)),
                     m.dist_l(zn, zn1, zn),
                     m.par_mor(string.gamma(n), m.identity(zn)),
                     m.lunit_p(zn))
        if t1 != m.identity(zn):
            return CheckResult("string-triangles", False,
                               f"{string.describe()} object side at {n}", hi - lo)
        t2 = m.chain(m.invert(m.lunit_t(zn1)),
                     m.tens_mor(string.tau(n), m.identity(zn1)),
                     m.dist_r(zn1, zn, zn1),
                     m.par_mor(m.identity(zn1), string.gamma(n)),
                     m.runit_p(zn1))
        if t2 != m.identity(zn1):
            return CheckResult("string-triangles", False,
                               f"{string.describe()} dual side at {n}", hi - lo)
    return CheckResult("string-triangles", True, "", hi - lo)


def strings_equal_on(a, b, window):
    """Componentwise equality of objects and adjunction data."""
    lo, hi = window
    for n in range(lo, hi + 1):
        if a.z(n) is not b.z(n):
            return f"objects differ at {n}: {a.z(n)} vs {b.z(n)}"
    for n in range(lo, hi):
        if a.gamma(n) != b.gamma(n):
            return f"counits differ at {n}"
        if a.tau(n) != b.tau(n):
            return f"units differ at {n}"
    return None


def check_strict_negations(model, window, strings=None):
    """All de Morgan and cancellation comparisons between string descriptors
    are literal componentwise identities on the window."""
    strings = strings or [zangify(model, p) for p in model.probe_objects()[:4]]
    results = []
    for i, P in enumerate(strings):
        for j, Q in enumerate(strings):
            cases = [
                ("rdual-of-tens", ShiftZString(TensZString(P, Q), 1),
                 ParZString(ShiftZString(Q, 1), ShiftZString(P, 1))),
                ("ldual-of-tens", ShiftZString(TensZString(P, Q), -1),
                 ParZString(ShiftZString(Q, -1), ShiftZString(P, -1))),
                ("rduals-into-par", TensZString(ShiftZString(P, 1), ShiftZString(Q, 1)),
                 ShiftZString(ParZString(Q, P), 1)),
                ("lduals-into-par", TensZString(ShiftZString(P, -1), ShiftZString(Q, -1)),
                 ShiftZString(ParZString(Q, P), -1)),
            ]
            for name, lhs, rhs in cases:
                bad = strings_equal_on(lhs, rhs, window)
                if bad:
                    return CheckResult("strict-negations", False,
                                       f"{name} on ({P.describe()},{Q.describe()}): {bad}")
        cancel = [
            ("cancel-right-left", ShiftZString(ShiftZString(P, -1), 1), P),
            ("cancel-left-right", ShiftZString(ShiftZString(P, 1), -1), P),
        ]
        for name, lhs, rhs in cancel:
            bad = strings_equal_on(lhs, rhs, window)
            if bad:
                return CheckResult("strict-negations", False,
                                   f"{name} on {P.describe()}: {bad}")
    e_str, d_str = UnitZString(model, "e"), UnitZString(model, "d")
    unit_cases = [
        ("rdual-of-par-unit", ShiftZString(d_str, -1), e_str),
        ("rdual-of-tens-unit", ShiftZString(e_str, 1), d_str),
        ("ldual-of-par-unit", ShiftZString(d_str, 1), e_str),
        ("ldual-of-tens-unit", ShiftZString(e_str, -1), d_str),
    ]
    for name, lhs, rhs in unit_cases:
        bad = strings_equal_on(lhs, rhs, window)
        if bad:
            return CheckResult("strict-negations", False, f"{name}: {bad}")
    n_strings = len(strings)
    return CheckResult("strict-negations", True, "",
                       4 * n_strings * n_strings + 2 * n_strings + 4)


def check_equivalence(model, window, strings=None):
    """Component zero projects the canonical tower back to its base object,
    and every tested string is isomorphic to the canonical tower on its
    component zero through an invertible mate family."""
    probes = model.probe_objects()
    for p in probes:
        if project0(zangify(model, p)) is not p:
            return CheckResult("zang-equivalence", False,
                               f"projection fails at {p}")
    strings = strings or [zangify(model, p) for p in probes[:3]]
    lo, hi = window
    count = 0
    for P in strings:
        target = zangify(model, P.z(0))
        mate = ZMate(P, target, model.identity(P.z(0)))
        res = mate.check_mateship(window)
        if not res.ok:
            return CheckResult("zang-equivalence", False,
                               f"{P.describe()}: {res.witness}")
        for n in range(lo, hi + 1):
            count += 1
            try:
                model.invert(mate.m(n))
            except MorError:
                return CheckResult("zang-equivalence", False,
                                   f"{P.describe()}: component {n} not invertible")
    return CheckResult("zang-equivalence", True, "", count)


# ---------------------------------------------------------------- fang layer

class FangPreconditionError(Exception):
    """The supplied family is not a full cycle; names a failing axiom."""


def _require_cycle(cycle, profile=None):
    from . import cyclicity as cy
    prof = profile or cy.classify(cycle)
    if not prof.cycle:
        failing = [name for name in ("tbin", "pbin") if not prof.verdicts[name]]
        raise FangPreconditionError(
            f"{cycle.label} is not a cycle: fails {', '.join(failing)}")
    return prof


def fang_membership(string, big, window):
    """Period-two object condition plus counit compatibility with the cycle."""
    m = string.model
    lo, hi = window
    for n in range(lo, hi + 1):
        if string.z(n + 1) is not string.z(n - 1):
            return f"objects not period-two at {n}"
    for n in range(lo + 1, hi + 1):
        want = big.apply(string.z(n - 1), string.z(n), string.gamma(n - 1))
        if string.gamma(n) != want:
            return f"counit compatibility fails at {n}"
    return None


def fang_check(string, cycle, window, profile=None):
    """Membership of one string; the cycle must be a full cycle."""
    _require_cycle(cycle, profile)
    big = to_upper(cycle)
    bad = fang_membership(string, big, window)
    return CheckResult("fang-membership", bad is None, bad or "",
                       window[1] - window[0])


def fang_closure(P, Q, cycle, window, profile=None):
    """Tensor and par of members are members."""
    _require_cycle(cycle, profile)
    big = to_upper(cycle)
    for name, s in (("tens", TensZString(P, Q)), ("par", ParZString(P, Q))):
        bad = fang_membership(s, big, window)
        if bad:
            return CheckResult("fang-closure", False, f"{name}: {bad}")
    return CheckResult("fang-closure", True, "", 2)


def period2_from_cycle(model, p, cycle):
    """The canonical period-two string on (p, rdual p) seeded by the chosen
    counit; its higher counits come from the cycle."""
    big = to_upper(cycle)
    return Period2ZString(model, p, model.rdual(p), model.dual_counit_r(p), big)


# ------------------------------------------------------------ extended cycle

def zangcycle_component(string, cycle, n):
    """Component of the extended cycle on a string: the shift comparison
    conjugated through the base cycle."""
    m = string.model
    into_rdual = m.lcurry(string.gamma(n))
    from_ldual = m.invert(m.rcurry(string.gamma(n - 1)))
    return m.chain(into_rdual, cycle.component(string.z(n)), from_ldual)


def check_zangcycle(model, cycle, window, strings=None, profile=None):
    """The extended cycle is componentwise invertible, restricts to the
    identity on compatible period-two strings, and satisfies the binary
    coherence conditions componentwise (the string-level de Morgan maps being
    identities)."""
    prof = _require_cycle(cycle, profile)
    big = to_upper(cycle)
    lo, hi = window
    out = []
    strings = strings or [zangify(model, p) for p in model.probe_objects()[:3]]

    bad = ""
    n_checked = 0
    for P in strings:
        for n in range(lo + 1, hi):
            n_checked += 1
            try:
                model.invert(zangcycle_component(P, cycle, n))
            except MorError:
                bad = f"{P.describe()} at {n}"
                break
    out.append(CheckResult("zangcycle-invertible", not bad, bad, n_checked))

    bad = ""
    n_checked = 0
    for P in strings:
        for Q in strings:
            PQ_t, PQ_p = TensZString(P, Q), ParZString(P, Q)
            for n in range(lo + 1, hi):
                n_checked += 1
                lhs_t = zangcycle_component(PQ_t, cycle, n)
                lhs_p = zangcycle_component(PQ_p, cycle, n)
                cP = zangcycle_component(P, cycle, n)
                cQ = zangcycle_component(Q, cycle, n)
                if n % 2 == 0:
                    rhs_t = model.par_mor(cQ, cP)
                    rhs_p = model.tens_mor(cQ, cP)
                else:
                    rhs_t = model.tens_mor(cP, cQ)
                    rhs_p = model.par_mor(cP, cQ)
                if lhs_t != rhs_t:
                    bad = f"tensor at {n} on ({P.describe()},{Q.describe()})"
                    break
                if lhs_p != rhs_p:
                    bad = f"par at {n} on ({P.describe()},{Q.describe()})"
                    break
            if bad:
                break
        if bad:
            break
    out.append(CheckResult("zangcycle-binary-coherence", not bad, bad, n_checked))

    bad = ""
    n_checked = 0
    for p in model.probe_objects()[:3]:
        member = period2_from_cycle(model, p, cycle)
        miss = fang_membership(member, big, (lo + 1, hi - 1))
        if miss:
            bad = f"period2({p}): {miss}"
            break
        for n in range(lo + 1, hi):
            n_checked += 1
            comp = zangcycle_component(member, cycle, n)
            if comp != model.identity(member.z(n + 1)):
                bad = f"period2({p}) at {n}"
                break
        if bad:
            break
    out.append(CheckResult("zangcycle-identity-on-fang", not bad, bad, n_checked))
    return out
