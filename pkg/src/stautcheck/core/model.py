"""Interface contract for finite star-autonomous backends.

A backend supplies objects (via descriptor hooks), morphism payloads, exact
equality, and the structural data: associators and unitors for both monoidal
structures, the two linear distributions, and the unit/counit pairs of the
chosen right and left duals.  Everything else -- currying, de Morgan and
cancellation isomorphisms, duals of morphisms, naming -- is derived here once,
by the standard mate recipes, and shared by every backend.

Composites are written in diagrammatic order throughout: ``chain(f, g)``
applies ``f`` first.  Each composition is dom/cod-validated, so a wrongly
transcribed diagram fails at construction instead of producing garbage.
"""

from dataclasses import dataclass

from .objects import Interner, ObjRef, GEN, TENS, PAR, RDUAL, LDUAL, UNIT_T, UNIT_P, UniverseError
from .morphisms import Mor, MorError, CompositionError, ShapeError


@dataclass(frozen=True)
class Adjunction:
    """A linear adjunction: unit e -> right|left, counit left (x) right -> d."""

    left: ObjRef
    right: ObjRef
    unit: Mor
    counit: Mor


class StautModel:
    is_linear = False
    is_braided = False

    def __init__(self, depth_limit=6):
        self._interner = Interner(depth_limit)
        self._values = {}
        self._struct_cache = {}
        self._gen_names = []
        self.probes = []

    # ---------------------------------------------------------------- objects

    def gen(self, name):
        if name not in self._gen_names:
            raise UniverseError(f"unknown generator {name!r}; declared: {self._gen_names}")
        return self._interner.intern(GEN, (name,))

    @property
    def e(self):
        return self._interner.intern(UNIT_T, ())

    @property
    def d(self):
        return self._interner.intern(UNIT_P, ())

    def tens(self, a, b):
        return self._interner.intern(TENS, (a, b))

    def par(self, a, b):
        return self._interner.intern(PAR, (a, b))

    def rdual(self, a):
        return self._interner.intern(RDUAL, (a,))

    def ldual(self, a):
        return self._interner.intern(LDUAL, (a,))

    def value(self, ref):
        v = self._values.get(id(ref))
        if v is not None:
            return v
        k = ref.kind
        if k == GEN:
            v = self._gen_value(ref.args[0])
        elif k == UNIT_T:
            v = self._unit_t_value()
        elif k == UNIT_P:
            v = self._unit_p_value()
        elif k == TENS:
            v = self._tens_value(self.value(ref.args[0]), self.value(ref.args[1]))
        elif k == PAR:
            v = self._par_value(self.value(ref.args[0]), self.value(ref.args[1]))
        elif k == RDUAL:
            v = self._rdual_value(self.value(ref.args[0]))
        elif k == LDUAL:
            v = self._ldual_value(self.value(ref.args[0]))
        else:
            raise ValueError(k)
        self._values[id(ref)] = v
        return v

    # ------------------------------------------------------- backend contract

    def _gen_value(self, name):
        raise NotImplementedError

    def _unit_t_value(self):
        raise NotImplementedError

    def _unit_p_value(self):
        raise NotImplementedError

    def _tens_value(self, va, vb):
        raise NotImplementedError

    def _par_value(self, va, vb):
        raise NotImplementedError

    def _rdual_value(self, va):
        raise NotImplementedError

    def _ldual_value(self, va):
        raise NotImplementedError

    def mor(self, dom, cod, payload=None):
        raise NotImplementedError

    def identity(self, p):
        raise NotImplementedError

    def _compose_payload(self, f, g):
        raise NotImplementedError

    def tens_mor(self, f, g):
        raise NotImplementedError

    def par_mor(self, f, g):
        raise NotImplementedError

    def invert(self, f):
        raise NotImplementedError

    def hom_span(self, p, q):
        """Finite spanning set of Hom(p, q): the unique witness (thin) or a basis (linear)."""
        raise NotImplementedError

    def braid(self, p, q):
        raise MorError("model is not braided")

    # ------------------------------------------------------------ composition

    def compose(self, f, g):
        """Diagrammatic composite: f then g."""
        if f.cod is not g.dom:
            raise CompositionError(
                f"cannot compose {f.dom} -> {f.cod} with {g.dom} -> {g.cod}: "
                f"cod {f.cod} is not dom {g.dom}")
        return self._compose_payload(f, g)

    def chain(self, *mors):
        out = mors[0]
        for m in mors[1:]:
            out = self.compose(out, m)
        return out

    # ------------------------------------------------- structural map getters
    # Subclasses implement the _build_* hooks; results are cached per object
    # tuple so repeated coherence checks stay cheap.

    def _structural(self, key, builder):
        hit = self._struct_cache.get(key)
        if hit is None:
            hit = builder()
            self._struct_cache[key] = hit
        return hit

    def assoc_t(self, p, q, r):
        """(p (x) q) (x) r -> p (x) (q (x) r)"""
        return self._structural(("at", id(p), id(q), id(r)), lambda: self._build_assoc_t(p, q, r))

    def assoc_p(self, p, q, r):
        """(p par q) par r -> p par (q par r)"""
        return self._structural(("ap", id(p), id(q), id(r)), lambda: self._build_assoc_p(p, q, r))

    def lunit_t(self, p):
        """e (x) p -> p"""
        return self._structural(("lt", id(p)), lambda: self._build_lunit_t(p))

    def runit_t(self, p):
        """p (x) e -> p"""
        return self._structural(("rt", id(p)), lambda: self._build_runit_t(p))

    def lunit_p(self, p):
        """d par p -> p"""
        return self._structural(("lp", id(p)), lambda: self._build_lunit_p(p))

    def runit_p(self, p):
        """p par d -> p"""
        return self._structural(("rp", id(p)), lambda: self._build_runit_p(p))

    def dist_l(self, q, s, t):
        """q (x) (s par t) -> (q (x) s) par t"""
        return self._structural(("dl", id(q), id(s), id(t)), lambda: self._build_dist_l(q, s, t))

    def dist_r(self, p, q, s):
        """(p par q) (x) s -> p par (q (x) s)"""
        return self._structural(("dr", id(p), id(q), id(s)), lambda: self._build_dist_r(p, q, s))

    def dual_unit_r(self, p):
        """e -> rdual(p) par p"""
        return self._structural(("ur", id(p)), lambda: self._build_dual_unit_r(p))

    def dual_counit_r(self, p):
        """p (x) rdual(p) -> d"""
        return self._structural(("cr", id(p)), lambda: self._build_dual_counit_r(p))

    def dual_unit_l(self, p):
        """e -> p par ldual(p)"""
        return self._structural(("ul", id(p)), lambda: self._build_dual_unit_l(p))

    def dual_counit_l(self, p):
        """ldual(p) (x) p -> d"""
        return self._structural(("cl", id(p)), lambda: self._build_dual_counit_l(p))

    # ----------------------------------------------------- adjunction currying

    def rdual_adj(self, p):
        return Adjunction(p, self.rdual(p), self.dual_unit_r(p), self.dual_counit_r(p))

    def ldual_adj(self, p):
        return Adjunction(self.ldual(p), p, self.dual_unit_l(p), self.dual_counit_l(p))

    def curry_left(self, adj, f):
        """f: left (x) t -> d   becomes   t -> right."""
        dom = f.dom
        if dom.kind != TENS or dom.args[0] is not adj.left or f.cod is not self.d:
            raise ShapeError(f"curry_left expects {adj.left} (x) t -> d, got {f}")
        t = dom.args[1]
        y = adj.right
        return self.chain(
            self.invert(self.lunit_t(t)),
            self.tens_mor(adj.unit, self.identity(t)),
            self.dist_r(y, adj.left, t),
            self.par_mor(self.identity(y), f),
            self.runit_p(y))

    def uncurry_left(self, adj, g):
        """g: t -> right   becomes   left (x) t -> d."""
        if g.cod is not adj.right:
            raise ShapeError(f"uncurry_left expects t -> {adj.right}, got {g}")
        return self.chain(
            self.tens_mor(self.identity(adj.left), g),
            adj.counit)

    def curry_right(self, adj, f):
        """f: t (x) right -> d   becomes   t -> left."""
        dom = f.dom
        if dom.kind != TENS or dom.args[1] is not adj.right or f.cod is not self.d:
            raise ShapeError(f"curry_right expects t (x) {adj.right} -> d, got {f}")
        t = dom.args[0]
        x = adj.left
        return self.chain(
            self.invert(self.runit_t(t)),
            self.tens_mor(self.identity(t), adj.unit),
            self.dist_l(t, adj.right, x),
            self.par_mor(f, self.identity(x)),
            self.lunit_p(x))

    def uncurry_right(self, adj, h):
        """h: t -> left   becomes   t (x) right -> d."""
        if h.cod is not adj.left:
            raise ShapeError(f"uncurry_right expects t -> {adj.left}, got {h}")
        return self.chain(
            self.tens_mor(h, self.identity(adj.right)),
            adj.counit)

    def lcurry(self, f):
        """p (x) t -> d   becomes   t -> rdual(p); bijective, inverse lcurry_inv."""
        if f.dom.kind != TENS or f.cod is not self.d:
            raise ShapeError(f"lcurry expects p (x) t -> d, got {f}")
        return self.curry_left(self.rdual_adj(f.dom.args[0]), f)

    def lcurry_inv(self, g):
        if g.cod.kind != RDUAL:
            raise ShapeError(f"lcurry_inv expects t -> rdual(p), got {g}")
        return self.uncurry_left(self.rdual_adj(g.cod.args[0]), g)

    def rcurry(self, f):
        """t (x) p -> d   becomes   t -> ldual(p); bijective, inverse rcurry_inv."""
        if f.dom.kind != TENS or f.cod is not self.d:
            raise ShapeError(f"rcurry expects t (x) p -> d, got {f}")
        return self.curry_right(self.ldual_adj(f.dom.args[1]), f)

    def rcurry_inv(self, h):
        if h.cod.kind != LDUAL:
            raise ShapeError(f"rcurry_inv expects t -> ldual(p), got {h}")
        return self.uncurry_right(self.ldual_adj(h.cod.args[0]), h)

    # ----------------------------------------------------- duals of morphisms

    def rdual_mor(self, f):
        """f: p -> q   becomes   rdual(q) -> rdual(p)."""
        p, q = f.dom, f.cod
        ev = self.chain(self.tens_mor(f, self.identity(self.rdual(q))),
                        self.dual_counit_r(q))
        return self.curry_left(self.rdual_adj(p), ev)

    def ldual_mor(self, f):
        """f: p -> q   becomes   ldual(q) -> ldual(p)."""
        p, q = f.dom, f.cod
        ev = self.chain(self.tens_mor(self.identity(self.ldual(q)), f),
                        self.dual_counit_l(q))
        return self.curry_right(self.ldual_adj(p), ev)

    # ------------------------------------------- de Morgan and cancellation

    def canon_r(self, p):
        """p -> rdual(ldual(p)), one of the two cancellation isomorphisms."""
        return self._structural(("canr", id(p)), lambda: self.lcurry(self.dual_counit_l(p)))

    def canon_l(self, p):
        """p -> ldual(rdual(p)), the other cancellation isomorphism."""
        return self._structural(("canl", id(p)), lambda: self.rcurry(self.dual_counit_r(p)))

    def demorgan(self, variant, p=None, q=None):
        """The canonical de Morgan isomorphism named by ``variant``.

        tens_r: rdual(p (x) q) -> rdual(q) par rdual(p)
        tens_l: ldual(p (x) q) -> ldual(q) par ldual(p)
        par_r:  rdual(p) (x) rdual(q) -> rdual(q par p)
        par_l:  ldual(p) (x) ldual(q) -> ldual(q par p)
        unit_er: e -> rdual(d)      unit_dr: rdual(e) -> d
        unit_el: e -> ldual(d)      unit_dl: ldual(e) -> d
        """
        key = ("dm", variant, id(p), id(q))
        return self._structural(key, lambda: self._build_demorgan(variant, p, q))

    def _build_demorgan(self, variant, p, q):
        e, d = self.e, self.d
        if variant == "tens_r":
            rp, rq = self.rdual(p), self.rdual(q)
            ev = self.chain(
                self.assoc_t(p, q, self.par(rq, rp)),
                self.tens_mor(self.identity(p), self.dist_l(q, rq, rp)),
                self.tens_mor(self.identity(p),
                              self.par_mor(self.dual_counit_r(q), self.identity(rp))),
                self.tens_mor(self.identity(p), self.lunit_p(rp)),
                self.dual_counit_r(p))
            return self.invert(self.curry_left(self.rdual_adj(self.tens(p, q)), ev))
        if variant == "tens_l":
            lp, lq = self.ldual(p), self.ldual(q)
            ev = self.chain(
                self.invert(self.assoc_t(self.par(lq, lp), p, q)),
                self.tens_mor(self.dist_r(lq, lp, p), self.identity(q)),
                self.tens_mor(self.par_mor(self.identity(lq), self.dual_counit_l(p)),
                              self.identity(q)),
                self.tens_mor(self.runit_p(lq), self.identity(q)),
                self.dual_counit_l(q))
            return self.invert(self.curry_right(self.ldual_adj(self.tens(p, q)), ev))
        if variant == "par_r":
            rp, rq = self.rdual(p), self.rdual(q)
            ev = self.chain(
                self.invert(self.assoc_t(self.par(q, p), rp, rq)),
                self.tens_mor(self.dist_r(q, p, rp), self.identity(rq)),
                self.tens_mor(self.par_mor(self.identity(q), self.dual_counit_r(p)),
                              self.identity(rq)),
                self.tens_mor(self.runit_p(q), self.identity(rq)),
                self.dual_counit_r(q))
            return self.curry_left(self.rdual_adj(self.par(q, p)), ev)
        if variant == "par_l":
            lp, lq = self.ldual(p), self.ldual(q)
            ev = self.chain(
                self.assoc_t(lp, lq, self.par(q, p)),
                self.tens_mor(self.identity(lp), self.dist_l(lq, q, p)),
                self.tens_mor(self.identity(lp),
                              self.par_mor(self.dual_counit_l(q), self.identity(p))),
                self.tens_mor(self.identity(lp), self.lunit_p(p)),
                self.dual_counit_l(p))
            return self.curry_right(self.ldual_adj(self.par(q, p)), ev)
        if variant == "unit_er":
            return self.curry_left(self.rdual_adj(d), self.runit_t(d))
        if variant == "unit_dr":
            return self.invert(self.curry_left(self.rdual_adj(e), self.lunit_t(d)))
        if variant == "unit_el":
            return self.curry_right(self.ldual_adj(d), self.lunit_t(d))
        if variant == "unit_dl":
            return self.invert(self.curry_right(self.ldual_adj(e), self.runit_t(d)))
        raise ValueError(f"unknown de Morgan variant {variant!r}")

    # ----------------------------------------------------------------- naming

    def name_mor(self, f):
        """f: p -> q   becomes its global element e -> rdual(p) par q."""
        p = f.dom
        return self.chain(self.dual_unit_r(p),
                          self.par_mor(self.identity(self.rdual(p)), f))

    def residual_objects(self, x, z):
        """Par encodings of both residuals of x and z, with contraposition isos.

        Returns (x -o z, z o- x, contra_r, contra_l) where
        x -o z  := rdual(x) par z,
        z o- x  := z par ldual(x),
        contra_r: (x -o z) -> rdual(x) par ldual(rdual(z))  (right contraposition)
        contra_l: (z o- x) -> rdual(ldual(z)) par ldual(x)  (left contraposition)
        """
        left_res = self.par(self.rdual(x), z)
        right_res = self.par(z, self.ldual(x))
        contra_r = self.par_mor(self.identity(self.rdual(x)), self.canon_l(z))
        contra_l = self.par_mor(self.canon_r(z), self.identity(self.ldual(x)))
        return left_res, right_res, contra_r, contra_l

    # ----------------------------------------------------------------- probes

    def probe_objects(self):
        return list(self.probes)

    def describe(self):
        """One-line descriptor used in reports."""
        return type(self).__name__
