"""Module category of the double of the two-element group, exactly.

The underlying algebra is the group algebra of Z2 x Z2 on group-like
generators g (the group part) and b (the character part), with the
quasitriangular structure

    R = 1/2 (1(x)1 + 1(x)g + b(x)1 - b(x)g).

Braiding on modules is swap after the R-action; the canonical twist is the
action of u = 1/2 (1 + g + b - bg).  The structure constants are not taken on
faith: ``verify_hopf_data`` brute-forces the quasitriangularity identities in
the 64-dimensional triple tensor algebra, and the model constructor aborts if
any of them fails.  Objects carry their action matrices; duals act through
the transpose (the antipode is the identity on this basis, all four basis
elements being involutive group-likes).
"""

from fractions import Fraction

from .core import matrices as mx
from .core.morphisms import MorError
from .linear import LinearModel, Space

HALF = Fraction(1, 2)

# Basis of the algebra: (i, j) stands for b^i g^j; all four are group-like.
BASIS = [(0, 0), (0, 1), (1, 0), (1, 1)]

# R written over basis pairs.
R_COEFFS = {((0, 0), (0, 0)): HALF, ((0, 0), (0, 1)): HALF,
            ((1, 0), (0, 0)): HALF, ((1, 0), (0, 1)): -HALF}

U_COEFFS = {(0, 0): HALF, (0, 1): HALF, (1, 0): HALF, (1, 1): -HALF}


def _mul(x, y):
    return ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)


def _tensor_mul(a, b):
    """Multiply elements of a tensor power of the algebra, given as dicts
    mapping basis tuples to coefficients."""
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(_mul(x, y) for x, y in zip(ka, kb))
            out[k] = out.get(k, Fraction(0)) + va * vb
    return {k: v for k, v in out.items() if v != 0}


def _embed(coeffs, legs, arity):
    """Place a tensor-square element into the chosen legs of a higher power."""
    out = {}
    for (x, y), v in coeffs.items():
        k = [(0, 0)] * arity
        k[legs[0]], k[legs[1]] = x, y
        out[tuple(k)] = v
    return out


def verify_hopf_data():
    """Brute-force the quasitriangularity of R; returns the violated identity
    name or None."""
    unit3 = {((0, 0),) * 3: Fraction(1)}
    delta_id = {}
    for (x, y), v in R_COEFFS.items():
        delta_id[(x, x, y)] = delta_id.get((x, x, y), Fraction(0)) + v
    r13r23 = _tensor_mul(_embed(R_COEFFS, (0, 2), 3), _embed(R_COEFFS, (1, 2), 3))
    if delta_id != r13r23:
        return "(coproduct x id)(R) = R13 R23"
    id_delta = {}
    for (x, y), v in R_COEFFS.items():
        id_delta[(x, y, y)] = id_delta.get((x, y, y), Fraction(0)) + v
    r13r12 = _tensor_mul(_embed(R_COEFFS, (0, 2), 3), _embed(R_COEFFS, (0, 1), 3))
    if id_delta != r13r12:
        return "(id x coproduct)(R) = R13 R12"
    for u in BASIS:
        lhs = _tensor_mul({(u, u): Fraction(1)}, _embed(R_COEFFS, (0, 1), 2))
        rhs = _tensor_mul(_embed(R_COEFFS, (0, 1), 2), {(u, u): Fraction(1)})
        if lhs != rhs:
            return "R intertwines the coproduct"
    if _tensor_mul(R_COEFFS, R_COEFFS) != {((0, 0), (0, 0)): Fraction(1)}:
        return "R is involutive"
    # u is group-central (the algebra is commutative) and involutive.
    if _tensor_mul({(k,): v for k, v in U_COEFFS.items()},
                   {(k,): v for k, v in U_COEFFS.items()}) != {((0, 0),): Fraction(1)}:
        return "twist element squares to 1"
    return None


def _check_action(name, act_g, act_b):
    n = len(act_g)
    eye = mx.identity(n)
    if mx.matmul(act_g, act_g) != eye:
        raise MorError(f"module {name}: g action is not involutive")
    if mx.matmul(act_b, act_b) != eye:
        raise MorError(f"module {name}: b action is not involutive")
    if mx.matmul(act_g, act_b) != mx.matmul(act_b, act_g):
        raise MorError(f"module {name}: g and b actions do not commute")


class DoubleZ2Model(LinearModel):
    """Finite-dimensional modules of the double, with R-matrix braiding."""

    is_braided = True

    SIMPLE_NAMES = ("s_pp", "s_pm", "s_mp", "s_mm")

    def __init__(self, depth_limit=8):
        bad = verify_hopf_data()
        if bad is not None:
            raise MorError(f"double-of-Z2 construction failed the axiom: {bad}")
        gens = {}
        signs = {"s_pp": (1, 1), "s_pm": (1, -1), "s_mp": (-1, 1), "s_mm": (-1, -1)}
        for name, (sg, sb) in signs.items():
            act_g, act_b = ((sg,),), ((sb,),)
            _check_action(name, act_g, act_b)
            gens[name] = Space(1, {"g": act_g, "b": act_b})
        reg_g = mx.mat([[1 if BASIS[r] == _mul((0, 1), BASIS[c]) else 0
                         for c in range(4)] for r in range(4)])
        reg_b = mx.mat([[1 if BASIS[r] == _mul((1, 0), BASIS[c]) else 0
                         for c in range(4)] for r in range(4)])
        _check_action("regular", reg_g, reg_b)
        gens["regular"] = Space(4, {"g": reg_g, "b": reg_b})
        super().__init__(gens, depth_limit)
        simples = [self.gen(n) for n in self.SIMPLE_NAMES]
        self.probes = [self.e, self.d] + simples + [self.gen("regular")]

    def describe(self):
        return "double(Z2)-modules"

    # ---------------------------------------------------------------- actions

    def action(self, ref, letter):
        """Matrix of the group-like generator on the module of ``ref``."""
        v = self.value(ref)
        if v.data is None:
            return mx.identity(v.dim)
        return v.data[letter]

    def _unit_t_value(self):
        return Space(1, {"g": ((1,),), "b": ((1,),)})

    def _unit_p_value(self):
        return self._unit_t_value()

    def _tens_value(self, va, vb):
        return Space(va.dim * vb.dim,
                     {k: mx.kron(va.data[k], vb.data[k]) for k in ("g", "b")})

    def _rdual_value(self, va):
        return Space(va.dim, {k: mx.transpose(va.data[k]) for k in ("g", "b")})

    def _ldual_value(self, va):
        return self._rdual_value(va)

    def hom_span(self, p, q):
        """Basis of the module maps p -> q, by exact commutant solving."""
        def build():
            dp, dq = self.dim(p), self.dim(q)
            rows = []
            for letter in ("g", "b"):
                aq, ap = self.action(q, letter), self.action(p, letter)
                for i in range(dq):
                    for j in range(dp):
                        row = [Fraction(0)] * (dq * dp)
                        for k in range(dq):
                            row[k * dp + j] += aq[i][k]
                        for k in range(dp):
                            row[i * dp + k] -= ap[k][j]
                        rows.append(tuple(row))
            basis = mx.nullspace(tuple(rows)) if rows else []
            out = []
            for v in basis:
                m = tuple(tuple(v[i * dp + j] for j in range(dp)) for i in range(dq))
                out.append(self.mor(p, q, m))
            return out
        return self._structural(("span", id(p), id(q)), build)

    # ----------------------------------------------------------------- braid

    def braid(self, p, q):
        def build():
            ip, iq = mx.identity(self.dim(p)), mx.identity(self.dim(q))
            r_act = mx.zeros(self.dim(p) * self.dim(q), self.dim(p) * self.dim(q))
            for (x, y), coeff in R_COEFFS.items():
                ax = ip
                if x == (1, 0):
                    ax = self.action(p, "b")
                ay = iq
                if y == (0, 1):
                    ay = self.action(q, "g")
                r_act = mx.add(r_act, mx.scale(coeff, mx.kron(ax, ay)))
            swap = mx.swap_matrix(self.dim(p), self.dim(q))
            return self.mor(self.tens(p, q), self.tens(q, p), mx.matmul(swap, r_act))
        return self._structural(("br", id(p), id(q)), build)

    def twist_matrix(self, ref):
        """Action of the canonical twist element on the module of ``ref``."""
        n = self.dim(ref)
        out = mx.zeros(n, n)
        for (i, j), coeff in U_COEFFS.items():
            m = mx.identity(n)
            if i:
                m = mx.matmul(self.action(ref, "b"), m)
            if j:
                m = mx.matmul(m, self.action(ref, "g"))
            out = mx.add(out, mx.scale(coeff, m))
        return out


def build_drinfeld_z2(depth_limit=8):
    """Construct and internally verify the braided module model."""
    return DoubleZ2Model(depth_limit)
