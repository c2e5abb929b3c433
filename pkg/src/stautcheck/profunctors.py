"""Quantale-enriched categories and profunctors.

At thin enrichment a profunctor is a value matrix over the base quantale
subject to two action inequalities; composition is a join of tensors
(the colimit formula collapses to a join) and par is a meet of pars.  The
endo-profunctors of a finite enriched category therefore assemble into a
quantale of their own, which plugs straight back into the thin
star-autonomous machinery: that is the construction this module verifies.

Composition requires the base to be cyclic (its two duals must agree
pointwise); duals of profunctors transpose the matrix and dualize entries,
and the action inequalities of the dual are re-verified, never assumed --
a failure there is exactly a witness of non-cyclicity of the base.
"""

from dataclasses import dataclass
from itertools import product
import random

from .quantale import Quantale
from .report import CheckResult
from .thin import ThinModel
from .core.validate import validate_staut
from . import cyclicity


class ProfError(Exception):
    pass


@dataclass
class VCat:
    """A category enriched in a quantale: objects plus a hom matrix."""

    base: Quantale
    objects: list
    hom: dict

    def __post_init__(self):
        v = self.base
        for a in self.objects:
            if not v.le(v.unit, self.hom[(a, a)]):
                raise ProfError(f"identity inequality fails at {a}")
        for a, b, c in product(self.objects, repeat=3):
            if not v.le(v.tensor(self.hom[(a, b)], self.hom[(b, c)]),
                        self.hom[(a, c)]):
                raise ProfError(f"composition inequality fails at ({a},{b},{c})")

    def label(self):
        return f"vcat({self.base.label};{len(self.objects)} objects)"


def discrete_vcat(base, names):
    hom = {(a, b): (base.unit if a == b else base.meet(base.elements))
           for a in names for b in names}
    return VCat(base, list(names), hom)


@dataclass
class VProf:
    """A profunctor between enriched categories: a value matrix with both
    action inequalities verified at construction."""

    src: VCat
    dst: VCat
    values: dict

    def __post_init__(self):
        bad = prof_action_violation(self.src, self.dst, self.values)
        if bad is not None:
            raise ProfError(f"action inequality fails at {bad}; "
                            "if this arose from a dual, the base quantale is "
                            "not cyclic there")

    def value(self, q, r):
        return self.values[(q, r)]


def prof_action_violation(src, dst, values):
    v = src.base
    for p, q in product(src.objects, repeat=2):
        for r in dst.objects:
            if not v.le(v.tensor(src.hom[(p, q)], values[(q, r)]), values[(p, r)]):
                return ("left", p, q, r)
    for q in src.objects:
        for r, s in product(dst.objects, repeat=2):
            if not v.le(v.tensor(values[(q, r)], dst.hom[(r, s)]), values[(q, s)]):
                return ("right", q, r, s)
    return None


def is_modulation(f, g):
    """Pointwise order witness f <= g; action compatibility is automatic in
    the thin setting."""
    v = f.src.base
    return all(v.le(f.values[k], g.values[k]) for k in f.values)


def identity_prof(c):
    return VProf(c, c, {k: v for k, v in c.hom.items()})


def dualizer_prof(c):
    v = c.base
    return VProf(c, c, {(q, r): v.perp(c.hom[(r, q)]) for q in c.objects
                        for r in c.objects})


def compose_prof(f, g):
    """Join-of-tensors composite; the action inequalities of the result are
    re-verified by the VProf constructor."""
    if f.dst is not g.src:
        raise ProfError("profunctor composition needs matching middle category")
    v = f.src.base
    cyc, wit = v.is_cyclic()
    if not cyc:
        raise ProfError(f"base quantale is not cyclic (witness {v.name(wit)})")
    vals = {}
    for q in f.src.objects:
        for s in g.dst.objects:
            vals[(q, s)] = v.join([v.tensor(f.value(q, r), g.value(r, s))
                                   for r in f.dst.objects])
    return VProf(f.src, g.dst, vals)


def par_prof(f, g):
    """Meet-of-pars composite, the de Morgan dual of composition."""
    if f.dst is not g.src:
        raise ProfError("profunctor par needs matching middle category")
    v = f.src.base
    vals = {}
    for q in f.src.objects:
        for s in g.dst.objects:
            vals[(q, s)] = v.meet([v.par(f.value(q, r), g.value(r, s))
                                   for r in f.dst.objects])
    return VProf(f.src, g.dst, vals)


def dual_prof(f, side):
    """Pointwise dual on the transposed matrix; ``side`` is "right" or "left"."""
    v = f.src.base
    dualize = v.perp if side == "right" else v.prep
    vals = {(q, r): dualize(f.value(r, q))
            for q in f.dst.objects for r in f.src.objects}
    return VProf(f.dst, f.src, vals)


# ----------------------------------------------------------- enumeration

def enumerate_profs(c, cap=65536, seed=0):
    """All endo-profunctor matrices of c, exhaustively when the raw matrix
    count |V| ** n^2 stays within cap, else a seeded sample of candidates.
    Returns (list of value dicts, exhaustive flag)."""
    v = c.base
    n = len(c.objects)
    keys = [(q, r) for q in c.objects for r in c.objects]
    total = len(v.elements) ** (n * n)
    found = []
    if total <= cap:
        for combo in product(v.elements, repeat=len(keys)):
            vals = dict(zip(keys, combo))
            if prof_action_violation(c, c, vals) is None:
                found.append(vals)
        return found, True
    rng = random.Random(seed)
    seen = set()
    for _ in range(cap):
        combo = tuple(rng.choice(v.elements) for _ in keys)
        if combo in seen:
            continue
        seen.add(combo)
        vals = dict(zip(keys, combo))
        if prof_action_violation(c, c, vals) is None:
            found.append(vals)
    if identity_prof(c).values not in found:
        found.append(identity_prof(c).values)
    if dualizer_prof(c).values not in found:
        found.append(dualizer_prof(c).values)
    return found, False


def build_prof_quantale(c, cap=65536, seed=0):
    """Assemble Prof(c, c) as a quantale: pointwise order, composition as
    tensor, the hom profunctor as unit, its right dual as dualizer.  Requires
    exhaustive enumeration (a sampled element set is not join-closed)."""
    v = c.base
    cyc, wit = v.is_cyclic()
    if not cyc:
        raise ProfError(f"base quantale is not cyclic (witness {v.name(wit)})")
    profs, exhaustive = enumerate_profs(c, cap, seed)
    if not exhaustive:
        raise ProfError("profunctor quantale needs exhaustive enumeration; "
                        "raise the cap or shrink the category")
    keys = [(q, r) for q in c.objects for r in c.objects]
    elements = [tuple(p[k] for k in keys) for p in profs]
    index = {el: i for i, el in enumerate(elements)}

    def as_dict(el):
        return dict(zip(keys, el))

    def le(a, b):
        return all(v.le(x, y) for x, y in zip(a, b))

    tensor_memo = {}

    def tensor(a, b):
        hit = tensor_memo.get((a, b))
        if hit is None:
            fa, fb = as_dict(a), as_dict(b)
            out = []
            for q, s in keys:
                out.append(v.join([v.tensor(fa[(q, r)], fb[(r, s)])
                                   for r in c.objects]))
            hit = tuple(out)
            tensor_memo[(a, b)] = hit
        return hit

    def join2(a, b):
        return tuple(v.join([x, y]) for x, y in zip(a, b))

    unit = tuple(c.hom[k] for k in keys)
    dzr = tuple(v.perp(c.hom[(r, q)]) for (q, r) in keys)
    if unit not in index or dzr not in index:
        raise ProfError("unit or dualizer profunctor missing from enumeration")

    def name(el):
        return "[" + ",".join(v.name(x) for x in el) + "]"

    return Quantale(
        label=f"prof({c.label()})",
        elements=elements,
        le_fn=le,
        tensor_fn=tensor,
        unit=unit,
        dualizer=dzr,
        join2=join2,
        name_fn=name,
        family="prof",
        meta={"keys": keys, "base": v.label, "objects": list(c.objects)},
    )


# ------------------------------------------------------------ full checker

def check_prof_staut(c, cap=65536, seed=0):
    """Verify that Prof(c, c) is a cyclic thin star-autonomous model.

    Returns (SuiteReport-ready CheckResult list, AxiomProfile, prof quantale).
    """
    v = c.base
    out = []
    profs, exhaustive = enumerate_profs(c, cap, seed)
    out.append(CheckResult("prof-enumeration", True,
                           f"{len(profs)} profunctors", len(profs), exhaustive))

    bad = ""
    for i, vals in enumerate(profs):
        f = VProf(c, c, vals)
        for side in ("right", "left"):
            try:
                dual_prof(f, side)
            except ProfError as exc:
                bad = f"profunctor #{i}, {side}: {exc}"
                break
        if bad:
            break
    out.append(CheckResult("prof-duals-are-profunctors", not bad, bad, len(profs),
                           exhaustive))

    bad = ""
    for i, vals in enumerate(profs):
        f = VProf(c, c, vals)
        pr = dual_prof(f, "right").values
        pl = dual_prof(f, "left").values
        rev = {(q, r): v.perp(vals[(r, q)]) for (q, r) in vals}
        if pr != pl or pr != rev:
            bad = f"profunctor #{i}"
            break
    out.append(CheckResult("prof-cyclic-duals-agree", not bad, bad, len(profs),
                           exhaustive))

    rng = random.Random(seed)
    picks = profs if len(profs) <= 12 else rng.sample(profs, 12)
    bad = ""
    for fa in picks:
        for fb in picks:
            f, g = VProf(c, c, fa), VProf(c, c, fb)
            lhs = dual_prof(compose_prof(f, g), "right")
            rhs = par_prof(dual_prof(g, "right"), dual_prof(f, "right"))
            if lhs.values != rhs.values:
                bad = "de Morgan of a composite"
                break
        if bad:
            break
    out.append(CheckResult("prof-demorgan-pointwise", not bad, bad, len(picks) ** 2,
                           len(picks) == len(profs)))

    bad = ""
    for fa in picks:
        f = VProf(c, c, fa)
        i = identity_prof(c)
        if compose_prof(i, f).values != f.values or compose_prof(f, i).values != f.values:
            bad = "identity profunctor is not neutral"
            break
        for (q, s) in f.values:
            tau_ok = v.le(c.hom[(q, s)],
                          par_prof(dual_prof(f, "right"), f).values[(q, s)])
            gamma_ok = v.le(compose_prof(f, dual_prof(f, "right")).values[(q, s)],
                            dualizer_prof(c).values[(q, s)])
            if not (tau_ok and gamma_ok):
                bad = f"duality unit/counit inequality at {(q, s)}"
                break
        if bad:
            break
    out.append(CheckResult("prof-duality-unit-counit", not bad, bad, len(picks)))

    def _dist_violation():
        for fa in picks[:6]:
            for fb in picks[:6]:
                for fc in picks[:6]:
                    f, g, h = (VProf(c, c, x) for x in (fa, fb, fc))
                    gh_par = par_prof(g, h)
                    fg = compose_prof(f, g)
                    for p, q, r, s in product(c.objects, repeat=4):
                        lhs = v.tensor(f.value(p, q), gh_par.value(q, s))
                        rhs = v.par(fg.value(p, r), h.value(r, s))
                        if not v.le(lhs, rhs):
                            return f"linear distribution at {(p, q, r, s)}"
        return ""

    bad = _dist_violation()
    out.append(CheckResult("prof-linear-distribution", not bad, bad,
                           min(6, len(picks)) ** 3))

    profile = None
    if exhaustive:
        pq = build_prof_quantale(c, cap, seed)
        for nm, ok, wit in pq.validate(seed):
            out.append(CheckResult(f"profq-{nm}", ok, str(wit) if not ok else ""))
        cyc, wit = pq.is_cyclic()
        out.append(CheckResult("profq-cyclic", cyc,
                               pq.name(wit) if wit is not None else ""))
        model = ThinModel(pq)
        for r in validate_staut(model, seed):
            r.name = "profq-staut-" + r.name
            out.append(r)
        from .thin import thin_identity_cycle
        cyc_data = thin_identity_cycle(model)
        profile = cyclicity.classify(cyc_data)
        out.append(CheckResult("profq-cycle-classification", profile.cycle,
                               str(profile.witnesses)))
        return out, profile, pq
    return out, profile, None


# ----------------------------------------------- contraposition agreement

def check_contraposition_agreement(model, cycle, samples=50, seed=0):
    """The two derived actions on the right dual of the target of a module
    action a (x) x -> y: transporting through both cycle components versus
    dualizing and cycling the acting object.  They agree whenever the cycle
    is at least tensor-semicyclic; exercised with random action arrows on
    linear backends and with the unique witnesses on thin ones."""
    m = model
    rng = random.Random(seed)
    probes = [p for p in m.probe_objects()
              if not m.is_linear or m.dim(p) <= 2]
    done = 0
    for a in probes:
        for x in probes:
            for y in probes:
                if m.is_linear:
                    alphas = [m.random_mor(rng, m.tens(a, x), y)
                              for _ in range(max(1, samples // 8))]
                else:
                    alphas = m.hom_span(m.tens(a, x), y)
                for alpha in alphas:
                    done += 1
                    ev = m.chain(m.assoc_t(m.ldual(y), a, x),
                                 m.tens_mor(m.identity(m.ldual(y)), alpha),
                                 m.dual_counit_l(y))
                    act = m.curry_right(m.ldual_adj(x), ev)
                    one = m.chain(
                        m.tens_mor(cycle.component(y), m.identity(a)),
                        act,
                        cycle.inverse_component(x))
                    g = m.chain(m.rdual_mor(alpha),
                                m.demorgan("tens_r", a, x),
                                m.par_mor(m.identity(m.rdual(x)),
                                          cycle.component(a)))
                    two = m.chain(
                        m.tens_mor(g, m.identity(a)),
                        m.dist_r(m.rdual(x), m.ldual(a), a),
                        m.par_mor(m.identity(m.rdual(x)), m.dual_counit_l(a)),
                        m.runit_p(m.rdual(x)))
                    if one != two:
                        return CheckResult(
                            "contraposition-agreement", False,
                            f"at a={a}, x={x}, y={y}", done)
                    if done >= samples and not m.is_linear:
                        return CheckResult("contraposition-agreement", True, "",
                                           done)
                if done >= samples:
                    return CheckResult("contraposition-agreement", True, "", done)
    return CheckResult("contraposition-agreement", True, "", done)
