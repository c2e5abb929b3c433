"""Interface-level behaviour shared by the backends: composition typing,
curry bijections, canonical isomorphisms, the invariant suite."""

import pytest

from stautcheck.core import matrices as mx
from stautcheck.core.morphisms import CompositionError, MorError, ShapeError
from stautcheck.core.objects import UniverseError
from stautcheck.core.validate import validate_staut
from stautcheck.quantale import build_s3_pointed
from stautcheck.thin import ThinModel
from stautcheck.linear import build_vec_model


def test_hash_consing(vec):
    p = vec.gen("p")
    assert vec.tens(p, p) is vec.tens(p, p)
    assert vec.rdual(vec.tens(p, p)) is vec.rdual(vec.tens(p, p))
    assert vec.tens(p, p) is not vec.par(p, p)


def test_unknown_generator(vec):
    with pytest.raises(UniverseError):
        vec.gen("nope")


def test_depth_limit_error_mentions_flag():
    shallow = build_vec_model(2, depth_limit=1)
    p = shallow.gen("p")
    with pytest.raises(UniverseError, match="--depth"):
        shallow.rdual(shallow.rdual(p))


def test_composition_mismatch_names_both_objects(vec):
    p = vec.gen("p")
    f = vec.identity(p)
    g = vec.identity(vec.tens(p, p))
    with pytest.raises(CompositionError) as err:
        vec.compose(f, g)
    assert "p" in str(err.value)


def test_identity_neutral(vec):
    p = vec.gen("p")
    f = vec.mor(p, p, mx.mat([[1, 2], [3, 4]]))
    assert vec.compose(vec.identity(p), f) == f
    assert vec.compose(f, vec.identity(p)) == f


def test_thin_composition_is_witness_transport(thin_rel2):
    m = thin_rel2
    q = m.q
    bot = m.gen(q.name(0))
    top = m.gen(q.name(q.meta["full"]))
    f = m.mor(bot, m.e)
    g = m.mor(m.e, top)
    assert m.compose(f, g) == m.mor(bot, top)
    with pytest.raises(MorError):
        m.mor(top, bot)


def test_vec_matrix_composition_order(vec):
    p = vec.gen("p")
    a = vec.mor(p, p, mx.mat([[0, 1], [0, 0]]))
    b = vec.mor(p, p, mx.mat([[0, 0], [1, 0]]))
    assert vec.compose(a, b).payload == mx.matmul(b.payload, a.payload)


def test_curry_bijections_on_full_span(vec):
    p = vec.gen("p")
    t = vec.rdual(p)
    for f in vec.hom_span(vec.tens(p, t), vec.d):
        assert vec.lcurry_inv(vec.lcurry(f)) == f
        assert vec.rcurry_inv(vec.rcurry(f)) == f
    g = vec.lcurry(vec.hom_span(vec.tens(p, t), vec.d)[1])
    assert vec.lcurry(vec.lcurry_inv(g)) == g


def test_curry_shape_errors(vec):
    p = vec.gen("p")
    with pytest.raises(ShapeError):
        vec.lcurry(vec.identity(p))
    with pytest.raises(ShapeError):
        vec.rcurry_inv(vec.identity(p))


def test_lcurry_of_counit_is_identity(vec, thin_rel2):
    for m in (vec, thin_rel2):
        for p in m.probe_objects()[:4]:
            assert m.lcurry(m.dual_counit_r(p)) == m.identity(m.rdual(p))


def test_scalar_curry_on_lines():
    m = build_vec_model(1)
    p = m.gen("p")
    f = m.mor(m.tens(p, p), m.d, ((7,),))
    assert m.lcurry(f).payload == ((7,),)
    assert m.rcurry(f).payload == ((7,),)


def test_name_of_scaled_identity_on_lines():
    m = build_vec_model(1)
    p = m.gen("p")
    f = m.mor_scale(5, m.identity(p))
    assert m.name_mor(f).payload == ((5,),)


def test_residual_objects_thin(thin_rel2):
    m = thin_rel2
    q = m.q
    x = m.gen(q.name(q.elements[5]))
    z = m.gen(q.name(q.elements[9]))
    left, right, contra_r, contra_l = m.residual_objects(x, z)
    assert m.value(left) == q.under(m.value(x), m.value(z))
    assert m.value(right) == q.over(m.value(z), m.value(x))
    m.invert(contra_r), m.invert(contra_l)


def test_residual_of_dualizer_is_rdual(thin_rel2):
    m = thin_rel2
    for p in m.probe_objects()[2:5]:
        left, _, _, _ = m.residual_objects(p, m.d)
        assert m.value(left) == m.value(m.rdual(p))


def test_demorgan_roundtrips(vec):
    p, q = vec.gen("p"), vec.rdual(vec.gen("p"))
    for variant in ("tens_r", "tens_l", "par_r", "par_l"):
        iso = vec.demorgan(variant, p, q)
        assert vec.compose(iso, vec.invert(iso)) == vec.identity(iso.dom)
    for variant in ("unit_er", "unit_dr", "unit_el", "unit_dl"):
        iso = vec.demorgan(variant)
        assert vec.compose(iso, vec.invert(iso)) == vec.identity(iso.dom)


def test_thin_demorgan_and_canon_are_equalities(thin_rel2):
    m = thin_rel2
    p = m.probe_objects()[3]
    q = m.probe_objects()[4]
    assert m.value(m.rdual(m.tens(p, q))) == m.value(m.par(m.rdual(q), m.rdual(p)))
    assert m.value(m.canon_r(p).dom) == m.value(m.canon_r(p).cod)


def test_dual_functors_reverse_composition(vec):
    p = vec.gen("p")
    f = vec.mor(p, p, mx.mat([[1, 1], [0, 1]]))
    g = vec.mor(p, p, mx.mat([[2, 0], [1, 1]]))
    fg = vec.compose(f, g)
    assert vec.rdual_mor(fg) == vec.compose(vec.rdual_mor(g), vec.rdual_mor(f))
    assert vec.ldual_mor(fg) == vec.compose(vec.ldual_mor(g), vec.ldual_mor(f))


def test_validate_staut_all_backends(vec, thin_rel2, dz2, graded):
    for model in (vec, thin_rel2, dz2, graded):
        results = validate_staut(model, seed=11)
        assert all(r.ok for r in results), [
            (r.name, r.witness) for r in results if not r.ok]


def test_validate_staut_noncyclic_thin_model():
    model = ThinModel(build_s3_pointed("(01)"))
    assert all(r.ok for r in validate_staut(model, seed=2))


def test_probe_objects_in_universe(vec):
    for p in vec.probe_objects():
        assert p.depth <= vec._interner.depth_limit
