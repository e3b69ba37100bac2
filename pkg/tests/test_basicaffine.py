from math import pi, sqrt

import jsonschema
import numpy as np
import pytest
from hypothesis import given, strategies as st

from implodekit.basicaffine import (EMBEDDED_POINT_SCHEMA, EmbeddedPoint, act_group, ambient_moments,
                                    embed_point, embed_su_n, hilbert_vs_weyl, module_E_spec, section_point,
                                    section_s, su3_quadric_residual, t_moment, torus_section_moment,
                                    v_sigma_stabilizer_dim, wz_coordinates)
from implodekit.chamber import enumerate_faces, levi_roots, make_face, top_face, vertex_face
from implodekit.errors import ImplodeKitError, InvalidGroupElement, InvalidRootDatum, NotDominant
from implodekit.implosion import GroupPointSUn, commutator_parabolic_dim
from implodekit.rootdata import build_root_datum, positive_roots, torus, unitary_group
from implodekit.sun import coroot_matrix, random_su, random_su_algebra, weight_value

from oracles import normal_monomial_count


def test_module_e_examples(a1, a2):
    assert module_E_spec(a1).generators == (((1,), 2),)
    assert module_E_spec(a2).generators == (((1, 0), 3), ((0, 1), 3))
    assert module_E_spec(a2).n == 3 and module_E_spec(a2).dim == 6
    assert module_E_spec(torus(1)).generators == (((1,), 1), ((-1,), 1))
    assert module_E_spec(build_root_datum("G2")).generators[0][1] in (7, 14)


def test_module_e_rejects_non_simply_connected(so3, u2):
    with pytest.raises(InvalidRootDatum):
        module_E_spec(so3)
    with pytest.raises(InvalidRootDatum):
        module_E_spec(u2)  # U(2): derived group does not split off the centre


def test_module_e_product_with_torus():
    d = build_root_datum("A", 2, central_rank=1)
    spec = module_E_spec(d)
    assert [w for w, _ in spec.generators] == [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, -1)]
    assert spec.n is None


def test_section_examples(a1, a2):
    assert section_s(a2, (0, 0)) == [0.0, 0.0]
    assert section_s(a1, (pi,)) == pytest.approx([1.0], abs=1e-15)
    assert section_s(torus(1), (0,)) == pytest.approx([1 / sqrt(2 * pi)] * 2, abs=1e-15)
    with pytest.raises(NotDominant):
        section_s(a2, (-1, 0))
    with pytest.raises(ValueError):
        section_s(a2, (1,))


@given(st.lists(st.floats(0, 50), min_size=1, max_size=3))
def test_section_norm_identity(lam):
    n = len(lam) + 1
    v = section_point(n, lam)
    assert abs(np.linalg.norm(v.vector) ** 2 - sum(lam) / pi) <= 1e-12 * max(1.0, sum(lam))
    d = build_root_datum("A", n - 1)
    assert np.allclose(section_s(d, lam), [np.linalg.norm(c) for c in v.components], atol=1e-15)


@given(st.lists(st.floats(-20, 20), min_size=1, max_size=3))
def test_torus_section_moment_is_minus_lambda(lam):
    assert np.allclose(torus_section_moment(lam), [-x for x in lam], atol=1e-12)


def test_embedding_examples():
    rng = np.random.default_rng(3)
    lam = (2, 5)
    s = embed_su_n(np.eye(3), lam)
    for a, b in zip(s.components, section_point(3, lam).components):
        assert np.allclose(a, b, atol=1e-15)
    k = random_su(2, rng)
    assert np.allclose(embed_su_n(k, (3,)).vector, sqrt(3 / pi) * k[:, 0], atol=1e-14)
    k3 = random_su(3, rng)
    assert su3_quadric_residual(embed_su_n(k3, lam)) < 1e-12
    with pytest.raises(InvalidGroupElement):
        embed_su_n(2 * np.eye(2), (1,))
    with pytest.raises(NotDominant):
        embed_su_n(np.eye(2), (-1,))


def test_embedding_matches_group_action():
    rng = np.random.default_rng(11)
    for n in (2, 3, 4):
        for _ in range(10):
            k1, k2 = random_su(n, rng), random_su(n, rng)
            lam = tuple(float(x) for x in rng.uniform(0, 4, n - 1))
            lhs = embed_su_n(k1 @ k2, lam).vector
            rhs = act_group(k1, embed_su_n(k2, lam)).vector
            assert np.linalg.norm(lhs - rhs) < 1e-10
            assert np.linalg.norm(act_group(k2, section_point(n, lam)).vector - embed_su_n(k2, lam).vector) < 1e-10


def test_embedding_constant_on_levi_orbits():
    rng = np.random.default_rng(5)
    k = random_su(3, rng)
    g = np.eye(3, dtype=complex)
    g[:2, :2] = random_su(2, rng)
    a = embed_point(GroupPointSUn(k, (0, 2)))
    b = embed_point(GroupPointSUn(k @ g, (0, 2)))
    assert np.linalg.norm(a.vector - b.vector) < 1e-12


def test_quadric_examples():
    c, c2 = 0.7, 1.3 - 0.2j
    v = EmbeddedPoint((np.array([c, 0, 0]), np.array([c2, 0, 0])))  # e1 ^ e2 sits in the z3 slot
    w, z = wz_coordinates(v)
    assert np.allclose(z, [0, 0, c2])
    assert su3_quadric_residual(v) == 0
    assert su3_quadric_residual([1, 0, 0, 1, 0, 0]) == 1
    with pytest.raises(ValueError):
        su3_quadric_residual([1, 2, 3])
    with pytest.raises(ValueError):
        wz_coordinates(section_point(2, (1,)))


def test_quadric_on_many_embedded_points():
    rng = np.random.default_rng(99)
    worst = max(su3_quadric_residual(embed_su_n(random_su(3, rng), tuple(rng.uniform(0, 5, 2))))
                for _ in range(300))
    assert worst < 1e-12


@pytest.mark.parametrize("n", [2, 3, 4])
def test_stabilizer_dims_all_faces(n):
    d = build_root_datum("A", n - 1)
    for f in enumerate_faces(d):
        computed, expected, ok = v_sigma_stabilizer_dim(d, f)
        assert ok and computed == expected


def test_stabilizer_examples(a1, a2):
    assert v_sigma_stabilizer_dim(a2, top_face(a2)) == (3, 3, True)
    assert v_sigma_stabilizer_dim(a2, vertex_face(a2)) == (8, 8, True)
    assert v_sigma_stabilizer_dim(a2, make_face(a2, [0])) == (5, 5, True)
    assert v_sigma_stabilizer_dim(a1, top_face(a1)) == (1, 1, True)
    assert v_sigma_stabilizer_dim(a1, vertex_face(a1)) == (3, 3, True)
    with pytest.raises(ImplodeKitError):
        v_sigma_stabilizer_dim(a2, top_face(a2), n=4)
    with pytest.raises(ImplodeKitError):
        v_sigma_stabilizer_dim(build_root_datum("B", 2), top_face(build_root_datum("B", 2)))


def test_b2_levi_formula(b2):
    # formula only for B2: dim [P,P] = |R_s| + |S_s| + |R+ \ R+_s|
    expected = {(): 4, (0,): 6, (1,): 6, (0, 1): 10}
    for f in enumerate_faces(b2):
        levi = levi_roots(b2, f)
        got = len(levi) + len(f.vanishing_set) + len(positive_roots(b2)) - len(levi) // 2
        assert got == expected[f.vanishing_set] == commutator_parabolic_dim(b2, f)


def test_moment_examples():
    zero = EmbeddedPoint((np.zeros(3, complex), np.zeros(3, complex)))
    rng = np.random.default_rng(0)
    xi = random_su_algebra(3, rng)
    k, t = ambient_moments(zero, xi)
    assert k == 0 and t == (0, 0)
    lam = (1.5, 0.25)
    s = section_point(3, lam)
    assert np.allclose(t_moment(s), [-x for x in lam], atol=1e-12)
    for p in range(2):
        assert abs(ambient_moments(s, coroot_matrix(3, p))[0] + weight_value(lam, coroot_matrix(3, p))) < 1e-12
    with pytest.raises(ValueError):
        ambient_moments(s, np.eye(3))


def test_embedded_point_json():
    v = embed_su_n(np.eye(3), (1, 2))
    doc = v.to_json("SU(3)")
    jsonschema.validate(doc, EMBEDDED_POINT_SCHEMA)
    assert [m["weight"] for m in doc["modules"]] == [[1, 0], [0, 1]]
    back = EmbeddedPoint.from_vector(3, v.vector)
    assert np.array_equal(back.vector, v.vector)
    with pytest.raises(ValueError):
        EmbeddedPoint.from_vector(3, np.zeros(5))


def test_hilbert_examples():
    assert hilbert_vs_weyl(0, 0) == (1, 1, True)
    assert hilbert_vs_weyl(1, 1) == (8, 8, True)
    assert hilbert_vs_weyl(2, 1) == (15, 15, True)
    with pytest.raises(ValueError):
        hilbert_vs_weyl(-1, 0)


def test_hilbert_against_normal_monomials():
    for a in range(13):
        for b in range(13):
            h, w, ok = hilbert_vs_weyl(a, b)
            assert ok and h == normal_monomial_count(a, b) == w


def test_unitary_group_has_no_su_realization():
    with pytest.raises(InvalidRootDatum):
        module_E_spec(unitary_group(3))
