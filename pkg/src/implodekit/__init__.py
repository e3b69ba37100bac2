"""Symplectic implosion of compact Lie groups: root data, strata, the affine
model of the universal imploded cross-section, quantization, and numerical
checks of the form identities."""
from .basicaffine import (EmbeddedPoint, ModuleESpec, ambient_moments, embed_su_n, hilbert_vs_weyl,
                          module_E_spec, section_s, su3_quadric_residual, v_sigma_stabilizer_dim)
from .chamber import (Face, enumerate_faces, face_of, face_relations, levi_roots, make_face, star,
                      star_membership)
from .errors import (ImplodeKitError, InvalidGroupElement, InvalidRootDatum, InvalidSample, NotDominant,
                     NotInChamber, WeylGroupCapExceeded)
from .implosion import (GroupPointSUn, Smoothness, Stratum, classify_smoothness, cone_height,
                        implode_equivalent_su_n, principal_stratum_membership_unp, universal_strata)
from .numgeom import (TangentSample, beta_eval, check_moment_compatibility, check_omega_product_form,
                      check_pullback_one_form, contact_reeb_check, s1_locally_free_check)
from .quantization import (cut_polytope, holomorphic_induct, lr_coefficients_type_a, n_invariants,
                           rr_implosion, tensor_decompose)
from .rootdata import (RootDatum, build_root_datum, custom_root_datum, levi_fundamental_group_order,
                       positive_roots, root_datum_from_json, torus, unitary_group, weight_multiplicities,
                       weyl_dimension, weyl_group, weyl_group_order)

__version__ = "0.1.0"
