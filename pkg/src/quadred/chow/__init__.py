"""Intersection-theory engine: presented Chow rings, bundle calculus,
Riemann-Roch, and symmetric degeneracy classes."""

from .bundle import (BundleClass, adams, bundle_from_chern, bundle_from_sequence,
                     c_top, chern_classes, det, dual, exp_class, line_bundle,
                     sym, tensor, trivial, twist, wedge)
from .degeneracy import symmetric_degeneracy_class, symmetric_degeneracy_count
from .hrr import (SurfaceInvariants, chi_sheaf, nodal_cover_invariants,
                  surface_invariants, todd_class)
from .ring import ChowClass, ChowRing
from .scene import (Scene, flag_bundle, integral, point, product,
                    projective_space, pullback, pullback_class,
                    section_zero_locus)
from .scenes import (DEGENERACY_NAMES, SCENE_NAMES, degeneracy_example,
                     grassmannian_2_4, quadric_threefold, scene, sigma1)

__all__ = [
    "BundleClass", "adams", "bundle_from_chern", "bundle_from_sequence",
    "c_top", "chern_classes", "det", "dual", "exp_class", "line_bundle",
    "sym", "tensor", "trivial", "twist", "wedge",
    "symmetric_degeneracy_class", "symmetric_degeneracy_count",
    "SurfaceInvariants", "chi_sheaf", "nodal_cover_invariants",
    "surface_invariants", "todd_class",
    "ChowClass", "ChowRing",
    "Scene", "flag_bundle", "integral", "point", "product",
    "projective_space", "pullback", "pullback_class", "section_zero_locus",
    "DEGENERACY_NAMES", "SCENE_NAMES", "degeneracy_example",
    "grassmannian_2_4", "quadric_threefold", "scene", "sigma1",
]
