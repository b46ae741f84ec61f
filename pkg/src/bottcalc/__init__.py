"""Exact cohomology calculators for Grassmannians and their Pluecker cones.

Submodules:
  weights            integer weight tuples, staircase sort, exponent strings
  schur              GL dimensions, Littlewood-Richardson, fixed decompositions
  root_systems       classical root data, coroot pairings, Weyl dimensions
  bott_grassmannian  twisted-bundle cohomology on G(r, n)
  bott_isotropic     the same on LG/OG spaces, plus classification scans
  reference_tables   bundled pairing-value catalog and its verification
  cotangent_oracle   exact linear algebra on the four-term complex
  acceptance         the end-to-end verification suite
  cli                command-line interface
"""

from .bott_grassmannian import BundleSpec, CohomologyAnswer, bott_evaluate, o_bundle, theta_bundle
from .bott_isotropic import IsoGrassmannian
from .cotangent_oracle import PlueckerOracle
from .schur import SchurDecomposition, gl_dimension, littlewood_richardson, tensor_decompose
from .weights import parse_weight, render_weight, sort_with_inversions, staircase, tilde

__all__ = [
    "BundleSpec",
    "CohomologyAnswer",
    "IsoGrassmannian",
    "PlueckerOracle",
    "SchurDecomposition",
    "bott_evaluate",
    "gl_dimension",
    "littlewood_richardson",
    "o_bundle",
    "parse_weight",
    "render_weight",
    "sort_with_inversions",
    "staircase",
    "tensor_decompose",
    "theta_bundle",
    "tilde",
]

__version__ = "0.1.0"
