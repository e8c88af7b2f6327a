"""Exact invariants of the K(l,m,n,p) family of Seifert fibered surgeries.

Rational tangles and their fractions, the Seifert spaces obtained as double
branched covers of Montesinos links, the closed-form surgery slopes of the
family, and the twist paths that reach each surgery from a trefoil surgery.
"""

from .errors import ConstraintError, DegeneratePointError, DomainError
from .exactfrac import INF, ExtFrac, cf_eval, cf_expand
from .family import FamilyParams, montesinos_fractions, surgery_slope, tangle_sequences
from .network import SurgeryVertex, Target, TwistStep, path_from_trefoil, realize_path, start_vertex
from .seifert import INFINITE, Base, SeifertSpace, h1_order, normalize
from .tangle import HomologyClass, RationalTangle, covering_slope, meridian_lift

__version__ = "0.1.0"
