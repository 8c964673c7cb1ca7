"""Exact-arithmetic invariants for glued compact Spin(7)-manifolds."""
from .cayley import Form, LinearMap8, make_cayley_form, pullback, wedge
from .chern import branched_euler, euler_ci, euler_wps
from .cohomology import HodgeDiamond, hypersurface_hodge, surface_from_chi_h02
from .errors import (ClassificationError, DegeneratePartialError, InconsistencyError, ScenarioError,
                     StageError, TruncationError, UnsupportedStratumError)
from .pipeline import BlockInvariants, GluingReport, Holonomy, Stage
from .scenarios import Report, Scenario, emit, load_scenario, run
from .series import RationalSeriesSpec, expand
from .wps import Weights

__version__ = "0.1.0"
