from .utils.bilaurent import BiLaurent, ONE, Q, Y, ZERO
from .utils.xpoly import XPoly
from .permstats import Permutation, BlockSpec, class_polynomial
from .polynomials import ASCParams, laguerre_poly, asc_Q
from .moments import moment_table, functional_apply
from .linearization import linearize
from .config import Config
