from . import rational
from . import bilaurent
from . import xpoly
from . import series
from . import qcalc
from . import hypergeometric
