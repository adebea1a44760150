#
# E Q = q Q E.
#

"""
The `qrecur` q-Recursion Library
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

Exact linear q-recursions for colored Jones functions, written in Python,
and a check of the AJ conjecture for the trefoil and the figure-eight knot.

Basic usage:

   >>> import qrecur
   >>> print(qrecur.colored_jones("3_1", 2))
   q + q^3 - q^4
   >>> result = qrecur.find_recursion("3_1")
   >>> result.order      # the telescoping order, i.e. 1
   >>> result.recursion  # the homogeneous recursion, of order 2

The verdict on the AJ conjecture:

   >>> verdict = qrecur.aj_verdict("4_1")
   >>> verdict.essentially_equal
   True
   >>> verdict.order
   3

:copyright: (c) 2018 by Andrew Grant Spencer.
:license: BSD, see LICENSE for more details.
"""

from .ajverify import aj_verdict, characteristic_poly, essential_equality
from .models import Knot, get_knot
from .ore import OreOp, normalize
from .qseries import colored_jones, term_ratios
from .telescope import find_recursion, qgosper, qzeilberger
