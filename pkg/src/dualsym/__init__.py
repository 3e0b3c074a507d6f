"""The inverse partition semigroup IP_n (the dual symmetric inverse monoid)
and its ambient composition semigroup CS_n."""

from .partition import (DegreeError, Equivalence, ParseError, Partition, Point,
                        identity, is_ip, lam, multiply, parse, rank, rank_checked,
                        rho, serialize, star, zero)
from .inverse import (UNDEFINED, green_D, green_H, green_J, green_L, green_R,
                      idempotent_meet, imprint_product, is_idempotent, natural_leq,
                      trace_product)
from .generators import (Permutation, eta, in_iop, is_special, tau, upsilon, xi, zeta)
from .enumeration import (BoundError, ClosureTable, bell, close, enumerate_cs,
                          enumerate_ip, ideal, stirling2)

__version__ = "0.1.0"
