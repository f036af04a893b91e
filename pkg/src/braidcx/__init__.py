"""Braid-group invariants of finite simplicial complexes.

The main entry points are ``h1_braid`` (H1 of the braid group with a
certificate), ``verdict`` (circle / surface / plane with witnesses) and the
cube-complex oracle in ``braidcx.oracle``.
"""

__version__ = "0.1.0"

from .complex import SimplicialComplex, parse_complex, read_complex  # noqa: E402
from .homology import h1_braid, h1_space  # noqa: E402
from .smith import AbelianInvariants  # noqa: E402
from .verdicts import crosscheck, verdict  # noqa: E402

__all__ = [
    "AbelianInvariants",
    "SimplicialComplex",
    "crosscheck",
    "h1_braid",
    "h1_space",
    "parse_complex",
    "read_complex",
    "verdict",
]
