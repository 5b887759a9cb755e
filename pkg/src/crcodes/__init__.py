"""crcodes: exact-arithmetic construction and verification toolkit for
completely regular codes.

The package is organized around eight layers:

* fieldkit    -- GF(p^r) arithmetic, polynomials, Krawtchouk machinery
* codecore    -- the Code type and the catalog's code transformations
* spectra     -- distance partitions, outer profiles, CR classification
* lloydgate   -- eigenvalue / Lloyd-root / cardinality necessary conditions
* designcheck -- t-design extraction from fixed-weight layers
* atlas       -- the construction catalog with pinned expected arrays
* cosetgraph  -- coset multigraphs and distance-regularity checks
* cli         -- the command-line surface
"""

from .errors import (CatalogError, CRCodesError, DomainError, EmptyCodeError,
                     FormatError, InternalConsistencyError, ResourceError)
from .fieldkit import Field, FieldSpec, field
from .codecore import Code
from .spectra import Classification, IntersectionArray, OuterProfile, PackingParameters

__version__ = "0.1.0"

__all__ = [
    "CatalogError", "CRCodesError", "Classification", "Code", "DomainError",
    "EmptyCodeError", "Field", "FieldSpec", "FormatError",
    "InternalConsistencyError", "IntersectionArray", "OuterProfile",
    "PackingParameters", "ResourceError", "field", "__version__",
]
