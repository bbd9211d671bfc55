"""Finite-model workbench for BCK-algebras."""

from bckbench.core import (
    AxiomViolation,
    BckError,
    CanonicalForm,
    FiniteBckAlgebra,
    FormatError,
    LAWS,
    OrderRelation,
    RangeError,
    SizeGuardExceeded,
    builtin,
    canonical_form,
    find_embeddings,
    load_algebra,
    loads_algebra,
    order,
    validate,
)

__version__ = "0.1.0"
