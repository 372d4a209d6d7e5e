"""Engine version used in cache keys and output records.

Bump whenever the pipeline or the canonical serialization changes in a way
that could alter cached polynomials byte-wise.
"""

ENGINE_VERSION = "1"
