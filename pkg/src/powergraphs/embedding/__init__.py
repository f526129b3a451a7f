"""Surface embeddings: planarity, face tracing and bounded genus search."""

from .genus import (
    Budget,
    Decision,
    GenusResult,
    euler_genus_at_most,
    is_projective,
    is_toroidal,
    nonorientable_genus,
    orientable_genus,
    orientable_genus_at_most,
)
from .planarity import is_outerplanar, is_planar, kuratowski_subgraph
from .scheme import EmbeddingScheme, FaceTrace, MalformedScheme, face_trace

__all__ = [
    "Budget",
    "Decision",
    "EmbeddingScheme",
    "FaceTrace",
    "GenusResult",
    "MalformedScheme",
    "euler_genus_at_most",
    "face_trace",
    "is_outerplanar",
    "is_planar",
    "is_projective",
    "is_toroidal",
    "kuratowski_subgraph",
    "nonorientable_genus",
    "orientable_genus",
    "orientable_genus_at_most",
]
