from .canonical import CanonicalForm, Equivalence, canonicalize, extract_t, frame_deviation, gl2_equivalent, match_k
from .linear_map import LinearMap2, apply_map, frame_map
from .reconstruct import reconstruct_from_triple
