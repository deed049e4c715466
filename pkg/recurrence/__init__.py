from .int_poly import IntPoly, PolyPair
from .roots import RootGrid, model_configuration, t_grid, t_value, wn_equation_roots
from .sequences import ParityVerdict, RecurrenceVariant, check_parity_degrees, numeric_sequences, symbolic_sequences
from .sturm import count_roots, isolate_real_roots, sturm_chain
