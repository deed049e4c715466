from .configuration import (
    Configuration,
    LabeledConfiguration,
    cyclic_index,
    det_tolerance,
    label_by_increasing_arguments,
    roots_of_unity,
)
from .vector import ArithmeticMode, PlaneVector, Scalar, argument, as_scalar, det2
