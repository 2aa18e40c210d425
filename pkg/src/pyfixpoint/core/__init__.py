from pyfixpoint.core.element import Element, FiniteIndex, Scalar, element_key, make_rng, pack, unpack
from pyfixpoint.core.functions import ControlFunction, FiniteMap, ScalarMap, SelfMap
from pyfixpoint.core.instance import ProblemInstance
from pyfixpoint.core.order import FiniteOrder, PartialOrder, PredicateOrder
from pyfixpoint.core.space import FiniteSpace, IntervalSpace, PartialMetricSpace

__all__ = [
    "ControlFunction",
    "Element",
    "FiniteIndex",
    "FiniteMap",
    "FiniteOrder",
    "FiniteSpace",
    "IntervalSpace",
    "PartialMetricSpace",
    "PartialOrder",
    "PredicateOrder",
    "ProblemInstance",
    "Scalar",
    "ScalarMap",
    "SelfMap",
    "element_key",
    "make_rng",
    "pack",
    "unpack",
]
