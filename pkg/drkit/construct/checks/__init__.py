from .structural import StructuralCheck
from .exhaustive import ExhaustiveCheck
