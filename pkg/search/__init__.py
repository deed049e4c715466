from .exhaustive import SearchSpec, enumerate_balanced
from .oracles import perturb, random_invertible
