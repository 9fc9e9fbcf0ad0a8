"""A Python package to measure the entanglement of two-qubit states.

The package computes the modified relative entropy of entanglement, which replaces the
separable state of the relative entropy of entanglement by the mixture of the relative states
of the members of a pure-state ensemble and minimizes over ensembles. It also provides the
entanglement of formation, the positive partial transpose test and the closed forms of the
Werner and extended Werner families.
"""

__all__: list[str] = []
