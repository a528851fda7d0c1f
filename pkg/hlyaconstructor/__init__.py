"""
The initialization of HLYAConstructor.
Import the modules you need, e.g. import hlyaconstructor.Algebra
"""
__version__ = "0.1.0"

#from Algebra import HlyAlgebra
#from Axioms import check_axioms
#from Subobjects import center, derived


__all__ = ["Fields", "LinAlg", "Methods", "Algebra", "Axioms", "Subobjects", "Morphisms",
           "Constructions", "Isoclinism", "Fixtures", "Certificate", "Commands", "Settings", "Timer"]
