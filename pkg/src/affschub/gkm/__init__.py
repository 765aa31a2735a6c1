"""Localization models of equivariant K-theory and cohomology of the affine flag variety."""
from .classes import (LocalizedClass, SchubertTable, TheoryMismatch, TruncationError, act, act_tensor,
                      bullet_coeff, bullet_generator, bullet_group, class_from_json, constant_class, cup,
                      dot_coeff, dot_generator, dot_group, endo, from_values, ideal_sheaf_class,
                      ideal_sheaf_value, line_bundle_class, localize_interval, schubert_class, schubert_table, schubert_value)
from .coproduct import (VARIANTS, CoproductReport, DivisorReport, NoFactorizationFormula, NotCosetInvariant,
                        coproduct_terms,
                        expand_grassmannian, grassmannian_elements, verify_coproduct, verify_divisor)
from .peterson import (PetersonResult, commutator_with_weight, exact_radius, peterson_assemble,
                       peterson_coefficient)
from .recursion import (RecursionReport, TensorClass, path_from_grassmannian, rebuild, verify_recursion)
from .operators import OperatorReport, OperatorSuite, verify_operators
