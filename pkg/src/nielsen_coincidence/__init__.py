"""Nielsen coincidence classes, semi-index and covering lifts over finite groups."""
from .groups import (
    FiniteGroup, Homomorphism, OrientationCharacter, Subgroup, center, enumerate_homs,
    equalizer, is_normal, make_character, make_group, make_hom, quotient,
    subgroup_closure, twisted_equalizer,
)
from .classes import (
    CoincidencePair, MapType, ReidemeisterClass, center_propagation_check,
    combined_character, is_defective, orientation_type, reidemeister_classes,
    verify_root_theorems,
)
from .semiindex import ClassConfiguration, decompose, nielsen_number, relative_sign, semi_index
from .covering import (
    RegularCovering, check_liftable, double_orientable_cover, fiber_equalizer,
    induced_pair, lift_formula, lift_oracle, lift_report, lifted_class_partition,
    upstairs_defective,
)
from .instance import Instance, emit_instance, parse_instance, random_instance

__version__ = "0.1.0"
