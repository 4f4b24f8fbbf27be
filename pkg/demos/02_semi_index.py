"""
Semi-index of a coincidence class
=================================

Each coincidence point in a class carries a group element label.  Two
points may cancel when their relative sign is -1.  In a defective class any
two points cancel, so only the parity survives.
"""
import itertools

from nielsen_coincidence import ClassConfiguration, CoincidencePair, decompose
from nielsen_coincidence import make_character, make_hom, nielsen_number, reidemeister_classes
from nielsen_coincidence import semi_index
from nielsen_coincidence.catalog import cyclic
from nielsen_coincidence.groups import trivial_character

Z4, Z2 = cyclic(4), cyclic(2)
mod2 = make_hom(Z4, Z2, [0, 1, 0, 1])
alt = make_character(Z4, [1, -1, 1, -1])

# f = g = mod 2: one class per element of Z/2, each with stabilizer Z/4
pair = CoincidencePair(mod2, mod2, alt, trivial_character(Z2))
classes = reidemeister_classes(pair)
print("defective:", [c.defective for c in classes])

for n in range(1, 5):
    values = {semi_index(ClassConfiguration(pair, classes[0], labels))
              for labels in itertools.product(range(4), repeat=n)}
    print(f"{n} points -> semi-index {sorted(values)}")

# Now a pair whose classes are not defective.  Take f = mod 2 and g
# constant: stabilizers are the kernel {0, 2}, where the character is +1.
const = make_hom(Z4, Z2, [0, 0, 0, 0])
pair = CoincidencePair(mod2, const, alt, trivial_character(Z2))
[cls] = reidemeister_classes(pair)
cfg = ClassConfiguration(pair, cls, [0, 1, 2, 0, 3])
print("signs", cfg.signs(), "->", decompose(cfg), "semi-index", semi_index(cfg))
print("Nielsen number:", nielsen_number([cfg]))
