"""
The orientable double cover
===========================

For a nonorientable source and an orientable target, pass to the kernel of
the source character.  Non-defective classes split into two copies with the
same semi-index.  Defective classes collapse to one class of semi-index 0.
Seeded random instances are a convenient supply of examples.
"""
from nielsen_coincidence import double_orientable_cover, parse_instance, random_instance

shown = 0
for seed in range(60):
    inst = parse_instance(random_instance(seed, max_order=8))
    pair = inst.pair
    if pair.w_M.is_trivial() or not pair.w_N.is_trivial():
        continue
    _, rep = double_orientable_cover(pair, inst.configurations())
    print(f"seed {seed}: N = {rep.nielsen_down}, lifted N = {rep.nielsen_up}, passed = {rep.passed}")
    for e in rep.entries:
        print(f"    class {e.twist}: defective = {e.defective}, s = {e.semi_index} -> {e.lifted}")
    shown += 1
    if shown == 4:
        break
