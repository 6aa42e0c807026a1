"""Equivalent networks, and why weight decay cannot tell them apart fairly.

A ReLU network keeps its function when one layer's weights are multiplied by
gamma and another's divided by it.  This script builds a small MLP, shifts
its weight scale around, and shows which quantities notice:

* the outputs do not change,
* weight decay does, and can be lowered for free by moving to the balanced shift,
* the invariant energy and complexity terms do not,
* the canonical form (unit-norm layers plus one scalar energy) is the same for
  every member of the equivalence class.

    python demos/scale_shift_tour.py
"""

import numpy as np

from weissi import layers as L
from weissi import regularizers as R
from weissi.scale_shift import ScaleShift, apply_shift, canonicalize, check_equivalence, minimized_wd, shift_keys

rng = np.random.default_rng(0)
net = L.init(L.mlp([8, 16, 16, 4]), "he", seed=0)
for p in net.params:
    if "b" in p:
        p["b"] = rng.normal(0, 0.1, size=p["b"].shape)

shift = ScaleShift((4.0, 0.5, 0.5))
twin = apply_shift(net, shift)
print("gammas:", shift.gammas)
print(f"max output difference over 100 inputs: {check_equivalence(net, twin).max_abs_diff:.2e}")

print("\n              original      shifted")
print(f"weight decay  {R.wd(net):10.4f}  {R.wd(twin):10.4f}")
for name, fn in (("energy", R.weissi), ("log energy", R.weissi_log)):
    a, b = fn(net, 1, 1), fn(twin, 1, 1)
    print(f"{name:<13} {a.energy_term:10.4f}  {b.energy_term:10.4f}")
print(f"complexity    {R.complexity(net):10.4f}  {R.complexity(twin):10.4f}")

norms_sq = [float(np.sum(w * w)) for w in net.weights()]
best, gammas = minimized_wd(norms_sq)
balanced = apply_shift(net, gammas)
print(f"\nweight decay can drop from {R.wd(net):.4f} to {best:.4f} without changing the function;")
print("after the optimal shift every layer has squared norm", np.round([np.sum(w * w) for w in balanced.weights()], 6))

a, b = canonicalize(net), canonicalize(twin)
gap = max(np.max(np.abs(x - y)) for x, y in zip(a.normalized_weights, b.normalized_weights))
print(f"\ncanonical energy {a.energy:.6f} vs {b.energy:.6f}; largest weight difference {gap:.1e}")
for layer in range(len(shift_keys(net))):
    diff = check_equivalence(net, a.reassemble(layer)).max_abs_diff
    print(f"  energy routed to layer {layer}: output difference {diff:.1e}")
