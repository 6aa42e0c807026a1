"""Input-gradient norms of the MNIST reference models, as histograms.

Run after ``reproduce_mnist.py``.  For every seed it computes the per-example
norm of the loss gradient with respect to the input over the test set, for
the weight-decay model and the invariant-regularizer model, writes one CSV
histogram per model, and reports how much of each distribution lies above
the 90th percentile of the weight-decay model.  Smaller gradients mean a
locally flatter loss, which is what a small perturbation budget exploits.

    python demos/gradient_histograms.py [reference_root]
"""

import os
import sys
from pathlib import Path

import numpy as np

from weissi.analysis import grad_norm_histogram, tail_comparison
from weissi.data import load_mnist
from weissi.experiment import load_summary, load_trained

root = Path(sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.environ.get("WEISSI_OUTPUT_ROOT", "runs"), "reference"))
test = load_mnist("test")
seeds = sorted(set(load_summary(root / "mlp-wd")["seeds"]) & set(load_summary(root / "mlp-weissi")["seeds"]))
for seed in seeds:
    reports = {}
    for name in ("mlp-wd", "mlp-weissi"):
        net, _ = load_trained(root / name, seed)
        reports[name] = grad_norm_histogram(net, test, bins=50)
        out = root / name / f"seed_{seed}" / "grad_norm_hist.csv"
        reports[name].to_csv(out)
        s = reports[name].summary()
        print(f"seed {seed} {name:<11} median {s['median']:.4f}  mean {s['mean']:.4f}  max {s['max']:.2f}  -> {out}")
    cmp = tail_comparison(reports["mlp-weissi"].norms, reports["mlp-wd"].norms, 0.9)
    print(
        f"seed {seed} above the WD 90th percentile ({cmp['threshold']:.4f}):"
        f" WEISSI {cmp['candidate_tail_mass']:.3f}, WD {cmp['reference_tail_mass']:.3f}"
    )
    print(f"seed {seed} median ratio WEISSI/WD {np.median(reports['mlp-weissi'].norms) / np.median(reports['mlp-wd'].norms):.3f}")
