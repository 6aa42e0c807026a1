"""Which half of the invariant regularizer does what, on a toy problem.

Trains the custom MLP preset on synthetic Gaussian blobs four times: weight
decay, the full invariant regularizer, energy only, and complexity only.
The energy term shrinks the product of layer norms; the complexity term,
an L1 norm of the unit-normalised weights, pushes weights towards zero and
raises sparsity.  The energy enters in log form: at He initialisation the
raw product of squared norms is about 1e5 here, and its gradient would
swamp the data term.  Runs take a few seconds each.

    python demos/ablation_toy.py [output_root]
"""

import os
import sys

from weissi.attacks import AttackConfig
from weissi.experiment import ExperimentConfig, load_trained, run_experiment
from weissi.regularizers import RegularizerConfig
from weissi.train import TrainConfig, sparsity

root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.environ.get("WEISSI_OUTPUT_ROOT", "runs"), "ablation-toy")
variants = {
    "wd": RegularizerConfig("wd", lambda_wd=1e-3),
    "weissi": RegularizerConfig("weissi_log", lambda_e=0.1, lambda_c=2e-3),
    "energy-only": RegularizerConfig("weissi_log", lambda_e=0.1, lambda_c=0.0),
    "complexity-only": RegularizerConfig("weissi_log", lambda_e=0.0, lambda_c=2e-3),
}
print(f"{'variant':<16} {'label':<28} {'clean':>6} {'pgd@0.2':>8} {'energy':>10} {'complexity':>10} {'sparsity':>8}")
for name, reg in variants.items():
    cfg = ExperimentConfig(
        preset="custom",
        sizes=(16, 64, 64, 4),
        train=TrainConfig(epochs=20, batch_size=50, lr=0.05, lr_decay=(15, 0.1), reg=reg),
        attack_suite=(AttackConfig("pgd", 0.2, 10),),
        output_dir=os.path.join(root, name),
        seeds=(0,),
    )
    s = run_experiment(cfg)
    net, tlog = load_trained(cfg.output_dir, 0)
    last = tlog.records[-1]
    print(
        f"{name:<16} {s['regularizer']:<28} {s['mean']['clean']:6.3f} {s['mean']['pgd10@0.2']:8.3f}"
        f" {last.energy:10.3g} {last.complexity:10.2f} {sparsity(net, 1e-3):8.3f}"
    )
