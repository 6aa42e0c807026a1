"""Train the three MNIST reference configurations and print their summaries.

Two standard-training runs (weight decay versus the invariant regularizer)
plus adversarial training at radius 0.01 with weight decay; three seeds each,
60 epochs.  Seeds are interleaved so matched-seed comparisons are
available early.  Finished seeds are reused, so the script can be interrupted
and restarted.  Expect several hours on one core.

    python demos/reproduce_mnist.py [output_root]
"""

import json
import logging
import os
import sys

from weissi.experiment import load_data, reference_runs, run_experiment, run_seed

logging.basicConfig(level=logging.INFO, format="%(asctime)s %(name)s %(message)s")

root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.environ.get("WEISSI_OUTPUT_ROOT", "runs"), "reference")
runs = reference_runs(root)
data = load_data(next(iter(runs.values())))

for seed in (0, 1, 2):
    for name, cfg in runs.items():
        logging.info("=== %s seed %d", name, seed)
        run_seed(cfg, seed, data)

for name, cfg in runs.items():
    s = run_experiment(cfg)
    print(name, json.dumps({"mean": s["mean"], "std": s["std"]}, indent=1))
