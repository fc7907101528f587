"""Miniature end-to-end training loop: a handful of expert demos, a few
hundred optimizer steps on the desk preset, loss printed as it falls.

This is a smoke demo, not the published pipeline; see configs/endtoend.json
and driftgrasp.pipeline for the full run.

    python3 demos/train_small_policy.py
"""

import tempfile

from driftgrasp.container import Dataset
from driftgrasp.expert import generate_dataset
from driftgrasp.policy import PolicyConfig
from driftgrasp.sim import ScenarioConfig
from driftgrasp.train import train

workdir = tempfile.mkdtemp(prefix="driftgrasp_demo_")
print(f"writing demo episodes to {workdir} ...")
generate_dataset(6, ScenarioConfig(kind="standard"), seed=42, out_dir=workdir)

dataset = Dataset(workdir)
cfg = PolicyConfig.desk()


def show(step, losses, elapsed):
    total, l1, kl = losses
    print(f"  step {step:4d}  loss {total:.4f}  (l1 {l1:.4f}, kl {kl:.2e})  "
          f"{elapsed:.0f}s")


print("training the desk preset for 300 steps ...")
model, normalizer, curve = train(dataset, cfg, seed=0, steps=300,
                                 batch_size=4, log_every=50, progress=show)
totals = [c[0] for c in curve]
first = sum(totals[:50]) / 50
last = sum(totals[-50:]) / 50
print(f"mean loss over first 50 steps {first:.3f}, over last 50 {last:.3f}")
