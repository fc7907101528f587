"""Roll out the scripted interception expert on one episode and print
the safety metrics that the success judgment looks at.

Run from the repository root:

    python3 demos/run_expert_episode.py [seed]
"""

import sys

import numpy as np

from driftgrasp.expert import ExpertController
from driftgrasp.metrics import SafetyLimits, judge_success
from driftgrasp.rollout import run_episode
from driftgrasp.sim import ScenarioConfig

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 11

scenario = ScenarioConfig(kind="standard")
result = run_episode(lambda world, sc: ExpertController(world, sc),
                     scenario, ep_seed=seed)
log = result.log

record = judge_success(log, SafetyLimits())
t_capture = log.captured_step * log.dt if log.captured_step >= 0 else None
t_halt = log.halted_step * log.dt if log.halted_step >= 0 else None

print(f"episode seed {seed} ({scenario.kind}, {log.joints.shape[0]} steps)")
print(f"  captured at t = {t_capture} s, halted at t = {t_halt} s")
print(f"  MASD per joint      {np.round(record.masd, 4)} rad/s^2")
print(f"  RMS jerk per joint  {np.round(record.rms_jerk, 3)} rad/s^3")
print(f"  success: {record.success} "
      f"({record.failure_reason or 'all gates passed'})")
