"""Expert robustness sweep: success over a grid of arm start-pose offsets
with the raised target-speed floor, printed as an ASCII grid.

    python3 demos/montecarlo_grid.py
"""

import numpy as np

from driftgrasp.expert import ExpertController
from driftgrasp.metrics import judge_success
from driftgrasp.rollout import run_episode
from driftgrasp.sim import ScenarioConfig

grid = (3, 3)
extent = (0.05, 0.05)      # meters, longitudinal x lateral
per_cell = 3

print("success counts per start-offset cell (rows: x offset, cols: y offset)")
xs = np.linspace(-extent[0], extent[0], grid[0])
ys = np.linspace(-extent[1], extent[1], grid[1])
for ix, dx in enumerate(xs):
    cells = []
    for iy, dy in enumerate(ys):
        scenario = ScenarioConfig(kind="standard", home_offset=(dx, dy))
        wins = 0
        for e in range(per_cell):
            seed = 7000 + 100 * (ix * grid[1] + iy) + e
            res = run_episode(lambda w, sc: ExpertController(w, sc),
                              scenario, ep_seed=seed, monte_carlo=True)
            wins += judge_success(res.log).success
        cells.append(f"{wins}/{per_cell}")
    print(f"  x={dx:+.2f}: " + "  ".join(cells))
