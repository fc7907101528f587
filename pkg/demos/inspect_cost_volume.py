"""Visual sanity check of the all-pairs cost volume: slide a bright blob
one feature cell per frame and watch the per-cell argmax recover the
displacement field as text.

    python3 demos/inspect_cost_volume.py
"""

import numpy as np

import driftgrasp.tensor as T
from driftgrasp.correlation import build_cost_volume

H, W, D = 6, 8, 16
rng = T.make_rng(3, 0)

# a distinct random descriptor per cell; the "previous" frame is the
# current one cyclically shifted right by one column
feat_prev = rng.standard_normal((H, W, D))
feat_t = np.roll(feat_prev, 1, axis=1)

with T.no_grad():
    cv = build_cost_volume(feat_t, feat_prev).data

print(f"cost volume shape {cv.shape} (H, W, H, W)")
print("per-cell best match, displayed as dx of the winning source column:")
for i in range(H):
    row = []
    for j in range(W):
        k, l = np.unravel_index(np.argmax(cv[i, j]), (H, W))
        row.append(f"{(j - l) % W:+d}".replace("+0", " 0"))
    print("   " + " ".join(row))
print("every cell should report +1: content moved one column to the right")
