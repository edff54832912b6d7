"""
Where the certificate-filter baseline gets stuck
================================================

The baseline controller tracks a hand-written quadratic reach certificate
with a nominal proportional law, then filters the action through a small
QP: stay on the certificate's decrease direction (softened by a slack)
while respecting a hard distance-margin constraint around each obstacle.

Solved pointwise, the two one-step conditions can fight: behind an
obstacle the decrease direction points straight into the margin boundary,
the barrier rows veto it, and the filtered action collapses to (nearly)
zero. The controller parks. Starts with a clear line to the goal are fine.

This runs the 5x5 start grid and draws both behaviours. Produces
demos/output/qp_conflict.png.
"""

import os

import numpy as np

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from lbac.env2d import EnvConfig
from lbac.qp_baseline import QpControllerConfig, baseline_grid, baseline_rollout

here = os.path.dirname(__file__)
os.makedirs(os.path.join(here, "output"), exist_ok=True)
out_png = os.path.join(here, "output", "qp_conflict.png")

env_cfg = EnvConfig()
qp_cfg = QpControllerConfig()

runs, summary = baseline_grid(qp_cfg, env_cfg)
print(
    f"{summary['n']} starts: {summary['n_reach']} reach, "
    f"{summary['n_stall']} stall, {summary['n_violation']} violate"
)

# the canonical conflict start: dead behind the right obstacle on the
# goal's symmetry axis, so the decrease direction has no sideways component
stall = baseline_rollout((1.4, 0.5, 0.0, 0.0), qp_cfg, env_cfg)
print(
    f"start (1.4, 0.5): stalled={stall.stalled} "
    f"final goal distance {stall.final_goal_distance:.3f}"
)
assert stall.stalled and not stall.violated

fig, ax = plt.subplots(figsize=(8, 4.5))
for rect in env_cfg.obstacles:
    ax.add_patch(
        plt.Rectangle(
            (rect.x_min, rect.y_min),
            rect.x_max - rect.x_min,
            rect.y_max - rect.y_min,
            color="0.75",
        )
    )
    ax.add_patch(
        plt.Rectangle(
            (rect.x_min - qp_cfg.margin, rect.y_min - qp_cfg.margin),
            rect.x_max - rect.x_min + 2 * qp_cfg.margin,
            rect.y_max - rect.y_min + 2 * qp_cfg.margin,
            fill=False,
            edgecolor="0.4",
            ls="--",
            lw=0.8,
        )
    )
ax.add_patch(
    plt.Circle(env_cfg.goal_center, env_cfg.goal_radius, fill=False, color="green")
)
for run in runs:
    if run.violated:
        continue  # grid point inside an obstacle, nothing to draw
    p = run.log.states[:, :2]
    color = "tab:red" if run.stalled else "tab:blue"
    ax.plot(p[:, 0], p[:, 1], color=color, lw=0.9, alpha=0.8)
    ax.plot(p[0, 0], p[0, 1], ".", color=color, ms=5)
p = stall.log.states[:, :2]
ax.plot(p[:, 0], p[:, 1], "k-", lw=1.8, label="conflict start (1.4, 0.5)")
ax.plot([], [], "tab:blue", label="reaches goal")
ax.plot([], [], "tab:red", label="stalls")
ax.legend(fontsize=8, loc="upper right")
ax.set_xlim(env_cfg.pos_min[0], env_cfg.pos_max[0])
ax.set_ylim(env_cfg.pos_min[1], env_cfg.pos_max[1])
ax.set_aspect("equal")
ax.set_title("pointwise certificate filtering: reach vs stall")
fig.tight_layout()
fig.savefig(out_png, dpi=130)
print("wrote", out_png)
