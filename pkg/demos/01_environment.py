"""
Reach-avoid workspace: geometry, cost field, dynamics
=====================================================

Walk through the 2D navigation task: a point mass with lagged velocity
tracking must enter a goal disk while staying out of two rectangles.
Produces demos/output/environment.png.
"""

import os

import numpy as np

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib.patches import Circle, Rectangle

from lbac.env2d import Env2D, EnvConfig, make_state

os.makedirs(os.path.join(os.path.dirname(__file__), "output"), exist_ok=True)
out_png = os.path.join(os.path.dirname(__file__), "output", "environment.png")

cfg = EnvConfig()
print("workspace:", cfg.pos_min, "to", cfg.pos_max)
print("goal disk: center", cfg.goal_center, "radius", cfg.goal_radius)
for r in cfg.obstacles:
    print("obstacle rectangle:", r.as_tuple())

# the per-step cost is the weighted distance to the goal, measured at the
# *next* state -- stretching x by a factor 2 in the metric
print("cost at (2, 1.8):", cfg.cost(make_state(2.0, 1.8)))   # worst corner
print("cost at goal center:", cfg.cost(make_state(0.0, 0.5)))

# velocity tracks commanded velocity with a first-order lag
s = make_state(1.5, 0.5)
res = cfg.step(s, np.array([0.25, 0.0]))
print("one step from rest with full push:", res.state, " (vx should be 0.25*dt/tau_v)")

# roll a uniformly random policy until something happens
env = Env2D(cfg, rng=np.random.default_rng(4))
act_rng = np.random.default_rng(5)
trajs = []
for _ in range(12):
    s = env.reset()
    xs = [s.copy()]
    while True:
        a = act_rng.uniform(-cfg.action_limit, cfg.action_limit, 2)
        r = env.step(a)
        xs.append(r.state.copy())
        if r.in_goal or r.in_unsafe or r.truncated:
            break
    trajs.append((np.array(xs), r.in_goal, r.in_unsafe))

# cost heat map on the position grid
gx = np.linspace(cfg.pos_min[0], cfg.pos_max[0], 241)
gy = np.linspace(cfg.pos_min[1], cfg.pos_max[1], 145)
X, Y = np.meshgrid(gx, gy)
pts = np.column_stack([X.ravel(), Y.ravel(), np.zeros(X.size), np.zeros(X.size)])
C = cfg.cost_batch(pts).reshape(X.shape)

fig, ax = plt.subplots(figsize=(8, 4.5))
im = ax.pcolormesh(X, Y, C, shading="auto", cmap="viridis", alpha=0.7)
fig.colorbar(im, ax=ax, label="per-step cost")
for r in cfg.obstacles:
    ax.add_patch(Rectangle((r.x_min, r.y_min), r.x_max - r.x_min, r.y_max - r.y_min,
                           facecolor="firebrick", alpha=0.8))
ax.add_patch(Circle(cfg.goal_center, cfg.goal_radius, facecolor="none",
                    edgecolor="lime", lw=2))
for xs, goal, unsafe in trajs:
    color = "lime" if goal else ("red" if unsafe else "white")
    ax.plot(xs[:, 0], xs[:, 1], color=color, lw=0.8, alpha=0.9)
    ax.plot(xs[0, 0], xs[0, 1], "o", color=color, ms=3)
ax.set_xlim(cfg.pos_min[0], cfg.pos_max[0])
ax.set_ylim(cfg.pos_min[1], cfg.pos_max[1])
ax.set_title("random-walk episodes (green: reached, red: crashed, white: timed out)")
fig.tight_layout()
fig.savefig(out_png, dpi=130)
print("wrote", out_png)
