"""
Certifying a trained policy/critic pair
=======================================

Three numeric checks back the safety story:

  1. the terminal-cost floor: C must exceed c_max * (1 - gamma^N) / gamma^N,
     otherwise an unsafe tuple could look cheaper than a long safe detour;
  2. the expected-decrease condition along on-policy rollouts, with a
     bootstrap interval so noise cannot fake a pass;
  3. level separation at the rewrite cost: safe starts should sit below
     V = c_hat, states inside the obstacles above it.

If a finished run exists under runs/desk/seed0 we certify that; otherwise
we train a small policy here (a few minutes) and certify it, in which case
the decrease/separation numbers will be unimpressive -- the point is the
plumbing, not the policy.

Produces demos/output/certification.png (value field + c_hat contour).
"""

import os

import numpy as np

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from lbac import certify
from lbac.config import RunConfig, load_run_config
from lbac.env2d import Env2D
from lbac.nets import load_params
from lbac.training import TrainConfig, train

here = os.path.dirname(__file__)
os.makedirs(os.path.join(here, "output"), exist_ok=True)
out_png = os.path.join(here, "output", "certification.png")

run_dir = os.path.join(here, "..", "runs", "desk", "seed0")
if os.path.exists(os.path.join(run_dir, "policy.json")):
    print("using trained run:", run_dir)
    cfg = load_run_config(os.path.join(run_dir, "config.yaml"))
    theta = load_params(os.path.join(run_dir, "policy.json"))
    phi = load_params(os.path.join(run_dir, "critic.json"))
else:
    print("no finished run found, training a small policy instead")
    cfg = RunConfig()
    tc = TrainConfig(
        episodes_total=150,
        warm_start_episodes=50,
        grad_steps_per_episode=20,
        batch=128,
        hidden_dims=(64, 64),
        seed=3,
        stop_on_decrease=False,
    )
    result = train(Env2D(cfg.env), tc)
    theta, phi = result.theta, result.phi

env_cfg = cfg.env

# -- check 1: terminal-cost floor -------------------------------------------
lem = certify.lemma1_report(
    env_cfg, cfg.train.gamma, env_cfg.max_steps, cfg.train.C
)
print(
    f"cost bound:  c_max={lem.c_max:.4f}  min_C={lem.min_C:.4f}  "
    f"C={lem.configured_C:.0f}  satisfied={lem.satisfied}"
)

# -- check 2: expected decrease on rollouts ---------------------------------
rep = certify.check_decrease(theta, phi, env_cfg, n_rollouts=20, seed=11)
print(
    f"decrease:    lhs={rep.lhs_estimate:.4g}  rhs={rep.rhs:.4g}  "
    f"ci_halfwidth={rep.ci_halfwidth:.4g}  satisfied={rep.satisfied}"
)

# -- check 3: level separation at c_hat -------------------------------------
sep = certify.check_level_separation(
    theta, phi, env_cfg, seed=12, c_hat=cfg.train.c_hat
)
print(
    f"separation:  safe<c_hat {sep.safe_below_rate:.2f} (n={sep.n_safe})  "
    f"unsafe>c_hat {sep.unsafe_above_rate:.2f} (n={sep.n_unsafe})"
)

# -- picture: value field at rest, with the c_hat level set -----------------
data = certify.export_contour(theta, phi, env_cfg, level=cfg.train.c_hat)
fig, ax = plt.subplots(figsize=(8, 4.5))
mesh = ax.pcolormesh(
    data.xs, data.ys, np.log10(np.maximum(data.values, 1e-3)), shading="auto"
)
fig.colorbar(mesh, ax=ax, label="log10 V")
for poly in data.polylines:
    ax.plot(poly[:, 0], poly[:, 1], "w-", lw=1.5)
for rect in env_cfg.obstacles:
    ax.add_patch(
        plt.Rectangle(
            (rect.x_min, rect.y_min),
            rect.x_max - rect.x_min,
            rect.y_max - rect.y_min,
            fill=False,
            edgecolor="red",
            lw=1.2,
        )
    )
ax.add_patch(
    plt.Circle(env_cfg.goal_center, env_cfg.goal_radius, fill=False, color="lime")
)
ax.set_xlim(env_cfg.pos_min[0], env_cfg.pos_max[0])
ax.set_ylim(env_cfg.pos_min[1], env_cfg.pos_max[1])
ax.set_aspect("equal")
ax.set_title("critic value at zero velocity; white = c_hat level set")
fig.tight_layout()
fig.savefig(out_png, dpi=130)
print("wrote", out_png)
