"""
A short training run, end to end
================================

Runs the full loop at toy scale (small nets, few episodes) just to watch
the moving parts: warm start with the barrier multiplier frozen, then the
constrained phase where lambda starts adapting. Takes a minute or two.
Produces demos/output/training_smoke.png.

For a real run use the command line instead:

    python3 -m lbac train --config configs/desk.yaml --out runs/mine
"""

import os

import numpy as np

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from lbac.env2d import Env2D, EnvConfig
from lbac.training import TrainConfig, train

os.makedirs(os.path.join(os.path.dirname(__file__), "output"), exist_ok=True)
out_png = os.path.join(os.path.dirname(__file__), "output", "training_smoke.png")

cfg = TrainConfig(
    episodes_total=60,
    warm_start_episodes=20,
    grad_steps_per_episode=10,
    batch=64,
    hidden_dims=(64, 64),
    seed=1,
    stop_on_decrease=False,
)
env = Env2D(EnvConfig(max_steps=120))

rows = []
result = train(env, cfg, lambda m, state: rows.append(m))
print(f"ran {result.episodes_run} episodes, buffer holds {len(result.buffer)} tuples")
print(f"final multipliers: lambda={result.mult.lam:.3f} beta={result.mult.beta:.3f}")

ep = np.array([m.episode for m in rows])
cost = np.array([m.total_cost for m in rows])
lam = np.array([m.lam for m in rows])
beta = np.array([m.beta for m in rows])
ent = np.array([m.entropy_estimate for m in rows])

fig, axes = plt.subplots(3, 1, figsize=(7, 7), sharex=True)
axes[0].plot(ep, cost, lw=0.8)
axes[0].set_ylabel("episode cost")
axes[1].plot(ep, lam, label="lambda (decrease constraint)")
axes[1].plot(ep, beta, label="beta (entropy floor)")
axes[1].axvline(cfg.warm_start_episodes, color="gray", ls="--", lw=0.8)
axes[1].legend(fontsize=8)
axes[1].set_ylabel("multipliers")
axes[2].plot(ep, ent, lw=0.8)
axes[2].axhline(cfg.entropy_target, color="gray", ls="--", lw=0.8)
axes[2].set_ylabel("entropy estimate")
axes[2].set_xlabel("episode")
fig.tight_layout()
fig.savefig(out_png, dpi=130)
print("wrote", out_png)

# lambda must stay frozen through the warm start -- the constraint only
# switches on afterwards
warm = [m.lam for m in rows[: cfg.warm_start_episodes]]
assert all(v == cfg.lambda_init for v in warm)
print("lambda frozen during warm start: ok")
