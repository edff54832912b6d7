"""
Dense nets, squashed Gaussian policy, gradient checking
=======================================================

The whole learning stack is plain numpy: ReLU MLPs, a tanh-squashed
Gaussian policy head, a softplus critic head, and hand-derived
reverse-mode gradients. This script pokes at each piece and then
verifies the analytic gradients against central finite differences.
"""

import numpy as np

from lbac import nets
from lbac.nets import (
    Adam,
    critic_forward_batch,
    grad_check,
    init_params,
    mlp_forward,
    policy_sample,
)

rng = np.random.default_rng(0)

# --- a tiny policy net: 4 state dims in, mean and log-std out ------------
theta = init_params([4, 32, 32, 4], rng)
s = np.array([1.2, 0.6, 0.0, 0.0])

out = policy_sample(theta, s, rng.standard_normal(2), limit=0.25)
print("sampled action:", out.action, " log prob:", out.log_prob)
assert np.all(np.abs(out.action) <= 0.25)  # tanh squash keeps the box

# zero eps gives the deterministic mean action
det = policy_sample(theta, s, np.zeros(2), limit=0.25)
print("mean action:   ", det.action)

# --- critic: softplus head, so Q >= 0 everywhere -------------------------
phi = init_params([6, 32, 32, 1], rng)
q, _ = critic_forward_batch(phi, s[None, :], out.action[None, :])
print("Q(s, a) =", q[0], " (nonnegative by construction)")

# --- gradient checking ---------------------------------------------------
# any scalar-valued function of the parameters can be checked: here, the
# mean squared output of the MLP over a small batch
X = rng.normal(size=(8, 4))


def loss_fn(params):
    y, cache = mlp_forward(params, X)
    loss = float(np.mean(y ** 2))
    d_y = 2.0 * y / y.size
    grads, _ = nets.mlp_backward(params, cache, d_y, param_grads=True)
    return loss, grads

err = grad_check(loss_fn, theta, probe_count=64, rng=np.random.default_rng(1))
print(f"max relative FD error over 64 probed coordinates: {err:.2e}")
assert err < 1e-6

# --- Adam on a quadratic bowl -------------------------------------------
# sanity: the optimizer drives a parameter vector to the minimum
target = rng.normal(size=(4,))
p = init_params([4, 4], rng)  # single linear layer, abused as a parameter bag
opt = Adam.for_params(p, lr=0.05)
for step in range(400):
    g = nets.zeros_like_params(p)
    g.biases[0][:] = p.biases[0] - target
    opt.step(p, g)
print("Adam bias error after 400 steps:", float(np.max(np.abs(p.biases[0] - target))))
