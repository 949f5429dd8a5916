"""Small fully connected feedforward network with a single output.

The network is described by a `Topology` (layer sizes plus activation
choices) and a flat parameter vector. All heavy operations are batched over
samples with numpy; the parameter layout is weights-then-bias per layer,
input to output, with each weight matrix stored row-major as (n_in, n_out).

Residual convention: e = t - y. The per-sample output derivative matrix
returned by `jacobian` is J[m, n] = dy_m / dw_n, so the loss gradient
satisfies g = -(2/M) J^T e for the mean-squared error over M samples.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.special import expit


def _tanh_from_act(a):
    return 1.0 - a * a


def _logistic_from_act(a):
    return a * (1.0 - a)


# activation -> (function, derivative expressed in terms of the activation value)
_ACTIVATIONS = {
    "tanh": (np.tanh, _tanh_from_act),
    "logistic": (expit, _logistic_from_act),
}


@dataclass(frozen=True)
class Topology:
    """Layer sizes and activations of the network.

    layer_sizes includes the input layer, e.g. (13, 7, 1). The hidden
    activation applies to every layer except the last.
    """

    layer_sizes: tuple = (13, 7, 1)
    hidden_activation: str = "tanh"
    output_activation: str = "tanh"

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.layer_sizes)
        object.__setattr__(self, "layer_sizes", sizes)
        if len(sizes) < 2:
            raise ValueError("topology needs at least an input and an output layer")
        if any(s < 1 for s in sizes):
            raise ValueError(f"every layer size must be >= 1, got {sizes}")
        if sizes[-1] != 1:
            raise ValueError("only single-output networks are supported")
        for name in (self.hidden_activation, self.output_activation):
            if name not in _ACTIVATIONS:
                raise ValueError(f"unknown activation {name!r}")

    @property
    def n_inputs(self):
        return self.layer_sizes[0]

    @property
    def n_params(self):
        sizes = self.layer_sizes
        return sum(sizes[i] * sizes[i + 1] + sizes[i + 1] for i in range(len(sizes) - 1))

    def _activations(self):
        n_layers = len(self.layer_sizes) - 1
        hidden = _ACTIVATIONS[self.hidden_activation]
        out = _ACTIVATIONS[self.output_activation]
        return [hidden] * (n_layers - 1) + [out]


def init_params(topology, seed, scheme="uniform"):
    """Draw a fresh parameter vector, deterministic for a given seed.

    "uniform" draws every weight and bias from [-0.5, 0.5]. "nguyen_widrow"
    rescales each hidden unit's fan-in to the classic magnitude
    0.7 * H**(1/I) with evenly spread biases, which spreads the active
    regions of the hidden units over the input range; the output layer
    stays small uniform.
    """
    rng = np.random.default_rng(seed)
    sizes = topology.layer_sizes
    if scheme == "uniform":
        return rng.uniform(-0.5, 0.5, size=topology.n_params)
    if scheme != "nguyen_widrow":
        raise ValueError(f"unknown init scheme {scheme!r}")

    chunks = []
    n_layers = len(sizes) - 1
    for layer in range(n_layers):
        n_in, n_out = sizes[layer], sizes[layer + 1]
        if layer == n_layers - 1:
            chunks.append(rng.uniform(-0.5, 0.5, size=n_in * n_out + n_out))
            continue
        beta = 0.7 * n_out ** (1.0 / n_in)
        w = rng.uniform(-1.0, 1.0, size=(n_in, n_out))
        norms = np.sqrt((w * w).sum(axis=0))
        norms[norms == 0.0] = 1.0
        w = w * (beta / norms)
        if n_out > 1:
            b = beta * np.linspace(-1.0, 1.0, n_out)
        else:
            b = np.zeros(1)
        chunks.append(np.concatenate([w.ravel(), b]))
    return np.concatenate(chunks)


def unflatten(topology, params):
    """Split a flat parameter vector into [(W, b), ...] per layer."""
    params = np.asarray(params, dtype=np.float64)
    if params.shape != (topology.n_params,):
        raise ValueError(
            f"parameter vector has length {params.shape}, expected ({topology.n_params},)"
        )
    layers = []
    sizes = topology.layer_sizes
    pos = 0
    for i in range(len(sizes) - 1):
        n_in, n_out = sizes[i], sizes[i + 1]
        w = params[pos : pos + n_in * n_out].reshape(n_in, n_out)
        pos += n_in * n_out
        b = params[pos : pos + n_out]
        pos += n_out
        layers.append((w, b))
    return layers


def flatten(layers):
    """Inverse of unflatten."""
    return np.concatenate([np.concatenate([w.ravel(), b]) for w, b in layers])


def _forward_pass(topology, params, x):
    """Run the batch forward pass, returning all post-activation values.

    x is (M, n_inputs); the returned list holds the input followed by each
    layer's activations, the last entry being the (M, 1) output.
    """
    acts = [x]
    a = x
    for (w, b), (fn, _) in zip(unflatten(topology, params), topology._activations()):
        a = fn(a @ w + b)
        acts.append(a)
    return acts


def _as_batch(topology, x, name="features"):
    x = np.asarray(x, dtype=np.float64)
    if x.ndim == 1:
        x = x[None, :]
    if x.ndim != 2 or x.shape[1] != topology.n_inputs:
        raise ValueError(
            f"{name} must have {topology.n_inputs} columns, got shape {x.shape}"
        )
    return x


def outputs(topology, params, x):
    """Network output for every row of x, as a 1-D array."""
    x = _as_batch(topology, x)
    return _forward_pass(topology, params, x)[-1][:, 0]


def forward(topology, params, features):
    """Network output for a single feature vector."""
    features = np.asarray(features, dtype=np.float64)
    if features.shape != (topology.n_inputs,):
        raise ValueError(
            f"features must have shape ({topology.n_inputs},), got {features.shape}"
        )
    return float(outputs(topology, params, features[None, :])[0])


def _check_samples(topology, x, t):
    x = _as_batch(topology, x)
    t = np.asarray(t, dtype=np.float64).ravel()
    if t.shape[0] != x.shape[0]:
        raise ValueError(f"{x.shape[0]} feature rows but {t.shape[0]} targets")
    if x.shape[0] == 0:
        raise ValueError("need at least one sample")
    return x, t


def mse_loss(topology, params, x, t):
    """Mean squared error (1/M) sum (t_m - y_m)^2."""
    x, t = _check_samples(topology, x, t)
    e = t - outputs(topology, params, x)
    return float(np.dot(e, e) / e.shape[0])


def gradient(topology, params, x, t):
    """Exact reverse-mode gradient of mse_loss w.r.t. every parameter."""
    return loss_and_gradient(topology, params, x, t)[1]


def loss_and_gradient(topology, params, x, t):
    """(mse_loss, gradient) sharing one forward pass."""
    x, t = _check_samples(topology, x, t)
    layers = unflatten(topology, params)
    derivs = [d for _, d in topology._activations()]
    acts = _forward_pass(topology, params, x)

    m = x.shape[0]
    e = t - acts[-1][:, 0]
    loss = float(np.dot(e, e) / m)

    # dE/dy = -(2/M) e, then backpropagate through each layer.
    delta = (-(2.0 / m) * e)[:, None] * derivs[-1](acts[-1])
    grads = []
    for layer in range(len(layers) - 1, -1, -1):
        w, _ = layers[layer]
        a_prev = acts[layer]
        gw = a_prev.T @ delta
        gb = delta.sum(axis=0)
        grads.append(np.concatenate([gw.ravel(), gb]))
        if layer > 0:
            delta = (delta @ w.T) * derivs[layer - 1](acts[layer])
    return loss, np.concatenate(grads[::-1])


def jacobian(topology, params, x, t):
    """Per-sample output derivatives and residuals.

    Returns (J, e) with J[m, n] = dy_m/dw_n (shape M x n_params) and
    e = t - y. The gradient identity g = -(2/M) J^T e links this to
    `gradient`.
    """
    x, t = _check_samples(topology, x, t)
    layers = unflatten(topology, params)
    derivs = [d for _, d in topology._activations()]
    acts = _forward_pass(topology, params, x)

    e = t - acts[-1][:, 0]

    # sens[m, j] = dy_m / dz_j at the current layer, walked backwards.
    sens = derivs[-1](acts[-1])
    blocks = []
    for layer in range(len(layers) - 1, -1, -1):
        w, _ = layers[layer]
        a_prev = acts[layer]
        # dy_m/dW[i, j] = a_prev[m, i] * sens[m, j], raveled to match flatten.
        jw = np.einsum("mi,mj->mij", a_prev, sens).reshape(x.shape[0], -1)
        blocks.append(np.concatenate([jw, sens], axis=1))
        if layer > 0:
            sens = (sens @ w.T) * derivs[layer - 1](acts[layer])
    return np.concatenate(blocks[::-1], axis=1), e
