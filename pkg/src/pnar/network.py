"""Fixed directed networks: construction, random generators, and diagnostics.

A network on ``N`` nodes is described by a binary adjacency matrix ``A`` with
zero diagonal (no self-relationships).  Model dynamics act through the
row-normalized weight matrix ``W``: row ``i`` of ``W`` is ``A[i] / n_i`` where
``n_i`` is the out-degree, so a node is driven by the *average* of its
neighbors.  Rows of isolated nodes (``n_i = 0``) are identically zero; such
nodes are kept, with a diagnostic warning, so node indexing stays aligned
with any observed data.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from pnar.streams import as_generator

__all__ = [
    "Network",
    "NetworkDiagnostics",
    "NetworkWarning",
    "build_network",
    "gen_sbm",
    "gen_er",
    "diagnose_network",
    "power_spectral_radius",
    "read_edge_list",
    "write_edge_list",
    "load_network",
]


class NetworkWarning(UserWarning):
    """Non-fatal irregularities found while building a network."""


@dataclass(frozen=True)
class Network:
    """Immutable network: adjacency ``A``, out-degrees ``n``, weights ``W``."""

    N: int
    A: np.ndarray
    n: np.ndarray
    W: np.ndarray

    @property
    def density(self) -> float:
        """Fraction of the N(N-1) possible directed edges that are present."""
        if self.N <= 1:
            return 0.0
        return float(self.A.sum()) / (self.N * (self.N - 1))

    @property
    def n_edges(self) -> int:
        return int(self.A.sum())


@dataclass(frozen=True)
class NetworkDiagnostics:
    """Summary statistics of ``W`` used to judge network regularity.

    ``pi`` is the stationary distribution of ``W`` read as a Markov transition
    matrix (``None`` with ``reducible=True`` when the fixed-point iteration
    does not converge).  ``mu_xi`` and ``mu_pi`` are the scaled statistics
    ``lambda_max_Sigma_xi / (log N)**delta`` and ``N**gamma * sum(pi**2)``;
    both should stay bounded as the network grows for sandwich inference to
    remain trustworthy.
    """

    lambda_max_Wstar: float
    pi: np.ndarray | None
    sum_pi_sq: float | None
    reducible: bool
    density: float
    power_converged: bool
    lambda_max_Sigma_xi: float | None = None
    mu_xi: float | None = None
    mu_pi: float | None = None


def _finalize(A: np.ndarray) -> Network:
    """Assemble a Network from a validated zero-diagonal 0/1 matrix."""
    A = np.ascontiguousarray(A, dtype=np.int8)
    n = A.sum(axis=1).astype(np.int64)
    W = np.zeros(A.shape, dtype=np.float64)
    nz = n > 0
    W[nz] = A[nz] / n[nz, None]
    isolated = int(np.count_nonzero(~nz))
    if isolated:
        warnings.warn(
            f"{isolated} isolated node(s) (out-degree 0); their weight rows are zero",
            NetworkWarning,
            stacklevel=3,
        )
    A.setflags(write=False)
    n.setflags(write=False)
    W.setflags(write=False)
    return Network(N=A.shape[0], A=A, n=n, W=W)


def build_network(edges, N: int) -> Network:
    """Build a network from an iterable of directed ``(i, j)`` pairs.

    Self-loops are dropped (with a warning reporting how many); duplicate
    edges collapse to a single one.  Raises ``ValueError`` for ``N <= 0`` or
    node indices outside ``[0, N)``.
    """
    if N <= 0:
        raise ValueError(f"node count must be positive, got {N}")
    A = np.zeros((N, N), dtype=np.int8)
    dropped = 0
    for i, j in edges:
        i, j = int(i), int(j)
        if not (0 <= i < N and 0 <= j < N):
            raise ValueError(f"edge ({i},{j}) out of range for N={N}")
        if i == j:
            dropped += 1
            continue
        A[i, j] = 1
    if dropped:
        warnings.warn(f"dropped {dropped} self-loop(s)", NetworkWarning, stacklevel=2)
    return _finalize(A)


def _thin_to_density(A: np.ndarray, target: float, rng) -> np.ndarray:
    """Uniformly subsample realized edges until the edge density <= target."""
    N = A.shape[0]
    keep = int(round(target * N * (N - 1)))
    ii, jj = np.nonzero(A)
    if len(ii) <= keep:
        return A
    sel = rng.choice(len(ii), size=keep, replace=False)
    thinned = np.zeros_like(A)
    thinned[ii[sel], jj[sel]] = 1
    return thinned


def gen_sbm(
    N: int,
    K: int,
    p_in: float | None = None,
    p_out: float | None = None,
    seed=None,
    target_density: float | None = None,
) -> Network:
    """Directed stochastic block model network.

    Each node gets one of ``K`` block labels with equal probability; a
    directed edge ``isj`` (``i != j``) appears independently with probability
    ``p_in`` when the blocks match and ``p_out`` otherwise.  Defaults are
    ``p_in = N**-0.3`` and ``p_out = 1/N``.  ``target_density``, if given,
    uniformly subsamples the realized edges down to that edge density.

    Parameters
    ----------
    N, K : int
        Node and block counts, ``N >= K >= 1``.
    p_in, p_out : float, optional
        Within-/between-block edge probabilities in [0, 1].
    seed : int or numpy.random.Generator, optional
        Source of randomness; a fixed seed makes the draw reproducible.
    target_density : float, optional
        Edge density to thin down to (off by default).
    """
    if not 1 <= K <= N:
        raise ValueError(f"need N >= K >= 1, got N={N}, K={K}")
    p_in = N ** -0.3 if p_in is None else float(p_in)
    p_out = 1.0 / N if p_out is None else float(p_out)
    for name, p in (("p_in", p_in), ("p_out", p_out)):
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"{name} must be in [0, 1], got {p}")
    rng = as_generator(seed)
    labels = rng.integers(0, K, size=N)
    same_block = labels[:, None] == labels[None, :]
    prob = np.where(same_block, p_in, p_out)
    A = (rng.random((N, N)) < prob).astype(np.int8)
    np.fill_diagonal(A, 0)
    if target_density is not None:
        A = _thin_to_density(A, target_density, rng)
    return _finalize(A)


def gen_er(
    N: int,
    p: float | None = None,
    seed=None,
    target_density: float | None = None,
) -> Network:
    """Directed Erdos-Renyi network: every off-diagonal entry is an
    independent Bernoulli(``p``) edge.  Default ``p = N**-0.3``."""
    if N <= 0:
        raise ValueError(f"node count must be positive, got {N}")
    p = N ** -0.3 if p is None else float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    rng = as_generator(seed)
    A = (rng.random((N, N)) < p).astype(np.int8)
    np.fill_diagonal(A, 0)
    if target_density is not None:
        A = _thin_to_density(A, target_density, rng)
    return _finalize(A)


def power_spectral_radius(M: np.ndarray, tol: float = 1e-12, max_iter: int = 10_000):
    """Spectral radius of an entrywise-nonnegative matrix by power iteration.

    Iterates on ``M + I`` (same eigenvectors, eigenvalues shifted by one),
    which breaks the oscillation that plain power iteration exhibits on
    periodic structures such as directed cycles.  Returns ``(radius,
    converged)``.
    """
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("square matrix required")
    n = M.shape[0]
    if n == 0:
        return 0.0, True
    v = np.full(n, 1.0 / np.sqrt(n))
    theta = 1.0
    converged = False
    for _ in range(max_iter):
        w = M @ v + v
        norm = np.linalg.norm(w)
        if norm == 0.0:  # only possible if M has negative entries
            return 0.0, True
        w /= norm
        theta_new = float(w @ (M @ w + w))
        if abs(theta_new - theta) <= tol * max(1.0, abs(theta_new)):
            theta = theta_new
            converged = True
            break
        theta, v = theta_new, w
    return max(theta - 1.0, 0.0), converged


def _stationary_distribution(W: np.ndarray, tol: float = 1e-12, max_iter: int = 10_000):
    """Left fixed point ``pi = W' pi`` via damped (lazy-chain) iteration.

    Returns ``(pi, converged)`` with ``pi=None`` when the iteration fails to
    converge or the residual check ``|pi'W - pi'|_inf < 1e-10`` fails, which
    covers reducible or mass-leaking (isolated-row) chains.
    """
    N = W.shape[0]
    pi = np.full(N, 1.0 / N)
    WT = W.T
    for _ in range(max_iter):
        # Lazy chain (W + I)/2: same fixed points, guaranteed aperiodic.
        nxt = 0.5 * (WT @ pi + pi)
        s = nxt.sum()
        if s <= 0.0:
            return None, False
        nxt /= s
        if np.max(np.abs(nxt - pi)) <= tol:
            pi = nxt
            break
        pi = nxt
    else:
        return None, False
    if np.max(np.abs(WT @ pi - pi)) >= 1e-10:
        return None, False
    return pi, True


def diagnose_network(
    net: Network,
    residual_covariance: np.ndarray | None = None,
    delta: float = 8.0,
    gamma: float = 0.5,
    tol: float = 1e-12,
    max_iter: int = 10_000,
) -> NetworkDiagnostics:
    """Compute regularity diagnostics of the weight matrix.

    ``lambda_max_Wstar`` is the largest absolute eigenvalue of the symmetric
    ``W + W'``.  When ``residual_covariance`` (an entrywise-nonnegative
    sample noise covariance, e.g. from
    :func:`pnar.simulate.empirical_noise_covariance`) is supplied, its largest
    eigenvalue and the scaled statistics ``mu_xi``/``mu_pi`` are reported for
    the caller's choice of ``delta`` and ``gamma``.
    """
    lam_wstar, conv = power_spectral_radius(net.W + net.W.T, tol=tol, max_iter=max_iter)
    pi, pi_ok = _stationary_distribution(net.W, tol=tol, max_iter=max_iter)
    sum_pi_sq = float(np.sum(pi**2)) if pi is not None else None
    lam_sigma = mu_xi = mu_pi = None
    if residual_covariance is not None:
        sigma = np.abs(np.asarray(residual_covariance, dtype=np.float64))
        if sigma.shape != (net.N, net.N):
            raise ValueError(
                f"residual covariance shape {sigma.shape} does not match N={net.N}"
            )
        lam_sigma, conv_s = power_spectral_radius(sigma, tol=tol, max_iter=max_iter)
        conv = conv and conv_s
        if net.N > 1:
            mu_xi = lam_sigma / np.log(net.N) ** delta
        if sum_pi_sq is not None:
            mu_pi = net.N**gamma * sum_pi_sq
    if not conv:
        warnings.warn(
            "power iteration did not converge within max_iter", NetworkWarning, stacklevel=2
        )
    return NetworkDiagnostics(
        lambda_max_Wstar=lam_wstar,
        pi=pi,
        sum_pi_sq=sum_pi_sq,
        reducible=not pi_ok,
        density=net.density,
        power_converged=conv,
        lambda_max_Sigma_xi=lam_sigma,
        mu_xi=mu_xi,
        mu_pi=mu_pi,
    )


def read_edge_list(path):
    """Read a text edge list: one ``i,j`` pair per line, ``#`` comments,
    optional ``N=<count>`` header.  Returns ``(edges, declared_N_or_None)``."""
    edges = []
    declared = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.upper().startswith("N="):
                declared = int(line[2:])
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'i,j', got {raw!r}")
            edges.append((int(parts[0]), int(parts[1])))
    return edges, declared


def write_edge_list(path, net: Network) -> None:
    """Write a network in the edge-list text format (with an ``N=`` header)."""
    ii, jj = np.nonzero(net.A)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"N={net.N}\n")
        for i, j in zip(ii.tolist(), jj.tolist()):
            fh.write(f"{i},{j}\n")


def load_network(path, N: int | None = None) -> Network:
    """Read an edge-list file and build the network.

    ``N`` overrides the file's ``N=`` header; with neither, the node count is
    inferred as ``max index + 1``.
    """
    edges, declared = read_edge_list(path)
    if N is None:
        N = declared
    if N is None:
        if not edges:
            raise ValueError(f"{path}: empty edge list with no N= header")
        N = max(max(i, j) for i, j in edges) + 1
    return build_network(edges, N)
