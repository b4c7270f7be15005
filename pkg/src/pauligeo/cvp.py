"""Exact closest-vector search: LLL preconditioning + Schnorr-Euchner enumeration.

Everything here works on a generic full-rank lattice given by basis columns.
The geodesic-specific setup lives in ``lattice``.
"""

from concurrent.futures import ThreadPoolExecutor
import math
import threading

import numpy as np


def lll_reduce(basis, delta: float = 0.99):
    """LLL-reduce the columns of ``basis``.

    Returns ``(reduced, U)`` with ``reduced = basis @ U`` and ``U`` an integer
    unimodular matrix. Floating-point Gram-Schmidt; the reduction only has to be
    good enough to keep enumeration small, correctness never depends on it.
    """
    b = np.array(basis, dtype=np.float64)
    d = b.shape[1]
    U = np.eye(d)
    if d < 2:
        return b, U.astype(np.int64)
    _, r = np.linalg.qr(b)
    diag = np.diag(r)
    bstar = diag**2
    mu = (r / diag[:, None]).T

    def size_reduce(k, l):
        x = np.round(mu[k, l])
        if x != 0.0:
            b[:, k] -= x * b[:, l]
            U[:, k] -= x * U[:, l]
            mu[k, :l] -= x * mu[l, :l]
            mu[k, l] -= x

    k = 1
    while k < d:
        size_reduce(k, k - 1)
        if bstar[k] < (delta - mu[k, k - 1] ** 2) * bstar[k - 1]:
            m = mu[k, k - 1]
            big = bstar[k] + m * m * bstar[k - 1]
            b[:, [k - 1, k]] = b[:, [k, k - 1]]
            U[:, [k - 1, k]] = U[:, [k, k - 1]]
            mu[[k - 1, k], : k - 1] = mu[[k, k - 1], : k - 1]
            mu[k, k - 1] = m * bstar[k - 1] / big
            bstar[k] = bstar[k - 1] * bstar[k] / big
            bstar[k - 1] = big
            t = mu[k + 1 :, k].copy()
            mu[k + 1 :, k] = mu[k + 1 :, k - 1] - m * t
            mu[k + 1 :, k - 1] = t + mu[k, k - 1] * mu[k + 1 :, k]
            k = max(k - 1, 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    Ui = np.rint(U).astype(np.int64)
    return basis @ Ui, Ui


def log_node_estimate(R: np.ndarray, radius: float) -> float:
    """Gaussian-heuristic log of the enumeration tree size for radius ``radius``."""
    diag = np.abs(np.diag(R))[::-1]
    if radius <= 0.0:
        return 0.0
    logs = []
    acc = 0.0
    for k, rii in enumerate(diag, start=1):
        acc += math.log(rii)
        log_ball = (k / 2) * math.log(math.pi) - math.lgamma(k / 2 + 1) + k * math.log(radius)
        logs.append(log_ball - acc)
    top = max(logs)
    return top + math.log(sum(math.exp(v - top) for v in logs))


class Incumbent:
    """Shared best distance plus every leaf within ``slack`` of it.

    Updates are serialised by a lock and the best value only ever decreases.
    """

    def __init__(self, distance: float, slack: float):
        self.best = distance
        self.slack = slack
        self.leaves: list[tuple[float, tuple[int, ...]]] = []
        self._lock = threading.Lock()
        self.nodes = 0

    def radius2(self) -> float:
        r = self.best + self.slack
        return r * r

    def offer(self, dist2: float, y: tuple[int, ...]) -> None:
        dist = math.sqrt(dist2)
        with self._lock:
            if dist < self.best:
                self.best = dist
                limit = dist + self.slack
                self.leaves = [leaf for leaf in self.leaves if leaf[0] <= limit]
            if dist <= self.best + self.slack:
                self.leaves.append((dist, y))


def _search(R, mu, yhat, sep, sep_min, level, partial, floor, y, diff, inc):
    inc.nodes += 1
    c = yhat[level]
    if level + 1 < len(yhat):
        c += mu[level, level + 1 :] @ diff[level + 1 :]
    scale = R[level, level] ** 2

    def visit(t, step):
        """Try y[level] = t; report whether to keep walking in direction ``step``."""
        d = partial + scale * (c - t) ** 2
        r2 = inc.radius2()
        if d > r2:
            return False
        fl = floor + sep[level] * ((yhat[level] - t) ** 2 - sep_min[level])
        if d + fl > r2:
            # the floor term only shrinks while walking towards yhat[level]
            return (t - yhat[level]) * step < 0
        y[level] = t
        diff[level] = yhat[level] - t
        if level == 0:
            inc.offer(d + fl, tuple(int(v) for v in y))
        else:
            _search(R, mu, yhat, sep, sep_min, level - 1, d, fl, y, diff, inc)
        return True

    t0 = math.floor(c + 0.5)
    if partial + scale * (c - t0) ** 2 > inc.radius2():
        return
    visit(t0, 0)
    up, down = t0 + 1, t0 - 1
    up_ok = down_ok = True
    while up_ok or down_ok:
        if up_ok and (not down_ok or up - c <= c - down):
            up_ok = visit(up, 1)
            up += 1
        else:
            down_ok = visit(down, -1)
            down -= 1


def enumerate_closest(R, yhat, radius: float, slack: float, workers: int = 1,
                      separable=None) -> Incumbent:
    """Find every integer y whose distance is within ``slack`` of the best.

    The squared distance is ``||R (yhat - y)||**2 + sum_k s[k] * (yhat[k] - y[k])**2``
    with ``R`` upper triangular and ``s = separable`` (zero when omitted). The
    separable part is charged at its integer minimum for coordinates not yet
    fixed, which prunes far harder than the Cholesky partial sums alone.
    ``radius`` is a known achievable distance (the starting incumbent).
    With ``workers > 1`` the top-level branches run on a thread pool sharing
    one incumbent; the leaf set still contains every point within ``slack``
    of the optimum, so callers that pick deterministically among the leaves
    get the same answer for any worker count.
    """
    R = np.asarray(R, dtype=np.float64)
    yhat = np.asarray(yhat, dtype=np.float64)
    d = len(yhat)
    mu = R / np.diag(R)[:, None]
    sep = np.zeros(d) if separable is None else np.asarray(separable, dtype=np.float64)
    sep_min = (yhat - np.round(yhat)) ** 2
    floor0 = float(np.sum(sep * sep_min))
    inc = Incumbent(radius, slack)
    top = d - 1
    c = yhat[top]
    scale = R[top, top] ** 2 + sep[top]
    half = (radius + slack) / math.sqrt(scale)
    values = range(math.ceil(c - half), math.floor(c + half) + 1)
    branches = sorted(values, key=lambda t: (abs(t - c), t))

    def run(t):
        dist = R[top, top] ** 2 * (c - t) ** 2
        fl = floor0 + sep[top] * ((c - t) ** 2 - sep_min[top])
        if dist + fl > inc.radius2():
            return
        y = np.zeros(d, dtype=np.int64)
        diff = np.zeros(d)
        y[top] = t
        diff[top] = c - t
        if top == 0:
            inc.offer(dist + fl, (int(t),))
        else:
            _search(R, mu, yhat, sep, sep_min, top - 1, dist, fl, y, diff, inc)

    if workers > 1 and len(branches) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(run, branches))
    else:
        for t in branches:
            run(t)
    return inc
