"""Independent straight-line reference implementation used as a test oracle.

Deliberately naive: raw numpy eig with whatever order/phase LAPACK returns,
explicit matrix products, no shared code with the package under test.
"""

import numpy as np


def transition_p(a):
    d = a.sum(axis=1)
    if np.any(d == 0):
        raise ValueError("sink node")
    return np.linalg.inv(np.diag(d)) @ a


def l_rw(p):
    return np.eye(p.shape[0]) - p


def asymmetry_index(m):
    den = np.linalg.norm(m, ord="fro")
    if den == 0:
        return 0.0
    return np.linalg.norm(m - m.T, ord="fro") / den


def departure_from_normality(m):
    mf = np.linalg.norm(m, ord="fro")
    if mf == 0:
        return 0.0
    return np.linalg.norm(m @ m.conj().T - m.conj().T @ m, ord="fro") / mf**2


def bgft_decomposition(p):
    lam, v = np.linalg.eig(p)
    return lam, v, np.linalg.inv(v)


def diffusion_filter_matrix(p, tau=2.0):
    lam, v, ustar = bgft_decomposition(p)
    h = np.exp(-tau * (1.0 - lam))
    return v @ np.diag(h) @ ustar


def sample_operator(n, m_nodes):
    pm = np.zeros((len(m_nodes), n))
    for r, idx in enumerate(m_nodes):
        pm[r, idx] = 1.0
    return pm


def reconstruct_bandlimited(p, omega, m_nodes, x):
    lam, v, _ = bgft_decomposition(p)
    v_o = v[:, omega]
    pm = sample_operator(p.shape[0], m_nodes)
    y = pm @ x
    b = pm @ v_o
    c_hat, *_ = np.linalg.lstsq(b, y, rcond=None)
    x_hat = v_o @ c_hat
    relerr = np.linalg.norm(x_hat - x) / np.linalg.norm(x)
    return x_hat, relerr, np.linalg.cond(b)
