#!/usr/bin/env python3
"""Independent reference for the dissipative-embedding engine on a small
fixed instance.

Builds the shifted Hermitian/anti-Hermitian splitting, the doubled-space
Hamiltonian/jump pair, the full Lindblad superoperator (column stacking),
its one-step channel, Kraus set via Choi eigendecomposition, and the
N-step evolution with off-diagonal-block readout.  Certifies two
structural facts used by the C++ engine:

  1. the generator never mixes ancilla sectors, so the channel acts
     block-wise and the 01-block propagator is exp(At~ dt);
  2. the Choi matrix is supported on the 00-sector plus the single
     maximally-entangled direction of the 11-sector, so its spectrum
     equals that of a (D^2+1)-dimensional restriction (plus exact zeros).

Printed values are frozen into the C++ unit tests.

Run:  python3 tests/oracles/oracle_lindblad.py
"""
import numpy as np
from scipy.linalg import expm, eigh

np.set_printoptions(precision=17)

D = 3
DT = 0.05
NSTEPS = 10

# Fixed test matrix (strictly lower-triangular coupling plus decay) and state.
A = np.array([
    [-0.30 + 0.00j, 0.00 + 0.00j, 0.00 + 0.00j],
    [0.40 - 0.20j, -0.10 + 0.00j, 0.00 + 0.00j],
    [-0.15 + 0.00j, 0.25 + 0.10j, -0.50 + 0.00j],
])
y0 = np.array([0.80 + 0.00j, -0.30 + 0.10j, 0.20 - 0.40j])


def vec(M):
    return M.reshape(-1, order="F")


def unvec(v, n):
    return v.reshape(n, n, order="F")


def build_embedding(A):
    A1 = -(A + A.conj().T) / 2
    A2 = -(A - A.conj().T) / (2j)
    lam_min = eigh(A1, eigvals_only=True)[0]
    gamma = max(0.0, -lam_min) + 1e-12 * np.linalg.norm(A, "fro")
    At = A - gamma * np.eye(D)
    A1t = A1 + gamma * np.eye(D)
    A2t = A2
    w, V = eigh(2 * A1t)
    w = np.clip(w, 0.0, None)
    S = (V * np.sqrt(w)) @ V.conj().T
    H = np.zeros((2 * D, 2 * D), dtype=complex)
    H[:D, :D] = A2t
    F = np.zeros((2 * D, 2 * D), dtype=complex)
    F[:D, :D] = S
    return gamma, At, A1t, A2t, S, H, F


def superop(H, F):
    n = H.shape[0]
    I = np.eye(n)
    G = F.conj().T @ F
    return (-1j * (np.kron(I, H) - np.kron(H.T, I))
            + np.kron(F.conj(), F)
            - 0.5 * (np.kron(I, G) + np.kron(G.T, I)))


def choi_from_channel(Eop, n):
    C = np.zeros((n * n, n * n), dtype=complex)
    for i in range(n):
        for j in range(n):
            Eij = np.zeros((n, n), dtype=complex)
            Eij[i, j] = 1.0
            out = unvec(Eop @ vec(Eij), n)
            C += np.kron(out, Eij)
    return C


def main():
    gamma, At, A1t, A2t, S, H, F = build_embedding(A)
    print(f"gamma = {gamma:.17g}")

    L = superop(H, F)
    Estep = expm(L * DT)
    Eblk = expm(At * DT)

    # --- structural fact 1: sector block action
    rng = np.random.default_rng(7)
    R = rng.standard_normal((2 * D, 2 * D)) + 1j * rng.standard_normal((2 * D, 2 * D))
    R = (R + R.conj().T) / 2
    out = unvec(Estep @ vec(R), 2 * D)
    r01 = out[:D, D:]
    print("sector 01 residual:",
          np.max(np.abs(r01 - Eblk @ R[:D, D:])))
    print("sector 11 residual:",
          np.max(np.abs(out[D:, D:] - R[D:, D:])))

    # --- structural fact 2: Choi support restriction
    C = choi_from_channel(Estep, 2 * D)
    print("choi hermiticity:", np.max(np.abs(C - C.conj().T)))
    evals_full = np.sort(eigh(C, eigvals_only=True))
    # restricted matrix: basis = 00-sector pairs + normalized Omega of 11
    n = 2 * D
    L0 = superop(A2t + 0j, S + 0j)  # D-dim lindbladian of the 00 sector
    E00 = expm(L0 * DT)
    C0 = choi_from_channel(E00, D)
    Evec = vec_rowpair = np.zeros(D * D, dtype=complex)
    # |E>> with index p*D+i = E[p,i]  (kron(out,in) row ordering)
    for p in range(D):
        for i in range(D):
            Evec[p * D + i] = Eblk[p, i]
    Ct = np.zeros((D * D + 1, D * D + 1), dtype=complex)
    # reindex C0 from kron(out,in) ordering: C0 already built that way
    Ct[:D * D, :D * D] = C0
    Ct[:D * D, -1] = np.sqrt(D) * Evec
    Ct[-1, :D * D] = np.sqrt(D) * Evec.conj()
    Ct[-1, -1] = D
    evals_r = np.sort(eigh(Ct, eigvals_only=True))
    pad = np.sort(np.concatenate([evals_r, np.zeros(4 * D * D - D * D - 1)]))
    print("restricted-vs-full spectrum:", np.max(np.abs(pad - evals_full)))
    print(f"choi min eig = {evals_full[0]:.6e}, max = {evals_full[-1]:.17g}")

    # --- Kraus from full Choi
    w, V = eigh(C)
    tol = 1e-12 * w[-1]
    kraus = [np.sqrt(lv) * unvec_choi(V[:, i], n)
             for i, lv in enumerate(w) if lv > tol]
    print("kraus count:", len(kraus))
    comp = sum(K.conj().T @ K for K in kraus)
    print("completeness residual:", np.max(np.abs(comp - np.eye(n))))

    # --- evolution and readout
    ynorm = np.linalg.norm(y0)
    yhat = y0 / ynorm
    plus = np.array([1.0, 1.0]) / np.sqrt(2)
    rho = np.kron(np.outer(plus, plus.conj()), np.outer(yhat, yhat.conj()))
    for _ in range(NSTEPS):
        rho = unvec(Estep @ vec(rho), 2 * D)
        tr = np.trace(rho)
        assert abs(tr - 1) < 1e-10, tr
    Tfin = NSTEPS * DT
    rho01 = rho[:D, D:]
    ytilde = 2 * (rho01 @ yhat)
    yrec = np.exp(gamma * Tfin) * ynorm * ytilde
    yexact = expm(A * Tfin) @ y0
    print("recover residual:", np.max(np.abs(yrec - yexact)))
    print("y(T) =", ", ".join(f"({v.real:+.17g},{v.imag:+.17g})"
                              for v in yexact))


def unvec_choi(v, n):
    # Choi eigvector index (p*n + i) -> operator K[p,i]
    return v.reshape(n, n, order="C")


if __name__ == "__main__":
    main()
