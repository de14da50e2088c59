#include "homlind/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "homlind/linalg.hpp"

namespace homlind {

VectorXcd vec(const MatrixXcd& M) {
  return Eigen::Map<const VectorXcd>(M.data(), M.size());
}

MatrixXcd unvec(const VectorXcd& v, int rows) {
  if (v.size() % rows != 0)
    throw std::invalid_argument("vector length incompatible with row count");
  return Eigen::Map<const MatrixXcd>(v.data(), rows,
                                     static_cast<int>(v.size()) / rows);
}

namespace {

// acc += coeff * kron(A, B), accumulated block-wise without temporaries.
void kron_add(MatrixXcd& acc, const MatrixXcd& A, const MatrixXcd& B,
              cplx coeff) {
  const auto n = B.rows();
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      const cplx a = coeff * A(i, j);
      if (a != 0.0) acc.block(i * n, j * n, n, n) += a * B;
    }
}

// Lindbladian superoperator for Hamiltonian H and jump operator F on an
// n-dimensional space, column-stacking convention.
MatrixXcd lindblad_superop(const MatrixXcd& H, const MatrixXcd& F) {
  const auto n = H.rows();
  const MatrixXcd I = MatrixXcd::Identity(n, n);
  const MatrixXcd G = F.adjoint() * F;
  MatrixXcd L = MatrixXcd::Zero(n * n, n * n);
  kron_add(L, I, H, cplx(0.0, -1.0));
  kron_add(L, H.transpose(), I, cplx(0.0, 1.0));
  kron_add(L, F.conjugate(), F, 1.0);
  kron_add(L, I, G, -0.5);
  kron_add(L, G.transpose(), I, -0.5);
  return L;
}

}  // namespace

MatrixXcd dense_superop_from_embedding(const LindbladEmbedding& emb,
                                       double dt) {
  return expm(lindblad_superop(emb.hamiltonian(), emb.jump_operator()) * dt);
}

StepChannel build_channel(const LindbladEmbedding& emb, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("step size must be positive");
  StepChannel ch;
  ch.dt = dt;
  ch.D = emb.D;
  const int D = emb.D;

  // 00-sector Lindbladian (Hamiltonian A2, jump S) and block propagator.
  ch.E00 = expm(lindblad_superop(emb.A2, emb.sqrt2A1) * dt);
  ch.Eblk = expm(emb.Atilde * dt);

  // Trace-preservation defect of the sector superoperator:
  // Tr E(E_ij) = delta_ij.
  double tp = 0.0;
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      cplx tr = 0.0;
      for (int p = 0; p < D; ++p) tr += ch.E00(p * D + p, j * D + i);
      tp = std::max(tp, std::abs(tr - (i == j ? 1.0 : 0.0)));
    }
  ch.trace_defect = tp;

  // Choi matrix on its support: 00-sector pairs plus the maximally
  // entangled direction of the 11-sector.
  const int dsq = D * D;
  MatrixXcd Ct(dsq + 1, dsq + 1);
  for (int p = 0; p < D; ++p)
    for (int i = 0; i < D; ++i)
      for (int q = 0; q < D; ++q)
        for (int j = 0; j < D; ++j)
          Ct(p * D + i, q * D + j) = ch.E00(q * D + p, j * D + i);
  const double sqrtD = std::sqrt(static_cast<double>(D));
  for (int p = 0; p < D; ++p)
    for (int i = 0; i < D; ++i) {
      Ct(p * D + i, dsq) = sqrtD * ch.Eblk(p, i);
      Ct(dsq, p * D + i) = sqrtD * std::conj(ch.Eblk(p, i));
    }
  Ct(dsq, dsq) = static_cast<double>(D);
  Ct = ((Ct + Ct.adjoint()) / 2.0).eval();

  HermitianEig eig = hermitian_eig(Ct);
  ch.choi_max_eig = eig.eigenvalues.maxCoeff();
  // The remaining 4D^2 - D^2 - 1 Choi eigenvalues vanish identically.
  ch.choi_min_eig = std::min(eig.eigenvalues.minCoeff(), 0.0);
  const double keep_tol = 1e-12 * ch.choi_max_eig;

  ch.Ehat = MatrixXcd::Zero(D, D);
  ch.r11_factor = 0.0;
  std::vector<cplx> bs;
  for (Eigen::Index idx = eig.eigenvalues.size() - 1; idx >= 0; --idx) {
    const double lam = eig.eigenvalues[idx];
    if (lam <= keep_tol) break;
    const double root = std::sqrt(lam);
    MatrixXcd K00(D, D);
    for (int p = 0; p < D; ++p)
      for (int i = 0; i < D; ++i)
        K00(p, i) = root * eig.eigenvectors(p * D + i, idx);
    const cplx b = root * eig.eigenvectors(dsq, idx) / sqrtD;
    ch.Ehat += std::conj(b) * K00;
    ch.r11_factor += std::norm(b);
    ch.kraus00.push_back(std::move(K00));
    bs.push_back(b);
  }
  ch.kraus_b = Eigen::Map<const VectorXcd>(bs.data(),
                                           static_cast<Eigen::Index>(bs.size()));

  MatrixXcd R00 = MatrixXcd::Zero(D, D);
  for (const auto& K : ch.kraus00) R00 += K.adjoint() * K;
  ch.completeness_residual =
      std::max((R00 - MatrixXcd::Identity(D, D)).cwiseAbs().maxCoeff(),
               std::abs(ch.r11_factor - 1.0));
  return ch;
}

std::vector<MatrixXcd> StepChannel::kraus_full() const {
  std::vector<MatrixXcd> out;
  out.reserve(kraus00.size());
  for (size_t i = 0; i < kraus00.size(); ++i) {
    MatrixXcd K = MatrixXcd::Zero(2 * D, 2 * D);
    K.topLeftCorner(D, D) = kraus00[i];
    K.bottomRightCorner(D, D) =
        kraus_b[static_cast<Eigen::Index>(i)] * MatrixXcd::Identity(D, D);
    out.push_back(std::move(K));
  }
  return out;
}

MatrixXcd StepChannel::dense_superop() const {
  const int n = 2 * D;
  MatrixXcd S = MatrixXcd::Zero(n * n, n * n);
  MatrixXcd basis = MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      basis(i, j) = 1.0;
      // Sector action on an arbitrary (non-Hermitian) basis matrix.
      MatrixXcd out = MatrixXcd::Zero(n, n);
      out.topLeftCorner(D, D) = unvec(E00 * vec(basis.topLeftCorner(D, D)), D);
      out.topRightCorner(D, D) = Eblk * basis.topRightCorner(D, D);
      out.bottomLeftCorner(D, D) =
          basis.bottomLeftCorner(D, D) * Eblk.adjoint();
      out.bottomRightCorner(D, D) = basis.bottomRightCorner(D, D);
      S.col(j * n + i) = vec(out);
      basis(i, j) = 0.0;
    }
  return S;
}

const StinespringData& build_stinespring(StepChannel& ch) {
  if (ch.stine) return *ch.stine;
  auto data = std::make_shared<StinespringData>();
  const int D = ch.D;
  const int n = 2 * D;
  const int r = ch.kraus_rank();
  data->rank = r;
  data->V = MatrixXcd::Zero(static_cast<Eigen::Index>(n) * r, n);
  for (int i = 0; i < r; ++i) {
    const MatrixXcd& K00 = ch.kraus00[static_cast<size_t>(i)];
    const cplx b = ch.kraus_b[i];
    for (int s = 0; s < D; ++s)
      for (int t = 0; t < D; ++t)
        data->V(static_cast<Eigen::Index>(s) * r + i, t) = K00(s, t);
    for (int s = 0; s < D; ++s)
      data->V(static_cast<Eigen::Index>(D + s) * r + i, D + s) = b;
  }
  const MatrixXcd gram = data->V.adjoint() * data->V;
  data->isometry_residual =
      (gram - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (data->isometry_residual > 1e-10)
    throw std::runtime_error(
        "dilation isometry defect " + std::to_string(data->isometry_residual) +
        " exceeds 1e-10: defective Kraus set");
  ch.stine = data;
  return *ch.stine;
}

DensityState apply_step(const StepChannel& ch, const DensityState& st,
                        Realization mode) {
  const int D = ch.D;
  if (st.D() != D) throw std::invalid_argument("state/channel size mismatch");
  DensityState out;
  switch (mode) {
    case Realization::Superop: {
      out.r00 = unvec(ch.E00 * vec(st.r00), D);
      out.r01 = ch.Eblk * st.r01;
      out.r11 = st.r11;
      return out;
    }
    case Realization::Kraus: {
      out.r00 = MatrixXcd::Zero(D, D);
      for (const auto& K : ch.kraus00)
        out.r00 += K * st.r00 * K.adjoint();
      out.r01 = ch.Ehat * st.r01;
      out.r11 = ch.r11_factor * st.r11;
      return out;
    }
    case Realization::Stinespring: {
      if (!ch.stine)
        throw std::logic_error(
            "dilation isometry not built; call build_stinespring first");
      const MatrixXcd& V = ch.stine->V;
      const int r = ch.stine->rank;
      const int n = 2 * D;
      const MatrixXcd rho = st.full();
      const MatrixXcd X = V * rho;  // (n r) x n
      // Partial trace over the environment register:
      // rho'[s,s'] = sum_i [V rho V*][s r + i, s' r + i].
      MatrixXcd rho_out = MatrixXcd::Zero(n, n);
      MatrixXcd Xi(n, n), Vi(n, n);
      for (int i = 0; i < r; ++i) {
        for (int s = 0; s < n; ++s) {
          Xi.row(s) = X.row(static_cast<Eigen::Index>(s) * r + i);
          Vi.row(s) = V.row(static_cast<Eigen::Index>(s) * r + i);
        }
        rho_out.noalias() += Xi * Vi.adjoint();
      }
      return DensityState::from_full(rho_out);
    }
  }
  throw std::logic_error("unknown realization");
}

DensityState evolve(const StepChannel& ch, DensityState st, int nsteps,
                    Realization mode,
                    std::vector<StepDiagnostics>* diagnostics) {
  if (nsteps < 0) throw std::invalid_argument("step count must be >= 0");
  for (int k = 0; k < nsteps; ++k) {
    st = apply_step(ch, st, mode);
    if (diagnostics)
      diagnostics->push_back(
          {st.trace(), st.min_eigenvalue(), st.r01.norm()});
  }
  return st;
}

}  // namespace homlind
