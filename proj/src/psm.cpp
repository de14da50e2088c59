#include "homlind/psm.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>

namespace homlind {

namespace {

// Minimal RAII wrapper for a pair of complex 2-D FFTW plans sharing one
// in-place buffer.  Plans are created with FFTW_ESTIMATE so results do not
// depend on runtime measurement, keeping runs bit-reproducible.
class Fft2D {
public:
    Fft2D(int nx, int ny) : nx_(nx), ny_(ny), n_(nx * ny) {
        buf_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n_));
        if (buf_ == nullptr) throw std::bad_alloc();
        fwd_ = fftw_plan_dft_2d(nx_, ny_, buf_, buf_, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_2d(nx_, ny_, buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
        if (fwd_ == nullptr || bwd_ == nullptr) {
            if (fwd_ != nullptr) fftw_destroy_plan(fwd_);
            if (bwd_ != nullptr) fftw_destroy_plan(bwd_);
            fftw_free(buf_);
            throw std::runtime_error("Fft2D: plan creation failed");
        }
    }
    ~Fft2D() {
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(buf_);
    }
    Fft2D(const Fft2D&) = delete;
    Fft2D& operator=(const Fft2D&) = delete;

    // Unnormalised forward transform (physical -> spectral).
    void forward(const VectorXcd& in, VectorXcd& out) {
        load(in);
        fftw_execute(fwd_);
        store(out, 1.0);
    }
    // Backward transform normalised by 1/(nx*ny) (spectral -> physical).
    void backward(const VectorXcd& in, VectorXcd& out) {
        load(in);
        fftw_execute(bwd_);
        store(out, 1.0 / static_cast<double>(n_));
    }

private:
    void load(const VectorXcd& in) {
        std::memcpy(buf_, in.data(), sizeof(fftw_complex) * n_);
    }
    void store(VectorXcd& out, double scale) {
        out.resize(n_);
        std::memcpy(out.data(), buf_, sizeof(fftw_complex) * n_);
        if (scale != 1.0) out *= scale;
    }

    int nx_, ny_, n_;
    fftw_complex* buf_ = nullptr;
    fftw_plan fwd_ = nullptr;
    fftw_plan bwd_ = nullptr;
};

// Integer frequency of DFT index i on an n-point grid (n even):
// 0, 1, ..., n/2-1, -n/2, ..., -1.
int freq_of(int i, int n) { return (i < n / 2) ? i : i - n; }

// Holds the spectral-space machinery for one grid so the RK4 stages can
// reuse wavenumber tables and scratch vectors.
class PsmStepper {
public:
    PsmStepper(int nx, int ny, double nu, double eta, bool nonlinear)
        : nx_(nx), ny_(ny), n_(nx * ny), nu_(nu), eta_(eta),
          nonlinear_(nonlinear), fft_(nx, ny) {
        kx_.resize(n_);
        ky_.resize(n_);
        k2_.resize(n_);
        dealias_.resize(n_);
        const int cut_x = nx_ / 3;
        const int cut_y = ny_ / 3;
        for (int i = 0; i < nx_; ++i) {
            const int fx = freq_of(i, nx_);
            for (int j = 0; j < ny_; ++j) {
                const int fy = freq_of(j, ny_);
                const int idx = i * ny_ + j;
                kx_[idx] = fx;
                ky_[idx] = fy;
                k2_[idx] = static_cast<double>(fx * fx + fy * fy);
                dealias_[idx] =
                    (std::abs(fx) <= cut_x && std::abs(fy) <= cut_y) ? 1.0 : 0.0;
            }
        }
    }

    int grid_points() const { return n_; }
    const VectorXd& dealias_mask() const { return dealias_; }

    void apply_dealias(VectorXcd& field) const {
        field.array() *= dealias_.array();
    }

    // dW, dX <- time derivative of the spectral fields (What, Xhat).
    void rhs(const VectorXcd& what, const VectorXcd& xhat, VectorXcd& dw,
             VectorXcd& dx) {
        dw = (-nu_) * k2_.cwiseProduct(what);
        dx = (-eta_) * k2_.cwiseProduct(xhat);
        if (!nonlinear_) return;

        // Stream function and current: phi_hat = -What/|k|^2 (gauge
        // phi_hat(0)=0), zeta_hat = |k|^2 Xhat.
        phihat_.resize(n_);
        for (int idx = 0; idx < n_; ++idx) {
            phihat_[idx] = (k2_[idx] == 0.0) ? cplx(0.0, 0.0) : -what[idx] / k2_[idx];
        }
        zetahat_ = k2_.cwiseProduct(xhat);

        grad_real(what, wx_, wy_);
        grad_real(xhat, xx_, xy_);
        grad_real(phihat_, px_, py_);
        grad_real(zetahat_, zx_, zy_);

        // Poisson brackets {f,g} = f_x g_y - f_y g_x evaluated pointwise.
        br_a_ = px_.cwiseProduct(wy_) - py_.cwiseProduct(wx_);   // {phi, omega}
        br_b_ = xx_.cwiseProduct(zy_) - xy_.cwiseProduct(zx_);   // {xi, zeta}
        br_c_ = px_.cwiseProduct(xy_) - py_.cwiseProduct(xx_);   // {phi, xi}

        scratch_r_ = br_b_ - br_a_;
        to_spectral_dealiased(scratch_r_, scratch_c_);
        dw += scratch_c_;
        scratch_r_ = -br_c_;
        to_spectral_dealiased(scratch_r_, scratch_c_);
        dx += scratch_c_;
    }

    // Physical-space samples (real part) of a spectral field.
    void to_physical(const VectorXcd& spec, VectorXd& phys) {
        fft_.backward(spec, tmp_c_);
        phys = tmp_c_.real();
    }

    void to_spectral_dealiased(const VectorXd& phys, VectorXcd& spec) {
        tmp_c_ = phys.cast<cplx>();
        fft_.forward(tmp_c_, spec);
        apply_dealias(spec);
    }

private:
    void grad_real(const VectorXcd& spec, VectorXd& gx, VectorXd& gy) {
        tmp_d_ = cplx(0.0, 1.0) * kx_.cwiseProduct(spec);
        to_physical(tmp_d_, gx);
        tmp_d_ = cplx(0.0, 1.0) * ky_.cwiseProduct(spec);
        to_physical(tmp_d_, gy);
    }

    int nx_, ny_, n_;
    double nu_, eta_;
    bool nonlinear_;
    Fft2D fft_;
    VectorXd kx_, ky_, k2_, dealias_;
    VectorXcd phihat_, zetahat_, tmp_c_, tmp_d_, scratch_c_;
    VectorXd wx_, wy_, xx_, xy_, px_, py_, zx_, zy_;
    VectorXd br_a_, br_b_, br_c_, scratch_r_;
};

}  // namespace

GridSolution2D psm_mhd(const ICSpec& omega0, const ICSpec& xi0, double nu,
                       double eta, double time_final, const PsmOptions& opt) {
    if (!(nu > 0.0) || !(eta > 0.0)) {
        throw std::invalid_argument("psm_mhd: both dissipation coefficients must be positive");
    }
    if (!(time_final >= 0.0)) {
        throw std::invalid_argument("psm_mhd: final time must be non-negative");
    }
    validate_grid_size(opt.nx, "psm_mhd: nx");
    validate_grid_size(opt.ny, "psm_mhd: ny");
    if (!(opt.dt > 0.0)) {
        throw std::invalid_argument("psm_mhd: dt must be positive");
    }

    const int nx = opt.nx;
    const int ny = opt.ny;
    const int n = nx * ny;
    PsmStepper stepper(nx, ny, nu, eta, opt.nonlinear_enabled);

    // Sample the initial fields on the collocation grid and project to the
    // dealiased spectral representation.
    VectorXd wgrid(n), xgrid(n);
    for (int i = 0; i < nx; ++i) {
        const double x = 2.0 * std::numbers::pi * i / nx;
        for (int j = 0; j < ny; ++j) {
            const double y = 2.0 * std::numbers::pi * j / ny;
            wgrid[i * ny + j] = omega0.eval(x, y);
            xgrid[i * ny + j] = xi0.eval(x, y);
        }
    }
    VectorXcd what, xhat;
    stepper.to_spectral_dealiased(wgrid, what);
    stepper.to_spectral_dealiased(xgrid, xhat);

    const double blowup_threshold =
        1e6 * std::max(1.0, std::max(what.lpNorm<Eigen::Infinity>(),
                                     xhat.lpNorm<Eigen::Infinity>()));

    if (time_final > 0.0) {
        const long nsteps = std::max<long>(1, std::lround(time_final / opt.dt));
        const double dt = time_final / static_cast<double>(nsteps);
        VectorXcd k1w(n), k1x(n), k2w(n), k2x(n), k3w(n), k3x(n), k4w(n), k4x(n);
        VectorXcd tw(n), tx(n);
        for (long step = 0; step < nsteps; ++step) {
            stepper.rhs(what, xhat, k1w, k1x);
            tw = what + (0.5 * dt) * k1w;
            tx = xhat + (0.5 * dt) * k1x;
            stepper.rhs(tw, tx, k2w, k2x);
            tw = what + (0.5 * dt) * k2w;
            tx = xhat + (0.5 * dt) * k2x;
            stepper.rhs(tw, tx, k3w, k3x);
            tw = what + dt * k3w;
            tx = xhat + dt * k3x;
            stepper.rhs(tw, tx, k4w, k4x);
            what += (dt / 6.0) * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
            xhat += (dt / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
            if (!what.allFinite() || !xhat.allFinite() ||
                what.lpNorm<Eigen::Infinity>() > blowup_threshold ||
                xhat.lpNorm<Eigen::Infinity>() > blowup_threshold) {
                throw std::runtime_error(
                    "psm_mhd: instability detected (field norm blow-up) at step " +
                    std::to_string(step + 1) + " of " + std::to_string(nsteps));
            }
        }
    }

    stepper.to_physical(what, wgrid);
    stepper.to_physical(xhat, xgrid);

    GridSolution2D sol;
    sol.nx = nx;
    sol.ny = ny;
    sol.time = time_final;
    sol.omega = MatrixXd::Zero(nx, ny);
    sol.xi = MatrixXd::Zero(nx, ny);
    for (int i = 0; i < nx; ++i) {
        for (int j = 0; j < ny; ++j) {
            sol.omega(i, j) = wgrid[i * ny + j];
            sol.xi(i, j) = xgrid[i * ny + j];
        }
    }
    return sol;
}

}  // namespace homlind
