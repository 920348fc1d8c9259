#pragma once

#include "salemkit/grid.hpp"
#include "salemkit/report.hpp"

namespace salemkit {

/// In-place length-n DFT (forward: e^{-2 pi i jk/n}, backward unnormalized).
void fft(std::vector<Complex>& data, bool forward);

/// Unitary-convention Fourier transform on the grid t_k = (k - n/2) * 2pi/(n dx).
/// Throws support_violation when an edge sample exceeds edge_tol * max |f|.
SpectralFunction fourier(const GridFunction& f, double edge_tol = 1e-10);

GridFunction inverse_fourier(const SpectralFunction& F);

/// Direct sum (dx / sqrt(2 pi)) sum_j f_j e^{-i t x_j} at an arbitrary t.
Complex dtft(const GridFunction& f, double t);

/// Spectral Hilbert transform with multiplier +i sgn(t), sgn(0) = 0, on a grid
/// zero-padded by the given factor (>= 1; 1 gives the exact on-grid identity).
GridFunction hilbert(const GridFunction& f, std::size_t pad = 4, double edge_tol = 5e-2);

/// (1/pi) PV int f(x) / (x - y) dx over the grid by singularity subtraction.
Complex hilbert_pv_direct(const GridFunction& f, double y);

/// Linear convolution int f(x) g(y - x) dx. The output grid starts at
/// f.x0 + g.x0 and has the next power of two >= n_f + n_g - 1 samples.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

VerificationEntry plancherel_check(const GridFunction& f);

/// Zero-extends f symmetrically to n * factor samples on the same spacing.
GridFunction zero_pad(const GridFunction& f, std::size_t factor);

/// Samples of f at the nodes of `target`, which must be a sub-lattice window
/// of f's grid. Throws support_violation if mass outside exceeds tol * max|f|.
GridFunction restrict_to(const GridFunction& f, const Grid& target, double tol);

}  // namespace salemkit
