#pragma once

// Interface-flux sweep machinery shared by the solvers, the trainer, and the
// ADR driver. A "pencil" is one grid line along the sweep axis, padded with
// three ghost cells per side. For n interior cells there are m = n + 1
// interfaces; interface e sits between cells e-1 and e, and its 6-point
// stencil is padded[e..e+5]. Minus-orientation stencils are mirrored at
// gather time, so every column is reconstructed with the plus formula and
// the learned scheme sees exactly the orientation-reversed inputs it is
// defined on.

#include <cstdint>
#include <vector>

#include "wlnn/schemes.hpp"
#include "wlnn/solver.hpp"

namespace wlnn::sweep {

inline void fill_pencil_periodic(const double* base, std::int64_t stride, int n, int pad,
                                 double* upad) {
    for (int p = 0; p < n + 2 * pad; ++p) {
        int c = p - pad;
        c %= n;
        if (c < 0) c += n;
        upad[p] = base[static_cast<std::int64_t>(c) * stride];
    }
}

struct ScalarGather {
    int m = 0;                    // interface count (n + 1)
    std::vector<double> fpad;     // f(u) on the padded pencil
    std::vector<double> speed;    // |dfdu(u)| on the padded pencil
    std::vector<double> alpha;    // per-interface LLF alpha
    Matrix6Xd cols;               // 6 x (2m): plus columns, then mirrored minus
};

/// Builds split-flux stencil columns for one padded scalar pencil
/// (upad has n + 6 entries).
void gather_scalar(const double* upad, int n, const FluxDef& flux, ScalarGather& g);

struct EulerGather {
    int m = 0;
    int ncomp = 0;
    // Primitive arrays on the padded pencil.
    std::vector<double> rho, vel[3], pres, snd;
    std::vector<double> fpad;     // ncomp * (n+6), component-major axis flux
    std::vector<double> alpha;    // per-interface: max(|v_axis| + c)
    Matrix6Xd cols;               // 6 x (ncomp*2m), per component plus block then minus block
};

/// comp_pads: ncomp pointers to padded conserved pencils (n + 6 each).
/// Throws NumericalError on nonpositive density or pressure.
void gather_euler(const double* const* comp_pads, int ncomp, int n, int axis, double gamma,
                  EulerGather& g);

/// fhat[e] = vals[plus block] + vals[minus block] for one component block of
/// a gather; checks for NaN.
void combine_interface_values(const Eigen::VectorXd& vals, int block_offset, int m, double* fhat);

} // namespace wlnn::sweep
