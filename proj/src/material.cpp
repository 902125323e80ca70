#include "eulgen/material.hpp"

#include <cmath>
#include <stdexcept>

#include "eulgen/util.hpp"

namespace eulgen {

MaterialEval eval_material(const MaterialModel& model, const TensorField& F, const TensorField& Fp,
                           const TensorField& tau, TauRole role) {
    const Grid& g = F.grid();
    if (Fp.grid() != g || tau.grid() != g) throw std::invalid_argument("eval_material: grid mismatch");
    const int d = g.dim();

    MaterialEval out{TensorField(g, Kind::IntensiveScalar), TensorField(g, Kind::IntensiveScalar),
                     TensorField(g, Kind::TwoPoint),        TensorField(g, Kind::IntensiveMatrix),
                     TensorField(g, Kind::IntensiveScalar), TensorField(g, Kind::TwoPoint),
                     TensorField(g, Kind::IntensiveMatrix), TensorField(g, Kind::IntensiveScalar),
                     TensorField(g, Kind::IntensiveScalar)};

    const double mu = model.mu, lam = model.lambda_lame, kh = model.k_h;
    const double cV = model.c_V, thref = model.theta_ref;
    const double floor = 1e-10 * cV * thref;

    parallel_for(g.num_nodes(), [&](std::size_t lo, std::size_t hi) {
        double f[9], fp[9], fpinv[9], fe[9], feinv[9], p[9];
        double dfw[9], dfpw[9], tmp[9];
        for (std::size_t node = lo; node < hi; ++node) {
            for (int c = 0; c < d * d; ++c) {
                f[c] = F.at(c, node);
                fp[c] = Fp.at(c, node);
            }
            const double detfp = matd::inverse(fp, d, fpinv);
            if (!(detfp > 0.0)) throw std::domain_error("eval_material: det F_p <= 0");
            matd::matmul(f, fpinv, d, fe);
            const double detfe = matd::inverse(fe, d, feinv);
            if (!(detfe > 0.0)) throw std::domain_error("eval_material: det F_e <= 0");
            const double logj = std::log(detfe);

            // P = dW/dF_e = mu F_e - mu F_e^{-T} + lambda ln(det F_e) F_e^{-T}
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    p[i * d + j] = mu * fe[i * d + j] + (lam * logj - mu) * feinv[j * d + i];

            const double wel = 0.5 * mu * (matd::frobenius2(fe, d) - d) - mu * logj + 0.5 * lam * logj * logj;

            // dW/dF = P F_p^{-T}, dW/dF_p = -F_e^T P F_p^{-T}
            matd::transpose(fpinv, d, tmp);
            matd::matmul(p, tmp, d, dfw);
            double fet[9], petmp[9];
            matd::transpose(fe, d, fet);
            matd::matmul(fet, dfw, d, petmp);
            for (int c = 0; c < d * d; ++c) dfpw[c] = -petmp[c];

            double hard = 0.0;
            double dfph[9];
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    const double dev = fp[i * d + j] - (i == j ? 1.0 : 0.0);
                    dfph[i * d + j] = kh * dev;
                    hard += 0.5 * kh * dev * dev;
                }

            const double t = tau.at(0, node);
            if (role == TauRole::Entropy) {
                const double theta = thref * std::exp(t / cV);
                out.E.at(0, node) = wel + hard + cV * theta;
                out.S.at(0, node) = t;
                out.dtauE.at(0, node) = theta;
                out.dtauS.at(0, node) = 1.0;
                out.theta.at(0, node) = theta;
                for (int c = 0; c < d * d; ++c) {
                    out.dFE.at(c, node) = dfw[c];
                    out.dFpE.at(c, node) = dfpw[c] + dfph[c];
                    out.dFS.at(c, node) = 0.0;
                    out.dFpS.at(c, node) = 0.0;
                }
            } else {
                const double u = t - wel - hard;
                if (!(u >= floor)) throw std::domain_error("eval_material: internal energy below thermal floor");
                const double theta = u / cV;
                out.E.at(0, node) = t;
                out.S.at(0, node) = cV * std::log(u / (cV * thref));
                out.dtauE.at(0, node) = 1.0;
                out.dtauS.at(0, node) = 1.0 / theta;
                out.theta.at(0, node) = theta;
                for (int c = 0; c < d * d; ++c) {
                    out.dFE.at(c, node) = 0.0;
                    out.dFpE.at(c, node) = 0.0;
                    out.dFS.at(c, node) = -dfw[c] / theta;
                    out.dFpS.at(c, node) = -(dfpw[c] + dfph[c]) / theta;
                }
            }
        }
    });
    return out;
}

}  // namespace eulgen
