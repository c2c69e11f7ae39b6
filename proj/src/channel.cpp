#include "polar/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polar {

namespace {

void check_epsilon(double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("offset epsilon must lie in [0,1]");
}

} // namespace

Bsc make_bsc(double epsilon) {
    check_epsilon(epsilon);
    return Bsc{epsilon};
}

double BscComponent::z() const {
    return std::sqrt((1.0 - epsilon) * (1.0 + epsilon));
}

CompoundBsc CompoundBsc::bsc(double epsilon) {
    check_epsilon(epsilon);
    return from_components({BscComponent{1.0, epsilon}});
}

CompoundBsc CompoundBsc::from_components(std::vector<BscComponent> comps, double merge_tol) {
    if (comps.empty()) throw std::invalid_argument("compound channel needs at least one component");
    double total = 0.0;
    for (const auto& c : comps) {
        if (!(c.beta > 0.0)) throw std::invalid_argument("component weights must be positive");
        check_epsilon(c.epsilon);
        total += c.beta;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("component weights must sum to 1");
    std::sort(comps.begin(), comps.end(),
              [](const BscComponent& x, const BscComponent& y) { return x.epsilon < y.epsilon; });
    std::vector<BscComponent> merged;
    merged.reserve(comps.size());
    for (const auto& c : comps) {
        if (!merged.empty() && c.epsilon - merged.back().epsilon <= merge_tol)
            merged.back().beta += c.beta;
        else
            merged.push_back(c);
    }
    CompoundBsc w;
    w.comps_ = std::move(merged);
    return w;
}

ChannelMoments moments(const CompoundBsc& w) {
    ChannelMoments mom;
    for (const auto& c : w.components()) {
        const double z = c.z();
        mom.d += c.beta * c.epsilon;
        mom.a += c.beta * c.epsilon * c.epsilon;
        mom.b += c.beta * z * z;
        mom.z += c.beta * z;
    }
    mom.v = std::sqrt(mom.a * mom.b);
    return mom;
}

namespace {

CompoundBsc pairwise_transform(const CompoundBsc& w, bool degrading) {
    const auto& comps = w.components();
    const size_t omega = comps.size();
    if (omega * omega > CompoundBsc::kComponentCap)
        throw std::runtime_error("compound channel component count bound exceeded");
    std::vector<BscComponent> out;
    out.reserve(omega * omega);
    for (const auto& t : comps) {
        for (const auto& s : comps) {
            BscComponent c;
            c.beta = t.beta * s.beta;
            if (degrading) {
                c.epsilon = t.epsilon * s.epsilon;
            } else {
                const double zz = t.z() * s.z();
                c.epsilon = std::sqrt(std::max(0.0, (1.0 - zz) * (1.0 + zz)));
            }
            out.push_back(c);
        }
    }
    return CompoundBsc::from_components(std::move(out));
}

} // namespace

CompoundBsc degrade(const CompoundBsc& w) { return pairwise_transform(w, true); }

CompoundBsc upgrade(const CompoundBsc& w) { return pairwise_transform(w, false); }

double moment_step(double b, int bit) {
    if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("B moment must lie in [0,1]");
    if (bit != 0 && bit != 1) throw std::invalid_argument("path bit must be 0 or 1");
    return bit == 0 ? b * b : 1.0 - (1.0 - b) * (1.0 - b);
}

std::vector<double> moments_along_path(double b0, const Path& xi) {
    std::vector<double> traj;
    traj.reserve(static_cast<size_t>(xi.length()) + 1);
    traj.push_back(b0);
    double b = b0;
    for (int i = 0; i < xi.length(); ++i) {
        b = moment_step(b, xi.bit(i));
        traj.push_back(b);
    }
    return traj;
}

std::vector<double> b_moment_table(int m, double b0, uint64_t* steps, Exec exec) {
    if (m < 1 || m > 30) throw std::invalid_argument("table depth m must be in [1, 30]");
    if (!(b0 >= 0.0 && b0 <= 1.0)) throw std::invalid_argument("B moment must lie in [0,1]");
    std::vector<double> cur{b0};
    std::vector<double> next;
    uint64_t count = 0;
    for (int level = 1; level <= m; ++level) {
        const size_t sz = size_t{1} << level;
        next.resize(sz);
        const int64_t parents = int64_t{1} << (level - 1);
        if (exec == Exec::parallel && parents >= 4096) {
#pragma omp parallel for schedule(static) reduction(+ : count)
            for (int64_t p = 0; p < parents; ++p) {
                const double b = cur[static_cast<size_t>(p)];
                next[static_cast<size_t>(2 * p)] = b * b;
                next[static_cast<size_t>(2 * p + 1)] = 1.0 - (1.0 - b) * (1.0 - b);
                count += 2;
            }
        } else {
            for (int64_t p = 0; p < parents; ++p) {
                const double b = cur[static_cast<size_t>(p)];
                next[static_cast<size_t>(2 * p)] = b * b;
                next[static_cast<size_t>(2 * p + 1)] = 1.0 - (1.0 - b) * (1.0 - b);
                count += 2;
            }
        }
        cur.swap(next);
    }
    if (steps) *steps += count;
    return cur;
}

BhattacharyyaBounds bhattacharyya_bounds(const ChannelMoments& mom) {
    constexpr double slack = 1e-12;
    BhattacharyyaBounds r;
    r.z = mom.z;
    r.lower_b = mom.b;
    r.upper_b = std::sqrt(mom.b);
    r.lower_d = 1.0 - mom.d;
    r.upper_d = std::sqrt(std::max(0.0, (1.0 - mom.d) * (1.0 + mom.d)));
    r.within_b_sandwich = (mom.z >= r.lower_b - slack) && (mom.z <= r.upper_b + slack);
    r.within_d_sandwich = (mom.z >= r.lower_d - slack) && (mom.z <= r.upper_d + slack);
    return r;
}

double soft_q(double llr) {
    if (std::isinf(llr)) return llr > 0 ? 1.0 : 0.0;
    // e^L / (1 + e^L), evaluated on the stable side
    if (llr >= 0) return 1.0 / (1.0 + std::exp(-llr));
    const double e = std::exp(llr);
    return e / (1.0 + e);
}

double soft_g(double llr) { return std::isinf(llr) ? (llr > 0 ? 1.0 : -1.0) : std::tanh(llr / 2.0); }

double soft_h(double llr) { return std::exp(llr); }

double bsc_soft(int y, double epsilon) {
    if (y != 1 && y != -1) throw std::invalid_argument("channel symbol must be +1 or -1");
    check_epsilon(epsilon);
    const double g = epsilon * static_cast<double>(y);
    if (g >= 1.0) return std::numeric_limits<double>::infinity();
    if (g <= -1.0) return -std::numeric_limits<double>::infinity();
    return std::log1p(g) - std::log1p(-g); // ln((1+g)/(1-g))
}

std::vector<double> bsc_soft(const std::vector<int>& symbols, double epsilon) {
    std::vector<double> llr(symbols.size());
    for (size_t i = 0; i < symbols.size(); ++i) llr[i] = bsc_soft(symbols[i], epsilon);
    return llr;
}

std::vector<int> bsc_observe(const Codeword& cw, double epsilon, uint64_t seed) {
    check_epsilon(epsilon);
    const double p = (1.0 - epsilon) / 2.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<int> out(cw.bits.size());
    for (size_t i = 0; i < out.size(); ++i) {
        int sym = cw.bits[i] ? -1 : +1;
        if (unif(rng) < p) sym = -sym;
        out[i] = sym;
    }
    return out;
}

} // namespace polar
