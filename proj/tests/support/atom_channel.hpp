#pragma once

// Test-only oracle: exact atom-level distribution of the genie leaf LLR under
// all-zero transmission over BSC(eps). Independent of the decoder: transforms
// act on explicit (value, probability) lists.

#include <algorithm>
#include <cmath>
#include <vector>

#include "polar/llr.hpp"
#include "polar/paths.hpp"

namespace polar::testing {

struct Atom {
    double llr;
    double prob;
};

inline std::vector<Atom> merge_atoms(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.llr < b.llr; });
    std::vector<Atom> out;
    for (const Atom& a : atoms) {
        if (!out.empty() &&
            std::abs(a.llr - out.back().llr) <= 1e-11 * std::max(1.0, std::abs(a.llr)))
            out.back().prob += a.prob;
        else
            out.push_back(a);
    }
    return out;
}

inline std::vector<Atom> atom_step(const std::vector<Atom>& atoms, int bit) {
    std::vector<Atom> out;
    out.reserve(atoms.size() * atoms.size());
    for (const Atom& x : atoms)
        for (const Atom& y : atoms) {
            const double l = bit == 1 ? degrade_combine(x.llr, y.llr) : x.llr + y.llr;
            out.push_back(Atom{l, x.prob * y.prob});
        }
    return merge_atoms(std::move(out));
}

// Pr{leaf LLR < 0} for the given path; ties (LLR = 0) decide bit 0 = correct.
inline double exact_genie_error(double epsilon, const Path& path) {
    const double mag = std::log((1.0 + epsilon) / (1.0 - epsilon));
    const double p = (1.0 - epsilon) / 2.0;
    std::vector<Atom> atoms{{-mag, p}, {mag, 1.0 - p}};
    for (int i = 0; i < path.length(); ++i) atoms = atom_step(atoms, path.bit(i));
    double err = 0.0;
    for (const Atom& a : atoms)
        if (a.llr < -1e-12) err += a.prob;
    return err;
}

} // namespace polar::testing
