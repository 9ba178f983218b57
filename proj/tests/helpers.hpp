#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "polycob/polycob.hpp"

namespace testing_support {

/// "1 3/2 4" -> LengthVector
inline polycob::LengthVector lv(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> parts;
    for (std::string s; in >> s;) parts.push_back(s);
    return polycob::LengthVector::parse(parts);
}

inline polycob::LengthVector lv(const std::vector<polycob::Rational>& v) { return polycob::LengthVector(v); }

inline std::vector<std::uint64_t> masks(const polycob::AdmissibleFamily& fam) {
    std::vector<std::uint64_t> out;
    for (const auto& s : fam.sets) out.push_back(s.mask());
    return out;
}

/// The worked examples, in order.
inline const std::vector<std::string>& worked_examples() {
    static const std::vector<std::string> v = {
        "1 3/2 4 1 2", "1/2 2 4 1 2", "2 1/2 4 1/2 5/2", "2 7/2 4 1 2",
        "2 7/2 4 7/2 5/2", "5 1 4 5 1", "1 3/2 7/2 3 7/2",
    };
    return v;
}

}  // namespace testing_support
