#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "tautilt/representation.hpp"

namespace fixtures {

inline std::string read(const std::string& name) {
    std::ifstream in(std::string(TAUTILT_FIXTURE_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline tautilt::AlgebraPtr load(const std::string& name) { return tautilt::load_algebra(read(name)); }

// Arrow matrices given as integer rows; an empty entry means the zero map.
inline tautilt::Representation from_maps(const tautilt::AlgebraPtr& a, std::vector<std::size_t> dims,
                                         std::vector<std::vector<std::vector<long long>>> maps) {
    std::vector<tautilt::Matrix> ms;
    for (std::size_t k = 0; k < a->arrows().size(); ++k) {
        const tautilt::Arrow& arr = a->arrows()[k];
        tautilt::Matrix m(dims[static_cast<std::size_t>(arr.target)], dims[static_cast<std::size_t>(arr.source)]);
        if (k < maps.size() && !maps[k].empty()) m = tautilt::Matrix::from_ints(maps[k]);
        ms.push_back(m);
    }
    return {a, std::move(dims), std::move(ms)};
}

}  // namespace fixtures
