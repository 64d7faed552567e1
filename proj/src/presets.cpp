#include "mixquant/presets.hpp"

#include "mixquant/error.hpp"

namespace mixquant {

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"connected-p", "gapped-thirds-p", "gapped-sevenths-p"};
    return names;
}

MixedUniform make_preset(std::string_view name, double p) {
    if (!(p > 0.0 && p < 1.0)) throw Error(ErrorKind::Weight, "preset weight p must lie in (0, 1)");
    const double q = 1.0 - p;
    if (name == "connected-p") return make_mixed_uniform({{0.0, 1.0, p}, {1.0, 2.0, q}});
    if (name == "gapped-thirds-p") return make_mixed_uniform({{0.0, 1.0 / 3.0, p}, {2.0 / 3.0, 1.0, q}});
    if (name == "gapped-sevenths-p") return make_mixed_uniform({{0.0, 7.0 / 15.0, p}, {8.0 / 15.0, 1.0, q}});
    throw Error(ErrorKind::Parse, "unknown preset '" + std::string(name) + "'");
}

}  // namespace mixquant
