#include "mixquant/distribution_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mixquant/error.hpp"

namespace mixquant {

MixedUniform parse_distribution(const std::string& text) {
    std::vector<Segment> segments;
    try {
        const auto doc = nlohmann::json::parse(text);
        for (const auto& s : doc.at("segments"))
            segments.push_back({s.at("lo").get<double>(), s.at("hi").get<double>(), s.at("weight").get<double>()});
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    return make_mixed_uniform(std::move(segments));
}

MixedUniform load_distribution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_distribution(buf.str());
}

}  // namespace mixquant
