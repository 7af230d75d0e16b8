#include "wz/cli.hpp"

#include <boost/uuid/detail/sha1.hpp>

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>

namespace wz::cli {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) {
        if (r.size() != header.size()) throw std::invalid_argument("csv: row width differs from header");
        line(r);
    }
}

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    boost::uuids::detail::sha1 h;
    h.process_bytes(data.data(), data.size());
    boost::uuids::detail::sha1::digest_type d;
    h.get_digest(d);
    std::ostringstream os;
    for (unsigned w : d) os << std::hex << std::setw(8) << std::setfill('0') << w;
    return os.str();
}

void Manifest::add_input(const std::string& path) { inputs.emplace_back(path, file_digest(path)); }

nlohmann::json Manifest::to_json() const {
    nlohmann::json j;
    j["tool"] = "wz";
    j["version"] = kToolVersion;
    j["command_line"] = command_line;
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    j["kappa"] = kappa.empty() ? nlohmann::json(nullptr) : nlohmann::json(kappa);
    j["started"] = started;
    j["finished"] = finished;
    nlohmann::json in = nlohmann::json::array();
    for (const auto& [p, d] : inputs) in.push_back({{"path", p}, {"sha1", d}});
    j["inputs"] = in;
    if (!config.is_null()) j["config"] = config;
    return j;
}

std::string utc_now() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string checked_rational(const std::string& text) {
    static const std::regex re(R"(-?[0-9]+(/[0-9]+)?)");
    if (!std::regex_match(text, re)) throw UsageError("expected a rational p/q, got '" + text + "'");
    return text;
}

}  // namespace wz::cli
